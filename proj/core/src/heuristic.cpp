#include "atmp/heuristic.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "assignment_internal.hpp"
#include "atmp/evaluator.hpp"

namespace atmp {

void check_params(const SearchParams& p) {
  if (p.starts == 0) throw std::invalid_argument("starts must be at least 1");
  if (p.max_no_improve == 0) throw std::invalid_argument("max_no_improve must be at least 1");
  const Neighborhood& n = p.neighborhood;
  if (!n.toggle && !n.retype && !n.change_mode && !n.swap_pair) {
    throw std::invalid_argument("at least one neighborhood move must be enabled");
  }
}

std::vector<Configuration> neighbors(const Configuration& c, std::size_t modes, const Neighborhood& nb) {
  std::vector<Configuration> out;
  const std::size_t n = c.facilities.size();
  auto with = [&](std::size_t j, FacilityState s) {
    Configuration next = c;
    next.facilities[j] = s;
    out.push_back(std::move(next));
  };
  for (std::size_t j = 0; j < n; ++j) {
    const FacilityState& f = c.facilities[j];
    if (nb.toggle) with(j, f.kind == FacilityKind::closed ? FacilityState::manufacturing(0) : FacilityState::closed());
    if (nb.retype && f.kind == FacilityKind::manufacturing) with(j, FacilityState::cryo());
    if (nb.retype && f.kind == FacilityKind::cryo) with(j, FacilityState::manufacturing(0));
    if (nb.change_mode && f.kind == FacilityKind::manufacturing) {
      for (std::size_t k = 0; k < modes; ++k) {
        if (static_cast<int>(k) != f.mode) with(j, FacilityState::manufacturing(static_cast<int>(k)));
      }
    }
  }
  if (nb.swap_pair) {
    for (std::size_t a = 0; a < n; ++a) {
      if (c.facilities[a].kind == FacilityKind::closed) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (c.facilities[b].kind != FacilityKind::closed) continue;
        Configuration next = c;
        std::swap(next.facilities[a], next.facilities[b]);
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

namespace {

struct Score {
  bool feasible = false;
  double violation = 0.0;
  ScalarKey key;
};

bool improves(const Score& a, const Score& b) {
  if (a.feasible != b.feasible) return a.feasible;
  if (!a.feasible) return a.violation < b.violation - 1e-12;
  return better(a.key, b.key);
}

class Search {
 public:
  Search(const Instance& inst, const Scalarization& s, const SearchParams& params)
      : inst_(inst), s_(s), params_(params), rng_(params.seed) {
    options_.paper_strict = params.paper_strict;
    options_.node_limit = params.assignment_node_limit;
    options_.heuristic_only = inst.order_count() > params.exact_assignment_orders;
    for (std::size_t j = 0; j < inst.location_count(); ++j) {
      double reach = 0.0;
      for (std::size_t i = 0; i < inst.order_count(); ++i) {
        const double shelf = inst.order(i).shelf_life_hours + kFeasibilityTolerance;
        if (inst.to_location(i, j) <= shelf && inst.to_order(j, i) <= shelf) reach += 1.0;
      }
      attractiveness_.push_back(reach);
    }
  }

  HeuristicResult run(const std::optional<Configuration>& warm_start) {
    HeuristicResult out;
    Configuration best_config = warm_start.value_or(Configuration::all_closed(inst_.location_count()));
    Score best = descend(best_config);
    out.starts_run = 1;
    std::size_t stale = 0;
    for (std::size_t start = 1; start < params_.starts && stale < params_.max_no_improve; ++start) {
      Configuration c = random_configuration();
      const Score s = descend(c);
      ++out.starts_run;
      if (improves(s, best)) {
        best = s;
        best_config = std::move(c);
        stale = 0;
      } else if (best.feasible) {
        ++stale;
      }
    }
    const AssignmentResult r = best_assignment(inst_, best_config, s_, options_);
    out.feasible = r.feasible;
    out.solution = r.solution;
    out.objective = r.objective;
    out.configuration = std::move(best_config);
    out.evaluations = evaluations_;
    return out;
  }

 private:
  Score score(const Configuration& c) {
    ++evaluations_;
    const detail::Sites sites = detail::sites_of(c);
    detail::Subproblem p;
    p.scalarization = &s_;
    for (std::size_t j = 0; j < c.facilities.size(); ++j) {
      if (c.facilities[j].kind == FacilityKind::manufacturing) p.setup_cost += inst_.location(j).setup_cost_manufacturing;
      if (c.facilities[j].kind == FacilityKind::cryo) p.setup_cost += inst_.location(j).setup_cost_cryo;
    }
    p.choices.reserve(inst_.order_count());
    for (std::size_t i = 0; i < inst_.order_count(); ++i) {
      p.choices.push_back(detail::build_choices(inst_, sites, i, params_.paper_strict));
    }
    const detail::SubproblemResult r = detail::solve_subproblem(p, options_);
    Score out;
    out.feasible = r.feasible;
    out.violation = r.violation;
    if (r.feasible) out.key = scalar_key(s_, r.objective);
    return out;
  }

  // First-improvement descent; `c` ends at a local optimum.
  Score descend(Configuration& c) {
    Score current = score(c);
    for (;;) {
      std::vector<Configuration> moves = neighbors(c, inst_.mode_count(), params_.neighborhood);
      for (std::size_t n = moves.size(); n > 1; --n) std::swap(moves[n - 1], moves[rng_() % n]);
      bool moved = false;
      for (auto& m : moves) {
        const Score s = score(m);
        if (improves(s, current)) {
          current = s;
          c = std::move(m);
          moved = true;
          break;
        }
      }
      if (!moved) return current;
    }
  }

  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  Configuration random_configuration() {
    Configuration c = Configuration::all_closed(inst_.location_count());
    const double top = attractiveness_.empty() ? 0.0 : *std::max_element(attractiveness_.begin(), attractiveness_.end());
    for (std::size_t j = 0; j < c.facilities.size(); ++j) {
      // +1 so locations useful only as cryo sites still get opened.
      const double p_open = 0.5 * (attractiveness_[j] + 1.0) / (top + 1.0);
      if (uniform() >= p_open) continue;
      if (uniform() < 1.0 / 3.0) {
        c.facilities[j] = FacilityState::cryo();
      } else {
        c.facilities[j] = FacilityState::manufacturing(static_cast<int>(rng_() % inst_.mode_count()));
      }
    }
    return c;
  }

  const Instance& inst_;
  const Scalarization& s_;
  const SearchParams& params_;
  AssignmentOptions options_;
  std::mt19937_64 rng_;
  std::vector<double> attractiveness_;
  std::size_t evaluations_ = 0;
};

}  // namespace

HeuristicResult local_search(const Instance& instance, const Scalarization& scalarization, const SearchParams& params,
                             const std::optional<Configuration>& warm_start) {
  check_scalarization(scalarization);
  check_params(params);
  if (warm_start && warm_start->facilities.size() != instance.location_count()) {
    throw std::invalid_argument("warm start does not match the instance's location count");
  }
  return Search(instance, scalarization, params).run(warm_start);
}

ParetoFront front_heuristic(const Instance& instance, const FrontGrid& grid, const SearchParams& params) {
  check_params(params);
  const CellSolver solver = [&](const EpsilonConstraint& cell, const std::optional<Configuration>& warm) {
    HeuristicResult r = local_search(instance, cell, params, warm);
    CellResult out;
    out.feasible = r.feasible;
    out.solution = std::move(r.solution);
    out.objective = r.objective;
    out.proven = false;
    out.configuration = std::move(r.configuration);
    return out;
  };
  return epsilon_sweep(instance, grid, solver);
}

}  // namespace atmp
