#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "assignment_internal.hpp"
#include "atmp/evaluator.hpp"

namespace atmp {

Configuration Configuration::all_closed(std::size_t locations) {
  return Configuration{std::vector<FacilityState>(locations)};
}

Configuration Configuration::from_solution(const Solution& s) {
  Configuration c = all_closed(s.location_count());
  for (std::size_t j = 0; j < s.location_count(); ++j) {
    if (s.manufacturing_open[j]) {
      const std::size_t k = s.mode_assignment.first_in_row(j);
      c.facilities[j] = FacilityState::manufacturing(k < s.mode_count() ? static_cast<int>(k) : 0);
    } else if (s.cryo_open[j]) {
      c.facilities[j] = FacilityState::cryo();
    }
  }
  return c;
}

std::size_t Configuration::open_count() const {
  return static_cast<std::size_t>(std::count_if(facilities.begin(), facilities.end(),
                                                [](const FacilityState& f) { return f.kind != FacilityKind::closed; }));
}

void Configuration::apply_to(Solution& s) const {
  for (std::size_t j = 0; j < facilities.size(); ++j) {
    const FacilityState& f = facilities[j];
    s.manufacturing_open[j] = f.kind == FacilityKind::manufacturing;
    s.cryo_open[j] = f.kind == FacilityKind::cryo;
    for (std::size_t k = 0; k < s.mode_count(); ++k) {
      s.mode_assignment.set(j, k, f.kind == FacilityKind::manufacturing && f.mode == static_cast<int>(k));
    }
  }
}

namespace detail {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

ObjectiveVector as_objective(const OrderChoice& c) { return {c.waiting_time_hours, c.cost, c.coverage}; }

double primary_of(const EpsilonConstraint& e, double w, double c, int v) {
  switch (e.primary) {
    case Objective::waiting_time: return w;
    case Objective::cost: return c;
    case Objective::coverage: return -static_cast<double>(v);
  }
  return w;
}

bool lex_less(const ScalarKey& a, const ScalarKey& b) {
  return std::lexicographical_compare(a.values.begin(), a.values.begin() + a.size, b.values.begin(),
                                      b.values.begin() + b.size);
}

ScalarKey key_difference(ScalarKey a, const ScalarKey& b) {
  for (int l = 0; l < a.size; ++l) a.values[l] -= b.values[l];
  return a;
}

struct Totals {
  double w = 0.0;
  double c = 0.0;
  int v = 0;

  ObjectiveVector objective() const { return {w, c, v}; }
};

Totals totals_of(const Subproblem& p, const std::vector<int>& pick) {
  Totals t;
  t.c = p.setup_cost;
  for (std::size_t i = 0; i < pick.size(); ++i) {
    const OrderChoice& ch = p.choices[i][static_cast<std::size_t>(pick[i])];
    t.w += ch.waiting_time_hours;
    t.c += ch.cost;
    t.v += ch.coverage;
  }
  return t;
}

double violation_of(const EpsilonConstraint& e, const ObjectiveVector& o) {
  double v = 0.0;
  if (e.min_coverage) v += std::max(0, *e.min_coverage - o.coverage);
  if (e.max_cost) v += std::max(0.0, o.cost - *e.max_cost) / std::max(1.0, std::abs(*e.max_cost));
  if (e.max_waiting_time) {
    v += std::max(0.0, o.waiting_time_hours - *e.max_waiting_time) / std::max(1.0, std::abs(*e.max_waiting_time));
  }
  return v;
}

// Picks the cheapest choice per order under `score` (first on ties), then
// raises coverage to `min_coverage` by converting the uncovered orders whose
// best covered choice costs the least extra. Returns the shortfall.
template <typename Score, typename Less>
int pick_with_coverage_floor(const Subproblem& p, int min_coverage, const Score& score, const Less& less,
                             std::vector<int>& pick) {
  const std::size_t n = p.choices.size();
  pick.assign(n, 0);
  int covered = 0;
  std::vector<int> best_covered(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ch = p.choices[i];
    auto best = score(ch[0]);
    for (std::size_t c = 1; c < ch.size(); ++c) {
      auto s = score(ch[c]);
      if (less(s, best)) {
        best = s;
        pick[i] = static_cast<int>(c);
      }
      if (ch[c].coverage > 0 && (best_covered[i] < 0 || less(s, score(ch[static_cast<std::size_t>(best_covered[i])])))) {
        best_covered[i] = static_cast<int>(c);
      }
    }
    covered += ch[static_cast<std::size_t>(pick[i])].coverage;
  }
  if (covered >= min_coverage) return 0;

  using ScoreT = decltype(score(p.choices[0][0]));
  std::vector<std::pair<ScoreT, std::size_t>> upgrades;
  for (std::size_t i = 0; i < n; ++i) {
    if (p.choices[i][static_cast<std::size_t>(pick[i])].coverage > 0 || best_covered[i] < 0) continue;
    const auto& ch = p.choices[i];
    upgrades.emplace_back(score(ch[static_cast<std::size_t>(best_covered[i])]) - score(ch[static_cast<std::size_t>(pick[i])]), i);
  }
  std::stable_sort(upgrades.begin(), upgrades.end(),
                   [&](const auto& a, const auto& b) { return less(a.first, b.first); });
  for (const auto& [delta, i] : upgrades) {
    if (covered >= min_coverage) break;
    pick[i] = best_covered[i];
    ++covered;
  }
  return std::max(0, min_coverage - covered);
}

SubproblemResult solve_unbounded(const Subproblem& p) {
  const Scalarization& s = *p.scalarization;
  const auto* e = std::get_if<EpsilonConstraint>(&s);
  const int floor = e && e->min_coverage ? *e->min_coverage : 0;
  auto score = [&s](const OrderChoice& c) { return scalar_key(s, as_objective(c)); };

  SubproblemResult r;
  const std::size_t n = p.choices.size();
  r.pick.assign(n, 0);
  std::vector<int> best_covered(n, -1);
  int covered = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ch = p.choices[i];
    ScalarKey best = score(ch[0]);
    ScalarKey best_cov;
    for (std::size_t c = 1; c < ch.size(); ++c) {
      const ScalarKey k = score(ch[c]);
      if (better(k, best)) {
        best = k;
        r.pick[i] = static_cast<int>(c);
      }
      if (best_covered[i] < 0 || better(k, best_cov)) {
        best_covered[i] = static_cast<int>(c);
        best_cov = k;
      }
    }
    covered += ch[static_cast<std::size_t>(r.pick[i])].coverage;
  }

  // Coverage floor: cover the extra orders whose switch costs the least.
  // Sums of keys preserve lexicographic order, so the smallest deltas are
  // optimal.
  if (covered < floor) {
    std::vector<std::pair<ScalarKey, std::size_t>> upgrades;
    for (std::size_t i = 0; i < n; ++i) {
      if (r.pick[i] != 0 || best_covered[i] < 0) continue;
      const auto& ch = p.choices[i];
      upgrades.emplace_back(key_difference(score(ch[static_cast<std::size_t>(best_covered[i])]), score(ch[0])), i);
    }
    std::stable_sort(upgrades.begin(), upgrades.end(),
                     [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    for (const auto& [delta, i] : upgrades) {
      if (covered >= floor) break;
      r.pick[i] = best_covered[i];
      ++covered;
    }
  }

  const int shortfall = std::max(0, floor - covered);
  r.objective = totals_of(p, r.pick).objective();
  r.feasible = shortfall == 0;
  r.violation = static_cast<double>(shortfall);
  r.primary_bound = r.feasible ? scalar_key(s, r.objective).primary() : kInfinity;
  return r;
}

// Exact search for epsilon problems with cost and/or waiting-time bounds:
// a multiple-choice knapsack solved by depth-first branch-and-bound.
class BoundedAssignmentSearch {
 public:
  BoundedAssignmentSearch(const Subproblem& p, std::uint64_t node_limit)
      : p_(p), eps_(std::get<EpsilonConstraint>(*p.scalarization)), node_limit_(node_limit) {
    const std::size_t n = p.choices.size();
    order_choices_.resize(n);
    min_w_.assign(n, kInfinity);
    min_c_.assign(n, kInfinity);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& ch = p.choices[i];
      std::vector<int> kept;
      for (std::size_t b = 0; b < ch.size(); ++b) {
        bool dominated = false;
        for (std::size_t a = 0; a < ch.size() && !dominated; ++a) {
          if (a == b || ch[a].coverage != ch[b].coverage) continue;
          const bool no_worse = ch[a].waiting_time_hours <= ch[b].waiting_time_hours && ch[a].cost <= ch[b].cost;
          const bool strictly = ch[a].waiting_time_hours < ch[b].waiting_time_hours || ch[a].cost < ch[b].cost;
          dominated = no_worse && (strictly || a < b);
        }
        if (dominated) continue;
        kept.push_back(static_cast<int>(b));
        if (ch[b].coverage > 0) {
          min_w_[i] = std::min(min_w_[i], ch[b].waiting_time_hours);
          min_c_[i] = std::min(min_c_[i], ch[b].cost);
        }
      }
      std::stable_sort(kept.begin(), kept.end(), [&](int a, int b) {
        return lex_less(scalar_key(*p.scalarization, as_objective(ch[static_cast<std::size_t>(a)])),
                        scalar_key(*p.scalarization, as_objective(ch[static_cast<std::size_t>(b)])));
      });
      order_choices_[i] = std::move(kept);
    }
    current_.assign(n, 0);
  }

  SubproblemResult run() {
    SubproblemResult r;
    const Bound root = bound(0, 0.0, p_.setup_cost, 0);
    r.primary_bound = root.feasible ? root.primary : kInfinity;
    if (root.feasible) descend(0, 0.0, p_.setup_cost, 0);
    r.proven = !aborted_;
    if (have_incumbent_) {
      r.feasible = true;
      r.pick = best_;
      r.objective = totals_of(p_, best_).objective();
      if (r.proven) r.primary_bound = scalar_key(*p_.scalarization, r.objective).primary();
    } else {
      r.pick.assign(p_.choices.size(), 0);
      r.objective = totals_of(p_, r.pick).objective();
      if (r.proven) r.primary_bound = kInfinity;
    }
    return r;
  }

 private:
  struct Bound {
    bool feasible = true;
    double primary = 0.0;
  };

  // Admissible completion bound for orders t.. given accumulated totals.
  Bound bound(std::size_t t, double w, double c, int v) {
    const int need = eps_.min_coverage ? std::max(0, *eps_.min_coverage - v) : 0;
    scratch_w_.clear();
    scratch_c_.clear();
    for (std::size_t i = t; i < p_.choices.size(); ++i) {
      if (std::isfinite(min_w_[i])) {
        scratch_w_.push_back(min_w_[i]);
        scratch_c_.push_back(min_c_[i]);
      }
    }
    const int coverable = static_cast<int>(scratch_w_.size());
    if (coverable < need) return {false, kInfinity};
    double add_w = 0.0, add_c = 0.0;
    if (need > 0) {
      std::nth_element(scratch_w_.begin(), scratch_w_.begin() + (need - 1), scratch_w_.end());
      std::nth_element(scratch_c_.begin(), scratch_c_.begin() + (need - 1), scratch_c_.end());
      for (int q = 0; q < need; ++q) {
        add_w += scratch_w_[static_cast<std::size_t>(q)];
        add_c += scratch_c_[static_cast<std::size_t>(q)];
      }
    }
    if (eps_.max_cost && c + add_c > *eps_.max_cost + value_tolerance(*eps_.max_cost)) return {false, kInfinity};
    if (eps_.max_waiting_time && w + add_w > *eps_.max_waiting_time + value_tolerance(*eps_.max_waiting_time)) {
      return {false, kInfinity};
    }
    switch (eps_.primary) {
      case Objective::waiting_time: return {true, w + add_w};
      case Objective::cost: return {true, c + add_c};
      case Objective::coverage: return {true, -static_cast<double>(v + coverable)};
    }
    return {true, 0.0};
  }

  void descend(std::size_t t, double w, double c, int v) {
    if (aborted_) return;
    if (++nodes_ > node_limit_) {
      aborted_ = true;
      return;
    }
    if (t == p_.choices.size()) {
      const ObjectiveVector o{w, c, v};
      if (!satisfies_bounds(*p_.scalarization, o)) return;
      const ScalarKey key = scalar_key(*p_.scalarization, o);
      if (!have_incumbent_ || better(key, incumbent_key_)) {
        have_incumbent_ = true;
        incumbent_key_ = key;
        best_ = current_;
      }
      return;
    }
    const Bound b = bound(t, w, c, v);
    if (!b.feasible) return;
    if (have_incumbent_) {
      const double inc = incumbent_key_.primary();
      if (b.primary > inc + value_tolerance(inc)) return;
    }
    for (int choice : order_choices_[t]) {
      const OrderChoice& ch = p_.choices[t][static_cast<std::size_t>(choice)];
      current_[t] = choice;
      descend(t + 1, w + ch.waiting_time_hours, c + ch.cost, v + ch.coverage);
      if (aborted_) return;
    }
    current_[t] = 0;
  }

  const Subproblem& p_;
  const EpsilonConstraint& eps_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<std::vector<int>> order_choices_;
  std::vector<double> min_w_, min_c_;
  std::vector<double> scratch_w_, scratch_c_;
  std::vector<int> current_;
  std::vector<int> best_;
  bool have_incumbent_ = false;
  ScalarKey incumbent_key_;
};

// Lagrangian heuristic for bounded epsilon problems: price the bounded
// objectives into the primary one, search the price that restores
// feasibility, then improve greedily one order at a time.
SubproblemResult solve_lagrangian(const Subproblem& p) {
  const Scalarization& s = *p.scalarization;
  const auto& e = std::get<EpsilonConstraint>(s);
  const int floor = e.min_coverage ? *e.min_coverage : 0;
  const double cost_weight = e.max_cost ? 1.0 / std::max(1.0, std::abs(*e.max_cost)) : 0.0;
  const double time_weight = e.max_waiting_time ? 1.0 / std::max(1.0, std::abs(*e.max_waiting_time)) : 0.0;

  bool have_best = false;
  std::vector<int> best;
  ScalarKey best_key;
  std::vector<int> least_violating;
  double least_violation = kInfinity;

  auto consider = [&](const std::vector<int>& pick) {
    const ObjectiveVector o = totals_of(p, pick).objective();
    if (satisfies_bounds(s, o)) {
      const ScalarKey key = scalar_key(s, o);
      if (!have_best || better(key, best_key)) {
        have_best = true;
        best = pick;
        best_key = key;
      }
      return true;
    }
    const double viol = violation_of(e, o);
    if (viol < least_violation) {
      least_violation = viol;
      least_violating = pick;
    }
    return false;
  };

  auto priced = [&](double price) {
    std::vector<int> pick;
    auto score = [&](const OrderChoice& c) {
      return primary_of(e, c.waiting_time_hours, c.cost, c.coverage) +
             price * (cost_weight * c.cost + time_weight * c.waiting_time_hours);
    };
    pick_with_coverage_floor(p, floor, score, std::less<double>{}, pick);
    return pick;
  };

  if (!consider(priced(0.0))) {
    double lo = 0.0;
    double hi = 1e-3;
    bool found = false;
    while (hi < 1e12) {
      if (consider(priced(hi))) {
        found = true;
        break;
      }
      lo = hi;
      hi *= 4.0;
    }
    if (found) {
      for (int iter = 0; iter < 40; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (consider(priced(mid))) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
    }
  }

  SubproblemResult r;
  r.proven = false;
  r.primary_bound = -kInfinity;
  if (!have_best) {
    r.feasible = false;
    r.pick = least_violating.empty() ? std::vector<int>(p.choices.size(), 0) : least_violating;
    r.objective = totals_of(p, r.pick).objective();
    r.violation = violation_of(e, r.objective);
    return r;
  }

  // Single-order exchanges that keep the bounds and improve the key.
  std::vector<int> pick = best;
  Totals t = totals_of(p, pick);
  for (int pass = 0; pass < 8; ++pass) {
    bool improved = false;
    for (std::size_t i = 0; i < pick.size(); ++i) {
      const OrderChoice& cur = p.choices[i][static_cast<std::size_t>(pick[i])];
      int best_choice = pick[i];
      ObjectiveVector best_o = t.objective();
      for (std::size_t c = 0; c < p.choices[i].size(); ++c) {
        const OrderChoice& ch = p.choices[i][c];
        const ObjectiveVector o{t.w - cur.waiting_time_hours + ch.waiting_time_hours, t.c - cur.cost + ch.cost,
                                t.v - cur.coverage + ch.coverage};
        if (!satisfies_bounds(s, o)) continue;
        if (better(scalar_key(s, o), scalar_key(s, best_o))) {
          best_o = o;
          best_choice = static_cast<int>(c);
        }
      }
      if (best_choice != pick[i]) {
        pick[i] = best_choice;
        t = totals_of(p, pick);
        improved = true;
      }
    }
    if (!improved) break;
  }
  consider(pick);
  r.feasible = true;
  r.pick = best;
  r.objective = totals_of(p, best).objective();
  return r;
}

}  // namespace

Sites sites_of(const Configuration& configuration) {
  Sites sites;
  for (std::size_t j = 0; j < configuration.facilities.size(); ++j) {
    const FacilityState& f = configuration.facilities[j];
    if (f.kind == FacilityKind::manufacturing) sites.manufacturing.emplace_back(static_cast<int>(j), f.mode);
    if (f.kind == FacilityKind::cryo) sites.cryo.push_back(static_cast<int>(j));
  }
  return sites;
}

std::vector<OrderChoice> build_choices(const Instance& inst, const Sites& sites, std::size_t i, bool paper_strict) {
  std::vector<OrderChoice> out;
  out.push_back(OrderChoice{});
  const double tol = kFeasibilityTolerance;
  const double shelf = inst.order(i).shelf_life_hours;
  const double frozen_limit = shelf + inst.big_t_hours();
  const double leg_limit = inst.cryo_leg_limit_hours();
  for (const auto& [j, k] : sites.manufacturing) {
    const auto uj = static_cast<std::size_t>(j);
    const auto uk = static_cast<std::size_t>(k);
    const double repeats = 1.0 + inst.failure_rate(i, uk);
    const double to = inst.to_location(i, uj);
    const double back = inst.to_order(uj, i);
    const Mode& mode = inst.mode(uk);
    if (to <= shelf + tol && back <= shelf + tol) {
      out.push_back({ChoiceKind::fresh, j, -1, k, repeats * (to + mode.production_time_fresh_hours) + back,
                     repeats * inst.op_cost_fresh(i, uj, uk), 1});
    }
    if (to > frozen_limit + tol || back > frozen_limit + tol) continue;
    const double frozen_cost = repeats * inst.op_cost_frozen(i, uj, uk);
    for (int jp : sites.cryo) {
      const auto ujp = static_cast<std::size_t>(jp);
      const double leg = inst.to_location(i, ujp);
      if (leg > leg_limit + tol) continue;
      const double to_mfg = leg + inst.between_locations(ujp, uj);
      out.push_back({ChoiceKind::frozen, j, jp, k, repeats * (to_mfg + mode.production_time_frozen_hours) + back,
                     frozen_cost, 1});
    }
    if (paper_strict) {
      out.push_back({ChoiceKind::frozen_without_cryo, j, -1, k, repeats * mode.production_time_frozen_hours + back,
                     frozen_cost, 1});
    }
  }
  return out;
}

SubproblemResult solve_subproblem(const Subproblem& p, const AssignmentOptions& options) {
  const auto* e = std::get_if<EpsilonConstraint>(p.scalarization);
  const bool bounded = e != nullptr && (e->max_cost || e->max_waiting_time);
  if (!bounded) return solve_unbounded(p);
  if (options.heuristic_only) return solve_lagrangian(p);

  SubproblemResult exact = BoundedAssignmentSearch(p, options.node_limit).run();
  if (exact.proven) return exact;
  SubproblemResult heuristic = solve_lagrangian(p);
  SubproblemResult out = exact;
  if (heuristic.feasible &&
      (!exact.feasible ||
       better(scalar_key(*p.scalarization, heuristic.objective), scalar_key(*p.scalarization, exact.objective)))) {
    out = heuristic;
  }
  out.proven = false;
  out.primary_bound = exact.primary_bound;
  if (!out.feasible) out.violation = heuristic.violation;
  return out;
}

}  // namespace detail

std::vector<OrderChoice> order_choices(const Instance& instance, const Configuration& configuration,
                                       std::size_t order, bool paper_strict) {
  return detail::build_choices(instance, detail::sites_of(configuration), order, paper_strict);
}

namespace {

double setup_cost_of(const Instance& inst, const Configuration& c) {
  double total = 0.0;
  for (std::size_t j = 0; j < c.facilities.size(); ++j) {
    if (c.facilities[j].kind == FacilityKind::manufacturing) total += inst.location(j).setup_cost_manufacturing;
    if (c.facilities[j].kind == FacilityKind::cryo) total += inst.location(j).setup_cost_cryo;
  }
  return total;
}

void check_configuration(const Instance& inst, const Configuration& c) {
  if (c.facilities.size() != inst.location_count()) {
    throw std::invalid_argument("configuration has " + std::to_string(c.facilities.size()) + " locations, instance has " +
                                std::to_string(inst.location_count()));
  }
  for (const auto& f : c.facilities) {
    if (f.kind == FacilityKind::manufacturing && (f.mode < 0 || f.mode >= static_cast<int>(inst.mode_count()))) {
      throw std::invalid_argument("configuration references an unknown mode");
    }
  }
}

}  // namespace

AssignmentResult best_assignment(const Instance& inst, const Configuration& config, const Scalarization& scalarization,
                                 const AssignmentOptions& options) {
  check_scalarization(scalarization);
  check_configuration(inst, config);
  const detail::Sites sites = detail::sites_of(config);
  detail::Subproblem p;
  p.scalarization = &scalarization;
  p.setup_cost = setup_cost_of(inst, config);
  p.choices.reserve(inst.order_count());
  for (std::size_t i = 0; i < inst.order_count(); ++i) {
    p.choices.push_back(detail::build_choices(inst, sites, i, options.paper_strict));
  }
  const detail::SubproblemResult sub = detail::solve_subproblem(p, options);

  AssignmentResult out;
  out.feasible = sub.feasible;
  out.proven = sub.proven;
  out.violation = sub.violation;
  out.solution = Solution::empty(inst);
  config.apply_to(out.solution);
  out.choices.reserve(inst.order_count());
  for (std::size_t i = 0; i < inst.order_count(); ++i) {
    const OrderChoice& ch = p.choices[i][static_cast<std::size_t>(sub.pick[i])];
    out.choices.push_back(ch);
    if (ch.kind == ChoiceKind::uncovered) continue;
    out.solution.manufacturing_assignment.set(i, static_cast<std::size_t>(ch.manufacturing), true);
    if (ch.kind == ChoiceKind::frozen || ch.kind == ChoiceKind::frozen_without_cryo) out.solution.cryopreserved[i] = 1;
    if (ch.kind == ChoiceKind::frozen) out.solution.cryo_assignment.set(i, static_cast<std::size_t>(ch.cryo), true);
  }
  out.objective = evaluate(inst, out.solution);
  return out;
}

double lower_bound(const Instance& inst, const PartialConfiguration& partial, const Scalarization& scalarization,
                   const AssignmentOptions& options) {
  check_scalarization(scalarization);
  if (partial.size() != inst.location_count()) {
    throw std::invalid_argument("partial configuration does not match the instance's location count");
  }
  detail::Sites sites;
  double setup = 0.0;
  for (std::size_t j = 0; j < partial.size(); ++j) {
    const int loc = static_cast<int>(j);
    if (!partial[j]) {
      for (std::size_t k = 0; k < inst.mode_count(); ++k) sites.manufacturing.emplace_back(loc, static_cast<int>(k));
      sites.cryo.push_back(loc);
      continue;
    }
    const FacilityState& f = *partial[j];
    if (f.kind == FacilityKind::manufacturing) {
      sites.manufacturing.emplace_back(loc, f.mode);
      setup += inst.location(j).setup_cost_manufacturing;
    } else if (f.kind == FacilityKind::cryo) {
      sites.cryo.push_back(loc);
      setup += inst.location(j).setup_cost_cryo;
    }
  }
  detail::Subproblem p;
  p.scalarization = &scalarization;
  p.setup_cost = setup;
  for (std::size_t i = 0; i < inst.order_count(); ++i) {
    p.choices.push_back(detail::build_choices(inst, sites, i, options.paper_strict));
  }
  AssignmentOptions exact_options = options;
  exact_options.heuristic_only = false;
  return detail::solve_subproblem(p, exact_options).primary_bound;
}

}  // namespace atmp
