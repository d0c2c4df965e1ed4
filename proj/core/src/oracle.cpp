#include "atmp/oracle.hpp"

#include <limits>
#include <string>

namespace atmp {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) { return b > kSaturated - a ? kSaturated : a + b; }

// Facility code per location: 0 closed, 1 cryo, 2 + k manufacturing in mode k.
struct Network {
  std::vector<int> code;
  int y_m(std::size_t j) const { return code[j] >= 2 ? 1 : 0; }
  int y_c(std::size_t j) const { return code[j] == 1 ? 1 : 0; }
  int m(std::size_t j, std::size_t k) const { return code[j] == 2 + static_cast<int>(k) ? 1 : 0; }
};

// One order's decisions; -1 means no assignment.
struct Option {
  int z = 0;
  int mfg = -1;
  int cryo = -1;
};

std::vector<Option> options_for(const Instance& inst, const Network& net, std::size_t i, bool paper_strict) {
  std::vector<Option> out;
  const int n_j = static_cast<int>(inst.location_count());
  const double tol = kFeasibilityTolerance;
  for (int z = 0; z <= 1; ++z) {
    for (int mfg = -1; mfg < n_j; ++mfg) {
      for (int cryo = -1; cryo < n_j; ++cryo) {
        const int xm = mfg >= 0 ? 1 : 0;
        const int xc = cryo >= 0 ? 1 : 0;
        if (xc > z) continue;
        if (xm && !net.y_m(static_cast<std::size_t>(mfg))) continue;
        if (xc && !net.y_c(static_cast<std::size_t>(cryo))) continue;
        const double limit = inst.order(i).shelf_life_hours + z * inst.big_t_hours();
        if (xm && inst.to_location(i, static_cast<std::size_t>(mfg)) > limit + tol) continue;
        if (xm && inst.to_order(static_cast<std::size_t>(mfg), i) > limit + tol) continue;
        if (xc && inst.to_location(i, static_cast<std::size_t>(cryo)) > inst.cryo_leg_limit_hours() + tol) continue;
        if (!paper_strict && xc < z * xm) continue;
        out.push_back({z, mfg, cryo});
      }
    }
  }
  return out;
}

// Visits configurations in lexicographic order, location 0 most significant.
template <typename Visit>
void for_each_network(const Instance& inst, const Visit& visit) {
  const std::size_t n_j = inst.location_count();
  const int codes = static_cast<int>(inst.mode_count()) + 2;
  Network net{std::vector<int>(n_j, 0)};
  for (;;) {
    if (!visit(net)) return;
    std::size_t pos = n_j;
    while (pos > 0) {
      --pos;
      if (++net.code[pos] < codes) break;
      net.code[pos] = 0;
      if (pos == 0) return;
    }
    if (n_j == 0) return;
  }
}

Solution build(const Instance& inst, const Network& net, const std::vector<std::vector<Option>>& options,
               const std::vector<std::size_t>& pick) {
  Solution s = Solution::empty(inst);
  for (std::size_t j = 0; j < inst.location_count(); ++j) {
    s.manufacturing_open[j] = static_cast<std::uint8_t>(net.y_m(j));
    s.cryo_open[j] = static_cast<std::uint8_t>(net.y_c(j));
    for (std::size_t k = 0; k < inst.mode_count(); ++k) s.mode_assignment.set(j, k, net.m(j, k) != 0);
  }
  for (std::size_t i = 0; i < pick.size(); ++i) {
    const Option& o = options[i][pick[i]];
    s.cryopreserved[i] = static_cast<std::uint8_t>(o.z);
    if (o.mfg >= 0) s.manufacturing_assignment.set(i, static_cast<std::size_t>(o.mfg), true);
    if (o.cryo >= 0) s.cryo_assignment.set(i, static_cast<std::size_t>(o.cryo), true);
  }
  return s;
}

}  // namespace

OracleTooLarge::OracleTooLarge(std::uint64_t count)
    : std::length_error("oracle enumeration refused: " +
                        (count == kSaturated ? std::string("more than 2^64") : std::to_string(count)) +
                        " solutions exceed the limit"),
      count_(count) {}

std::uint64_t oracle_solution_count(const Instance& inst, const OracleOptions& options) {
  std::uint64_t total = 0;
  for_each_network(inst, [&](const Network& net) {
    std::uint64_t product = 1;
    for (std::size_t i = 0; i < inst.order_count(); ++i) {
      product = saturating_mul(product, options_for(inst, net, i, options.paper_strict).size());
    }
    total = saturating_add(total, product);
    return total != kSaturated;
  });
  return total;
}

ObjectiveVector oracle_objective(const Instance& inst, const Solution& s) {
  const std::size_t n_i = inst.order_count();
  const std::size_t n_j = inst.location_count();
  const std::size_t n_k = inst.mode_count();
  ObjectiveVector out;
  for (std::size_t i = 0; i < n_i; ++i) {
    const double z = s.cryopreserved[i];
    for (std::size_t j = 0; j < n_j; ++j) {
      const double xm = s.manufacturing_assignment(i, j);
      double runs = 1.0;
      double production = 0.0;
      for (std::size_t k = 0; k < n_k; ++k) {
        const double m = s.mode_assignment(j, k);
        runs += inst.failure_rate(i, k) * m;
        production += ((1.0 - z) * inst.mode(k).production_time_fresh_hours +
                       z * inst.mode(k).production_time_frozen_hours) * m;
      }
      double via = 0.0;
      for (std::size_t jp = 0; jp < n_j; ++jp) {
        via += s.cryo_assignment(i, jp) * (inst.to_location(i, jp) + inst.between_locations(jp, j));
      }
      const double to_site = (1.0 - z) * inst.to_location(i, j) + z * via;
      out.waiting_time_hours += xm * (runs * (to_site + production) + inst.to_order(j, i));
      for (std::size_t k = 0; k < n_k; ++k) {
        const double op = (1.0 - z) * inst.op_cost_fresh(i, j, k) + z * inst.op_cost_frozen(i, j, k);
        out.cost += xm * (1.0 + inst.failure_rate(i, k)) * s.mode_assignment(j, k) * op;
      }
      out.coverage += static_cast<int>(xm);
    }
  }
  for (std::size_t j = 0; j < n_j; ++j) {
    out.cost += inst.location(j).setup_cost_manufacturing * s.manufacturing_open[j] +
                inst.location(j).setup_cost_cryo * s.cryo_open[j];
  }
  return out;
}

void enumerate_all(const Instance& inst, const std::function<bool(const Solution&, const ObjectiveVector&)>& visit,
                   const OracleOptions& options) {
  const std::uint64_t count = oracle_solution_count(inst, options);
  if (count > options.max_solutions) throw OracleTooLarge(count);
  const std::size_t n_i = inst.order_count();
  for_each_network(inst, [&](const Network& net) {
    std::vector<std::vector<Option>> opts(n_i);
    for (std::size_t i = 0; i < n_i; ++i) {
      opts[i] = options_for(inst, net, i, options.paper_strict);
      if (opts[i].empty()) return true;
    }
    std::vector<std::size_t> pick(n_i, 0);
    for (;;) {
      const Solution s = build(inst, net, opts, pick);
      if (!visit(s, oracle_objective(inst, s))) return false;
      std::size_t pos = n_i;
      for (;;) {
        if (pos == 0) return true;
        --pos;
        if (++pick[pos] < opts[pos].size()) break;
        pick[pos] = 0;
      }
    }
  });
}

ParetoFront oracle_front(const Instance& inst, const OracleOptions& options) {
  const double tol = kFeasibilityTolerance;
  auto covers = [tol](const ObjectiveVector& a, const ObjectiveVector& b) {
    return a.waiting_time_hours <= b.waiting_time_hours + tol && a.cost <= b.cost + tol && a.coverage >= b.coverage;
  };
  ParetoFront front;
  enumerate_all(
      inst,
      [&](const Solution& s, const ObjectiveVector& o) {
        for (const auto& p : front.points) {
          if (covers(p.objective, o)) return true;
        }
        std::vector<FrontPoint> kept;
        for (auto& p : front.points) {
          if (!covers(o, p.objective)) kept.push_back(std::move(p));
        }
        kept.push_back(FrontPoint{s, o, true, 0});
        front.points = std::move(kept);
        return true;
      },
      options);
  sort_front(front);
  return front;
}

}  // namespace atmp
