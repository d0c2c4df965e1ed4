#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "atmp/evaluator.hpp"

namespace atmp::testing {

InstanceData blank_data(std::size_t n_i, std::size_t n_j, std::size_t n_k, double shelf_life) {
  InstanceData d;
  for (std::size_t i = 0; i < n_i; ++i) d.orders.push_back({static_cast<int>(i), shelf_life});
  for (std::size_t j = 0; j < n_j; ++j) d.locations.push_back({static_cast<int>(j), 0.0, 0.0});
  for (std::size_t k = 0; k < n_k; ++k) d.modes.push_back({static_cast<int>(k), 0.0, 0.0});
  d.travel = TravelMatrix(n_i + n_j);
  d.op_cost_fresh.assign(n_i * n_j * n_k, 0.0);
  d.op_cost_frozen.assign(n_i * n_j * n_k, 0.0);
  d.failure_rate.assign(n_i * n_k, 0.0);
  return d;
}

void set_to_location(InstanceData& d, std::size_t i, std::size_t j, double hours) {
  d.travel.set(i, d.orders.size() + j, hours);
}

void set_to_order(InstanceData& d, std::size_t j, std::size_t i, double hours) {
  d.travel.set(d.orders.size() + j, i, hours);
}

void set_between(InstanceData& d, std::size_t from, std::size_t to, double hours) {
  d.travel.set(d.orders.size() + from, d.orders.size() + to, hours);
}

void set_op_cost(InstanceData& d, std::size_t i, std::size_t j, std::size_t k, double fresh, double frozen) {
  const std::size_t idx = (i * d.locations.size() + j) * d.modes.size() + k;
  d.op_cost_fresh[idx] = fresh;
  d.op_cost_frozen[idx] = frozen;
}

void set_failure_rate(InstanceData& d, std::size_t i, std::size_t k, double r) {
  d.failure_rate[i * d.modes.size() + k] = r;
}

std::vector<TinyCase> tiny_suite(std::size_t count, std::size_t max_orders, std::uint64_t first_seed) {
  std::vector<TinyCase> out;
  for (std::size_t n = 0; n < count; ++n) {
    GenerateParams p;
    p.orders = 1 + n % max_orders;
    p.locations = 1 + (n / max_orders) % 3;
    p.modes = 1 + (n / (max_orders * 3)) % 2;
    p.seed = first_seed + n;
    out.push_back({p.seed, generate(p)});
  }
  return out;
}

Solution random_feasible_solution(const Instance& inst, std::mt19937_64& rng, bool allow_gap) {
  const std::size_t n_i = inst.order_count();
  const std::size_t n_j = inst.location_count();
  const std::size_t n_k = inst.mode_count();
  Solution s = Solution::empty(inst);
  for (std::size_t j = 0; j < n_j; ++j) {
    switch (rng() % 3) {
      case 0: break;
      case 1: s.cryo_open[j] = 1; break;
      default:
        s.manufacturing_open[j] = 1;
        s.mode_assignment.set(j, rng() % n_k, true);
    }
  }
  for (std::size_t i = 0; i < n_i; ++i) {
    // A few random proposals per order; fall back to uncovered.
    for (int attempt = 0; attempt < 6; ++attempt) {
      Solution trial = s;
      trial.cryopreserved[i] = static_cast<std::uint8_t>(rng() % 2);
      const std::size_t m = rng() % (n_j + 1);
      if (m < n_j) trial.manufacturing_assignment.set(i, m, true);
      if (trial.cryopreserved[i]) {
        const std::size_t c = rng() % (n_j + 1);
        if (c < n_j) trial.cryo_assignment.set(i, c, true);
      }
      bool ok = true;
      for (const auto& v : check_feasible(inst, trial)) {
        if (v.severity == Severity::error || !allow_gap) ok = false;
      }
      if (ok) {
        s = std::move(trial);
        break;
      }
    }
  }
  return s;
}

std::vector<Scalarization> reference_scalarizations(std::size_t orders) {
  std::vector<Scalarization> out;
  out.push_back(WeightedSum{0.0, 1.0, 0.0});
  out.push_back(WeightedSum{1.0, 1.0, 3000.0});
  out.push_back(WeightedSum{1.0, 0.1, 500.0});
  EpsilonConstraint time_first;
  time_first.primary = Objective::waiting_time;
  time_first.min_coverage = static_cast<int>((orders + 1) / 2);
  time_first.max_cost = 3500.0;
  out.push_back(time_first);
  EpsilonConstraint coverage_first;
  coverage_first.primary = Objective::coverage;
  coverage_first.max_cost = 2500.0;
  coverage_first.max_waiting_time = 600.0;
  out.push_back(coverage_first);
  EpsilonConstraint cost_first;
  cost_first.primary = Objective::cost;
  cost_first.min_coverage = 1;
  out.push_back(cost_first);
  return out;
}

namespace {

// Key built directly from the definitions: weighted value, or the primary
// objective followed by the other two in W, C, -V order.
std::vector<double> plain_key(const Scalarization& s, const ObjectiveVector& o) {
  if (const auto* w = std::get_if<WeightedSum>(&s)) {
    return {w->time * o.waiting_time_hours + w->cost * o.cost - w->coverage * o.coverage};
  }
  const auto& e = std::get<EpsilonConstraint>(s);
  const double v = -static_cast<double>(o.coverage);
  switch (e.primary) {
    case Objective::waiting_time: return {o.waiting_time_hours, o.cost, v};
    case Objective::cost: return {o.cost, o.waiting_time_hours, v};
    case Objective::coverage: return {v, o.waiting_time_hours, o.cost};
  }
  return {};
}

bool within_bounds(const Scalarization& s, const ObjectiveVector& o) {
  const auto* e = std::get_if<EpsilonConstraint>(&s);
  if (!e) return true;
  const double tol = 1e-9;
  if (e->max_cost && o.cost > *e->max_cost + tol * std::max(1.0, std::abs(*e->max_cost))) return false;
  if (e->max_waiting_time &&
      o.waiting_time_hours > *e->max_waiting_time + tol * std::max(1.0, std::abs(*e->max_waiting_time))) {
    return false;
  }
  if (e->min_coverage && o.coverage < *e->min_coverage) return false;
  return true;
}

}  // namespace

BruteOptimum brute_optimum(const Scalarization& s, const std::vector<ObjectiveVector>& objectives) {
  BruteOptimum out;
  std::vector<double> best;
  for (const auto& o : objectives) {
    if (!within_bounds(s, o)) continue;
    auto key = plain_key(s, o);
    if (!out.feasible || key < best) {
      best = key;
      out.feasible = true;
    }
  }
  if (out.feasible) {
    out.key.size = static_cast<int>(best.size());
    std::copy(best.begin(), best.end(), out.key.values.begin());
  }
  return out;
}

bool keys_equal(const ScalarKey& a, const ScalarKey& b, double tolerance) {
  if (a.size != b.size) return false;
  for (int n = 0; n < a.size; ++n) {
    if (std::abs(a.values[n] - b.values[n]) > tolerance * std::max(1.0, std::abs(b.values[n]))) return false;
  }
  return true;
}

bool same_objective_sets(std::vector<ObjectiveVector> a, std::vector<ObjectiveVector> b, double tolerance) {
  if (a.size() != b.size()) return false;
  auto order = [](const ObjectiveVector& x, const ObjectiveVector& y) {
    if (x.coverage != y.coverage) return x.coverage > y.coverage;
    if (x.cost != y.cost) return x.cost < y.cost;
    return x.waiting_time_hours < y.waiting_time_hours;
  };
  std::sort(a.begin(), a.end(), order);
  std::sort(b.begin(), b.end(), order);
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (!approx_equal(a[n], b[n], tolerance)) return false;
  }
  return true;
}

std::string describe(const std::vector<ObjectiveVector>& points) {
  std::ostringstream out;
  for (const auto& p : points) out << to_string(p) << ' ';
  return out.str();
}

Instance hand_fresh_case(double r) {
  InstanceData d = blank_data(1, 1, 1);
  set_to_location(d, 0, 0, 2.0);
  set_to_order(d, 0, 0, 3.0);
  d.modes[0].production_time_fresh_hours = 10.0;
  set_failure_rate(d, 0, 0, r);
  return Instance(d);
}

Solution hand_fresh_solution(const Instance& inst) {
  Solution s = Solution::empty(inst);
  s.manufacturing_open[0] = 1;
  s.mode_assignment.set(0, 0, true);
  s.manufacturing_assignment.set(0, 0, true);
  return s;
}

Instance hand_frozen_case(double r) {
  InstanceData d = blank_data(1, 2, 1);
  set_to_location(d, 0, 1, 1.0);
  set_between(d, 1, 0, 2.0);
  set_to_order(d, 0, 0, 3.0);
  d.modes[0].production_time_frozen_hours = 5.0;
  d.locations[0].setup_cost_manufacturing = 100.0;
  d.locations[1].setup_cost_cryo = 40.0;
  set_op_cost(d, 0, 0, 0, 7.0, 20.0);
  set_failure_rate(d, 0, 0, r);
  return Instance(d);
}

Solution hand_frozen_solution(const Instance& inst) {
  Solution s = Solution::empty(inst);
  s.manufacturing_open[0] = 1;
  s.cryo_open[1] = 1;
  s.mode_assignment.set(0, 0, true);
  s.manufacturing_assignment.set(0, 0, true);
  s.cryo_assignment.set(0, 1, true);
  s.cryopreserved[0] = 1;
  return s;
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t size) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (cur.size() == size) {
      out.push_back(cur);
      return;
    }
    for (std::size_t j = from; j < n; ++j) {
      cur.push_back(j);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

double nearest_open(const Instance& inst, std::size_t i, const std::vector<std::size_t>& open) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j : open) best = std::min(best, inst.to_location(i, j));
  return best;
}

std::size_t open_within(const Instance& inst, std::size_t i, const std::vector<std::size_t>& open, double r) {
  std::size_t n = 0;
  for (std::size_t j : open) n += inst.to_location(i, j) <= r + 1e-9;
  return n;
}

BruteBaseline brute_cover(const Instance& inst, double primary, double backup, bool two) {
  for (std::size_t size = 0; size <= inst.location_count(); ++size) {
    for (const auto& s : subsets_of_size(inst.location_count(), size)) {
      bool ok = true;
      for (std::size_t i = 0; i < inst.order_count() && ok; ++i) {
        ok = open_within(inst, i, s, primary) >= 1 && (!two || open_within(inst, i, s, backup) >= 2);
      }
      if (ok) return {true, s, static_cast<double>(size)};
    }
  }
  return {};
}

BruteBaseline brute_p(const Instance& inst, std::size_t p, const std::vector<double>& w, BruteModel model,
                      double radius) {
  BruteBaseline best;
  const std::size_t lo = model == BruteModel::max_cover ? 1 : p;
  for (std::size_t size = lo; size <= p; ++size) {
    for (const auto& s : subsets_of_size(inst.location_count(), size)) {
      double v = 0.0;
      for (std::size_t i = 0; i < inst.order_count(); ++i) {
        const double wi = w.empty() ? 1.0 : w[i];
        switch (model) {
          case BruteModel::median: v += wi * nearest_open(inst, i, s); break;
          case BruteModel::center: v = std::max(v, nearest_open(inst, i, s)); break;
          case BruteModel::max_cover: v += open_within(inst, i, s, radius) ? wi : 0.0; break;
        }
      }
      const bool improves = model == BruteModel::max_cover ? v > best.value + 1e-9 : v < best.value - 1e-9;
      if (!best.found || improves) best = {true, s, v};
    }
  }
  return best;
}

}  // namespace atmp::testing
