#include "atmp/scalarization.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace atmp {

void check_scalarization(const Scalarization& scalarization) {
  if (const auto* w = std::get_if<WeightedSum>(&scalarization)) {
    const bool finite = std::isfinite(w->time) && std::isfinite(w->cost) && std::isfinite(w->coverage);
    if (!finite || w->time < 0.0 || w->cost < 0.0 || w->coverage < 0.0) {
      throw std::invalid_argument("weighted-sum weights must be finite and >= 0");
    }
    if (w->time == 0.0 && w->cost == 0.0 && w->coverage == 0.0) {
      throw std::invalid_argument("weighted-sum weights must not all be zero");
    }
  }
}

ScalarKey scalar_key(const Scalarization& scalarization, const ObjectiveVector& o) {
  ScalarKey key;
  const double v = static_cast<double>(o.coverage);
  if (const auto* w = std::get_if<WeightedSum>(&scalarization)) {
    key.values[0] = w->time * o.waiting_time_hours + w->cost * o.cost - w->coverage * v;
    key.size = 1;
    return key;
  }
  const auto& e = std::get<EpsilonConstraint>(scalarization);
  key.size = 3;
  switch (e.primary) {
    case Objective::waiting_time:
      key.values = {o.waiting_time_hours, o.cost, -v};
      break;
    case Objective::cost:
      key.values = {o.cost, o.waiting_time_hours, -v};
      break;
    case Objective::coverage:
      key.values = {-v, o.waiting_time_hours, o.cost};
      break;
  }
  return key;
}

bool satisfies_bounds(const Scalarization& scalarization, const ObjectiveVector& o) {
  const auto* e = std::get_if<EpsilonConstraint>(&scalarization);
  if (e == nullptr) return true;
  if (e->max_waiting_time && o.waiting_time_hours > *e->max_waiting_time + value_tolerance(*e->max_waiting_time)) {
    return false;
  }
  if (e->max_cost && o.cost > *e->max_cost + value_tolerance(*e->max_cost)) return false;
  if (e->min_coverage && o.coverage < *e->min_coverage) return false;
  return true;
}

double value_tolerance(double magnitude) { return 1e-9 * std::max(1.0, std::abs(magnitude)); }

bool better(const ScalarKey& a, const ScalarKey& b) {
  const int n = std::min(a.size, b.size);
  for (int l = 0; l < n; ++l) {
    const double tol = value_tolerance(std::max(std::abs(a.values[l]), std::abs(b.values[l])));
    if (a.values[l] < b.values[l] - tol) return true;
    if (a.values[l] > b.values[l] + tol) return false;
  }
  return false;
}

bool tied(const ScalarKey& a, const ScalarKey& b) { return !better(a, b) && !better(b, a); }

std::string to_string(const Scalarization& scalarization) {
  std::ostringstream out;
  out.precision(17);
  if (const auto* w = std::get_if<WeightedSum>(&scalarization)) {
    out << "weighted(" << w->time << "," << w->cost << "," << w->coverage << ")";
    return out.str();
  }
  const auto& e = std::get<EpsilonConstraint>(scalarization);
  const char* names[] = {"W", "C", "V"};
  out << "epsilon(primary=" << names[static_cast<int>(e.primary)];
  if (e.max_waiting_time) out << ", W<=" << *e.max_waiting_time;
  if (e.max_cost) out << ", C<=" << *e.max_cost;
  if (e.min_coverage) out << ", V>=" << *e.min_coverage;
  out << ")";
  return out.str();
}

Objective parse_objective(const std::string& text) {
  if (text == "W" || text == "w" || text == "time" || text == "waiting_time") return Objective::waiting_time;
  if (text == "C" || text == "c" || text == "cost") return Objective::cost;
  if (text == "V" || text == "v" || text == "coverage") return Objective::coverage;
  throw std::invalid_argument("unknown objective \"" + text + "\" (expected W, C or V)");
}

}  // namespace atmp
