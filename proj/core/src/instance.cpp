#include "atmp/instance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace atmp {

TravelMatrix::TravelMatrix(std::size_t node_count)
    : node_count_(node_count), entries_(node_count * node_count, 0.0) {}

TravelMatrix::TravelMatrix(std::size_t node_count, std::vector<double> row_major)
    : node_count_(node_count), entries_(std::move(row_major)) {
  if (entries_.size() != node_count_ * node_count_) {
    throw InstanceShapeError("travel matrix needs " + std::to_string(node_count_ * node_count_) +
                             " entries, got " + std::to_string(entries_.size()));
  }
}

double TravelMatrix::max_entry() const {
  double best = 0.0;
  for (double v : entries_) {
    if (std::isfinite(v)) best = std::max(best, v);
  }
  return best;
}

namespace {

void check_shapes(const InstanceData& d) {
  const std::size_t n_i = d.orders.size();
  const std::size_t n_j = d.locations.size();
  const std::size_t n_k = d.modes.size();
  auto fail = [](const std::string& field, std::size_t want, std::size_t got) {
    throw InstanceShapeError(field + ": expected " + std::to_string(want) + " entries, got " +
                             std::to_string(got));
  };
  if (d.travel.node_count() != n_i + n_j) fail("travel", n_i + n_j, d.travel.node_count());
  if (d.op_cost_fresh.size() != n_i * n_j * n_k) fail("op_cost_fresh", n_i * n_j * n_k, d.op_cost_fresh.size());
  if (d.op_cost_frozen.size() != n_i * n_j * n_k) fail("op_cost_frozen", n_i * n_j * n_k, d.op_cost_frozen.size());
  if (d.failure_rate.size() != n_i * n_k) fail("failure_rate", n_i * n_k, d.failure_rate.size());
}

}  // namespace

Instance::Instance(InstanceData data) : data_(std::move(data)) {
  check_shapes(data_);
  if (!data_.big_t_hours) data_.big_t_hours = data_.travel.max_entry() + 1.0;
}

std::string Violation::to_string() const {
  std::ostringstream out;
  out << field;
  for (std::size_t i : index) out << '[' << i << ']';
  out << ": " << message;
  return out.str();
}

std::vector<Violation> validate(const InstanceData& d) {
  std::vector<Violation> out;
  auto report = [&out](std::string field, std::vector<std::size_t> index, std::string message) {
    out.push_back({std::move(field), std::move(index), std::move(message)});
  };
  auto nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };

  const std::size_t n_i = d.orders.size();
  const std::size_t n_j = d.locations.size();
  const std::size_t n_k = d.modes.size();
  if (n_i == 0) report("orders", {}, "at least one order required");
  if (n_j == 0) report("locations", {}, "at least one location required");
  if (n_k == 0) report("modes", {}, "at least one mode required");

  for (std::size_t i = 0; i < n_i; ++i) {
    const auto& o = d.orders[i];
    if (o.id != static_cast<int>(i)) report("orders", {i}, "id must equal its position");
    if (!(std::isfinite(o.shelf_life_hours) && o.shelf_life_hours > 0.0)) {
      report("orders", {i}, "shelf_life_hours must be positive and finite");
    }
  }
  for (std::size_t j = 0; j < n_j; ++j) {
    const auto& l = d.locations[j];
    if (l.id != static_cast<int>(j)) report("locations", {j}, "id must equal its position");
    if (!nonneg(l.setup_cost_manufacturing)) report("locations", {j}, "setup_cost_manufacturing must be finite and >= 0");
    if (!nonneg(l.setup_cost_cryo)) report("locations", {j}, "setup_cost_cryo must be finite and >= 0");
  }
  for (std::size_t k = 0; k < n_k; ++k) {
    const auto& m = d.modes[k];
    if (m.id != static_cast<int>(k)) report("modes", {k}, "id must equal its position");
    if (!nonneg(m.production_time_fresh_hours)) report("modes", {k}, "p_fresh_hours must be finite and >= 0");
    if (!nonneg(m.production_time_frozen_hours)) report("modes", {k}, "p_frozen_hours must be finite and >= 0");
  }

  const std::size_t nodes = n_i + n_j;
  if (d.travel.node_count() != nodes) {
    report("travel", {}, "expected " + std::to_string(nodes) + " nodes, got " +
                             std::to_string(d.travel.node_count()));
  } else {
    for (std::size_t a = 0; a < nodes; ++a) {
      for (std::size_t b = 0; b < nodes; ++b) {
        const double v = d.travel(a, b);
        if (!nonneg(v)) {
          report("travel", {a, b}, "travel time must be finite and >= 0");
        } else if (a == b && v != 0.0) {
          report("travel", {a, b}, "travel time from a node to itself must be 0");
        }
      }
    }
  }

  auto check_tensor = [&](const std::vector<double>& t, const char* name) {
    if (t.size() != n_i * n_j * n_k) {
      report(name, {}, "expected " + std::to_string(n_i * n_j * n_k) + " entries, got " + std::to_string(t.size()));
      return;
    }
    for (std::size_t i = 0; i < n_i; ++i)
      for (std::size_t j = 0; j < n_j; ++j)
        for (std::size_t k = 0; k < n_k; ++k)
          if (!nonneg(t[(i * n_j + j) * n_k + k])) report(name, {i, j, k}, "cost must be finite and >= 0");
  };
  check_tensor(d.op_cost_fresh, "op_cost_fresh");
  check_tensor(d.op_cost_frozen, "op_cost_frozen");

  if (d.failure_rate.size() != n_i * n_k) {
    report("failure_rate", {}, "expected " + std::to_string(n_i * n_k) + " entries, got " +
                                   std::to_string(d.failure_rate.size()));
  } else {
    for (std::size_t i = 0; i < n_i; ++i)
      for (std::size_t k = 0; k < n_k; ++k) {
        const double r = d.failure_rate[i * n_k + k];
        if (!(std::isfinite(r) && r >= 0.0 && r < 1.0)) report("failure_rate", {i, k}, "failure_rate out of [0,1)");
      }
  }

  if (d.big_t_hours) {
    const double t = *d.big_t_hours;
    if (!std::isfinite(t) || !(t > d.travel.max_entry())) {
      report("big_t_hours", {}, "big_t not larger than max travel");
    }
  }
  if (!(std::isfinite(d.cryo_leg_limit_hours) && d.cryo_leg_limit_hours >= 0.0)) {
    report("cryo_leg_limit_hours", {}, "cryo leg limit must be finite and >= 0");
  }
  return out;
}

std::vector<Violation> validate(const Instance& instance) { return validate(instance.data()); }

}  // namespace atmp
