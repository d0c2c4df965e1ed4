#include "atmp/classical.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace atmp {

namespace {

std::string describe(const std::string& model, const std::vector<std::size_t>& orders) {
  std::string out = model + ": orders cannot be covered:";
  for (std::size_t i : orders) out += " " + std::to_string(i);
  return out;
}

bool within(double travel, double radius) { return travel <= radius + kFeasibilityTolerance; }

std::vector<double> weights_of(const Instance& inst, const CoverSpec& spec) {
  return spec.demand_weights.empty() ? std::vector<double>(inst.order_count(), 1.0) : spec.demand_weights;
}

// covers[j][i]: location j is within `radius` of order i.
std::vector<std::vector<std::uint8_t>> cover_table(const Instance& inst, double radius) {
  std::vector<std::vector<std::uint8_t>> covers(inst.location_count(), std::vector<std::uint8_t>(inst.order_count()));
  for (std::size_t j = 0; j < inst.location_count(); ++j) {
    for (std::size_t i = 0; i < inst.order_count(); ++i) covers[j][i] = within(inst.to_location(i, j), radius);
  }
  return covers;
}

// Include-first depth-first search over location subsets, which visits sets
// in lexicographic order of their ascending index lists. Incumbents are only
// replaced by strictly better sets, so ties resolve to the first visited.
class SubsetSearch {
 public:
  // `prune(depth)` returns true when no completion of the current set (with
  // locations >= depth still undecided) can strictly beat the incumbent.
  // `leaf()` scores a complete set and returns true when it is a new
  // incumbent.
  SubsetSearch(std::size_t locations, std::function<bool(std::size_t)> prune, std::function<bool()> leaf)
      : locations_(locations), prune_(std::move(prune)), leaf_(std::move(leaf)) {}

  std::vector<std::size_t> run() {
    descend(0);
    return best_;
  }

  const std::vector<std::size_t>& current() const { return current_; }

 private:
  void descend(std::size_t j) {
    if (prune_(j)) return;
    if (j == locations_) {
      if (leaf_()) best_ = current_;
      return;
    }
    current_.push_back(j);
    descend(j + 1);
    current_.pop_back();
    descend(j + 1);
  }

  std::size_t locations_;
  std::function<bool(std::size_t)> prune_;
  std::function<bool()> leaf_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

// Minimum-cardinality set in which every order i has at least need[i]
// chosen locations among those with covers[j][i].
BaselineResult min_cover(const std::vector<std::vector<std::uint8_t>>& covers, const std::vector<int>& need_one,
                         const std::vector<int>& need_two, std::size_t orders) {
  const std::size_t n = covers.size();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  SubsetSearch* self = nullptr;
  auto satisfiable_from = [&](std::size_t depth) {
    // Every order must still be able to reach its required counts.
    for (std::size_t i = 0; i < orders; ++i) {
      int have_one = 0, have_two = 0, left_one = 0, left_two = 0;
      for (std::size_t j : self->current()) {
        have_one += need_one.empty() ? 0 : static_cast<int>(covers[j][i] & 1u);
        have_two += need_two.empty() ? 0 : static_cast<int>((covers[j][i] >> 1) & 1u);
      }
      for (std::size_t j = depth; j < n; ++j) {
        left_one += need_one.empty() ? 0 : static_cast<int>(covers[j][i] & 1u);
        left_two += need_two.empty() ? 0 : static_cast<int>((covers[j][i] >> 1) & 1u);
      }
      if (!need_one.empty() && have_one + left_one < need_one[i]) return false;
      if (!need_two.empty() && have_two + left_two < need_two[i]) return false;
    }
    return true;
  };
  auto complete = [&]() {
    for (std::size_t i = 0; i < orders; ++i) {
      int one = 0, two = 0;
      for (std::size_t j : self->current()) {
        one += static_cast<int>(covers[j][i] & 1u);
        two += static_cast<int>((covers[j][i] >> 1) & 1u);
      }
      if (!need_one.empty() && one < need_one[i]) return false;
      if (!need_two.empty() && two < need_two[i]) return false;
    }
    return true;
  };
  SubsetSearch search(
      n,
      [&](std::size_t depth) {
        const std::size_t count = self->current().size();
        if (count >= best) return true;
        // One more location is needed whenever the set is not yet complete.
        if (count + 1 >= best && !complete()) return true;
        return !satisfiable_from(depth);
      },
      [&]() {
        if (!complete() || self->current().size() >= best) return false;
        best = self->current().size();
        return true;
      });
  self = &search;
  BaselineResult out;
  out.open = search.run();
  out.value = static_cast<double>(out.open.size());
  return out;
}

}  // namespace

UncoverableOrders::UncoverableOrders(const std::string& model, std::vector<std::size_t> orders)
    : std::invalid_argument(describe(model, orders)), orders_(std::move(orders)) {}

void check_cover_spec(const Instance& inst, const CoverSpec& spec, bool needs_p) {
  if (!(spec.coverage_radius_hours >= 0.0) || !std::isfinite(spec.coverage_radius_hours)) {
    throw std::invalid_argument("coverage radius must be a finite nonnegative number");
  }
  if (needs_p && (spec.p < 1 || spec.p > inst.location_count())) {
    throw std::invalid_argument("p must lie in [1, " + std::to_string(inst.location_count()) + "]");
  }
  if (!spec.demand_weights.empty()) {
    if (spec.demand_weights.size() != inst.order_count()) {
      throw std::invalid_argument("demand_weights needs one entry per order");
    }
    for (double w : spec.demand_weights) {
      if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("demand weights must be finite and nonnegative");
    }
  }
}

BaselineResult lscp(const Instance& inst, const CoverSpec& spec) {
  check_cover_spec(inst, spec, false);
  const auto covers = cover_table(inst, spec.coverage_radius_hours);
  std::vector<std::size_t> missing;
  for (std::size_t i = 0; i < inst.order_count(); ++i) {
    bool any = false;
    for (const auto& row : covers) any = any || row[i];
    if (!any) missing.push_back(i);
  }
  if (!missing.empty()) throw UncoverableOrders("lscp", missing);
  return min_cover(covers, std::vector<int>(inst.order_count(), 1), {}, inst.order_count());
}

BaselineResult backup_lscp(const Instance& inst, const BackupCoverSpec& spec) {
  if (!(spec.primary_radius_hours >= 0.0) || !std::isfinite(spec.backup_radius_hours) ||
      spec.backup_radius_hours < spec.primary_radius_hours) {
    throw std::invalid_argument("backup radius must be finite and at least the primary radius, which must be >= 0");
  }
  // Bit 0: within the primary radius; bit 1: within the backup radius.
  std::vector<std::vector<std::uint8_t>> covers(inst.location_count(), std::vector<std::uint8_t>(inst.order_count()));
  std::vector<std::size_t> missing;
  for (std::size_t i = 0; i < inst.order_count(); ++i) {
    int primary = 0, backup = 0;
    for (std::size_t j = 0; j < inst.location_count(); ++j) {
      const double d = inst.to_location(i, j);
      const bool p = within(d, spec.primary_radius_hours);
      const bool b = within(d, spec.backup_radius_hours);
      covers[j][i] = static_cast<std::uint8_t>((p ? 1u : 0u) | (b ? 2u : 0u));
      primary += p;
      backup += b;
    }
    if (primary < 1 || backup < 2) missing.push_back(i);
  }
  if (!missing.empty()) throw UncoverableOrders("backup_lscp", missing);
  return min_cover(covers, std::vector<int>(inst.order_count(), 1), std::vector<int>(inst.order_count(), 2),
                   inst.order_count());
}

BaselineResult mclp(const Instance& inst, const CoverSpec& spec) {
  check_cover_spec(inst, spec, true);
  const auto covers = cover_table(inst, spec.coverage_radius_hours);
  const auto w = weights_of(inst, spec);
  const std::size_t n_i = inst.order_count();
  const std::size_t n_j = inst.location_count();
  SubsetSearch* self = nullptr;
  double best_weight = -1.0;
  std::size_t best_count = 0;
  auto covered_weight = [&](std::size_t depth, bool optimistic) {
    double total = 0.0;
    for (std::size_t i = 0; i < n_i; ++i) {
      bool hit = false;
      for (std::size_t j : self->current()) hit = hit || covers[j][i];
      if (optimistic && self->current().size() < spec.p) {
        for (std::size_t j = depth; j < n_j && !hit; ++j) hit = covers[j][i];
      }
      if (hit) total += w[i];
    }
    return total;
  };
  SubsetSearch search(
      n_j,
      [&](std::size_t depth) {
        if (self->current().size() > spec.p) return true;
        if (best_weight < 0.0) return false;
        const double bound = covered_weight(depth, true);
        if (bound < best_weight) return true;
        // Equal weight can still win with fewer locations.
        return bound == best_weight && self->current().size() >= best_count;
      },
      [&]() {
        const double v = covered_weight(n_j, false);
        const std::size_t count = self->current().size();
        if (v > best_weight || (v == best_weight && count < best_count)) {
          best_weight = v;
          best_count = count;
          return true;
        }
        return false;
      });
  self = &search;
  BaselineResult out;
  out.open = search.run();
  out.value = best_weight;
  return out;
}

namespace {

// Exactly-p subset search minimizing an aggregate of per-order nearest
// distances; `combine` is + for p-median and max for p-center.
BaselineResult exactly_p(const Instance& inst, std::size_t p, const std::vector<double>& w, bool use_max) {
  const std::size_t n_i = inst.order_count();
  const std::size_t n_j = inst.location_count();
  SubsetSearch* self = nullptr;
  double best = std::numeric_limits<double>::infinity();
  auto value = [&](std::size_t depth, bool optimistic) {
    double total = 0.0;
    for (std::size_t i = 0; i < n_i; ++i) {
      double nearest = std::numeric_limits<double>::infinity();
      for (std::size_t j : self->current()) nearest = std::min(nearest, inst.to_location(i, j));
      if (optimistic && self->current().size() < p) {
        for (std::size_t j = depth; j < n_j; ++j) nearest = std::min(nearest, inst.to_location(i, j));
      }
      total = use_max ? std::max(total, nearest) : total + w[i] * nearest;
    }
    return total;
  };
  SubsetSearch search(
      n_j,
      [&](std::size_t depth) {
        const std::size_t count = self->current().size();
        if (count > p || count + (n_j - depth) < p) return true;
        return std::isfinite(best) && value(depth, true) >= best;
      },
      [&]() {
        if (self->current().size() != p) return false;
        const double v = value(n_j, false);
        if (v >= best) return false;
        best = v;
        return true;
      });
  self = &search;
  BaselineResult out;
  out.open = search.run();
  out.value = best;
  return out;
}

}  // namespace

BaselineResult p_median(const Instance& inst, const CoverSpec& spec) {
  check_cover_spec(inst, spec, true);
  return exactly_p(inst, spec.p, weights_of(inst, spec), false);
}

BaselineResult p_center(const Instance& inst, const CoverSpec& spec) {
  check_cover_spec(inst, spec, true);
  return exactly_p(inst, spec.p, weights_of(inst, spec), true);
}

}  // namespace atmp
