#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "atmp/exact.hpp"

namespace atmp {

std::vector<std::size_t> branching_order(const Instance& inst) {
  std::vector<std::size_t> order(inst.location_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto weight = [&inst](std::size_t j) {
    return std::max(inst.location(j).setup_cost_manufacturing, inst.location(j).setup_cost_cryo);
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return weight(a) > weight(b); });
  return order;
}

namespace {

class ConfigurationSearch {
 public:
  ConfigurationSearch(const Instance& inst, const Scalarization& s, const SolveOptions& options)
      : inst_(inst), s_(s), options_(options), order_(branching_order(inst)),
        partial_(inst.location_count()), start_(std::chrono::steady_clock::now()) {
    assignment_.paper_strict = options.paper_strict;
    assignment_.node_limit = options.assignment_node_limit;
    children_.push_back(FacilityState::closed());
    children_.push_back(FacilityState::cryo());
    for (std::size_t k = 0; k < inst.mode_count(); ++k) {
      children_.push_back(FacilityState::manufacturing(static_cast<int>(k)));
    }
  }

  SolveResult run() {
    SolveResult out;
    out.configuration = Configuration::all_closed(inst_.location_count());
    out.stats.root_bound = lower_bound(inst_, partial_, s_, assignment_);
    if (std::isinf(out.stats.root_bound) && out.stats.root_bound > 0) {
      out.stats.proven_optimal = true;
      out.stats.nodes_explored = 1;
      out.solution = Solution::empty(inst_);
      return out;
    }
    descend(0);
    out.stats.nodes_explored = explored_;
    out.stats.nodes_pruned = pruned_;
    out.stats.proven_optimal = !aborted_ && all_proven_;
    if (have_incumbent_) {
      out.feasible = true;
      out.solution = std::move(incumbent_.solution);
      out.objective = incumbent_.objective;
      out.configuration = incumbent_config_;
    } else {
      out.solution = Solution::empty(inst_);
    }
    return out;
  }

 private:
  bool out_of_budget() {
    if (explored_ >= options_.node_limit) return true;
    if ((explored_ & 1023u) == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > options_.time_limit_seconds) return true;
    }
    return false;
  }

  void visit_leaf() {
    Configuration config;
    config.facilities.reserve(partial_.size());
    for (const auto& f : partial_) config.facilities.push_back(*f);
    AssignmentResult r = best_assignment(inst_, config, s_, assignment_);
    all_proven_ = all_proven_ && r.proven;
    if (!r.feasible) return;
    const ScalarKey key = scalar_key(s_, r.objective);
    if (have_incumbent_ && !better(key, incumbent_key_)) return;
    have_incumbent_ = true;
    incumbent_key_ = key;
    incumbent_ = std::move(r);
    incumbent_config_ = std::move(config);
  }

  bool prunable() {
    const double bound = lower_bound(inst_, partial_, s_, assignment_);
    if (std::isinf(bound) && bound > 0) return true;
    if (!have_incumbent_) return false;
    const double inc = incumbent_key_.primary();
    return bound > inc + value_tolerance(inc);
  }

  void descend(std::size_t depth) {
    if (depth == order_.size()) {
      visit_leaf();
      return;
    }
    const std::size_t j = order_[depth];
    for (const FacilityState& child : children_) {
      if (aborted_) return;
      if (out_of_budget()) {
        aborted_ = true;
        return;
      }
      ++explored_;
      partial_[j] = child;
      if (options_.prune && depth + 1 < order_.size() && prunable()) {
        ++pruned_;
      } else {
        descend(depth + 1);
      }
      partial_[j].reset();
    }
  }

  const Instance& inst_;
  const Scalarization& s_;
  const SolveOptions& options_;
  AssignmentOptions assignment_;
  std::vector<std::size_t> order_;
  std::vector<FacilityState> children_;
  PartialConfiguration partial_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t explored_ = 0;
  std::uint64_t pruned_ = 0;
  bool aborted_ = false;
  bool all_proven_ = true;
  bool have_incumbent_ = false;
  ScalarKey incumbent_key_;
  AssignmentResult incumbent_;
  Configuration incumbent_config_;
};

}  // namespace

SolveResult solve(const Instance& instance, const Scalarization& scalarization, const SolveOptions& options) {
  check_scalarization(scalarization);
  return ConfigurationSearch(instance, scalarization, options).run();
}

}  // namespace atmp
