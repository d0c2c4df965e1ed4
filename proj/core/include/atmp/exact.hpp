// Exact solver for a scalarized network model.
//
// Once facility types and modes are fixed (a Configuration), the remaining
// per-order decisions only interact through epsilon bounds, so the search
// branches over configurations and solves the assignment subproblem at the
// leaves.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "atmp/instance.hpp"
#include "atmp/scalarization.hpp"
#include "atmp/solution.hpp"

namespace atmp {

enum class FacilityKind : std::uint8_t { closed, cryo, manufacturing };

struct FacilityState {
  FacilityKind kind = FacilityKind::closed;
  int mode = -1;  // set iff kind == manufacturing

  static FacilityState closed() { return {}; }
  static FacilityState cryo() { return {FacilityKind::cryo, -1}; }
  static FacilityState manufacturing(int mode) { return {FacilityKind::manufacturing, mode}; }

  bool operator==(const FacilityState&) const = default;
};

// Facility-side decisions: which locations open as what, with which mode.
struct Configuration {
  std::vector<FacilityState> facilities;  // [location]

  static Configuration all_closed(std::size_t locations);
  static Configuration from_solution(const Solution& solution);

  std::size_t open_count() const;
  // Sets the facility and mode arrays of `solution`; assignments untouched.
  void apply_to(Solution& solution) const;

  bool operator==(const Configuration&) const = default;
};

// Undecided locations are nullopt.
using PartialConfiguration = std::vector<std::optional<FacilityState>>;

enum class ChoiceKind : std::uint8_t {
  uncovered,
  fresh,                // straight to manufacturing
  frozen,               // via a cryo facility
  frozen_without_cryo,  // cryopreserved with no cryo visit; only with paper_strict
};

// One way of serving an order, with its contribution to (W, C, V).
struct OrderChoice {
  ChoiceKind kind = ChoiceKind::uncovered;
  int manufacturing = -1;
  int cryo = -1;
  int mode = -1;
  double waiting_time_hours = 0.0;
  double cost = 0.0;
  int coverage = 0;

  bool operator==(const OrderChoice&) const = default;
};

// Every feasible way of serving order i under a configuration, in tie-break
// order: uncovered, then by manufacturing location; fresh before frozen,
// frozen routes by cryo location.
std::vector<OrderChoice> order_choices(const Instance& instance, const Configuration& configuration, std::size_t order,
                                       bool paper_strict = false);

struct AssignmentOptions {
  bool paper_strict = false;
  // Node cap for the bounded-assignment search (epsilon mode with cost or
  // time bounds). When hit, the best of the partial search and a Lagrangian
  // heuristic is returned with proven = false.
  std::uint64_t node_limit = 2'000'000;
  // Skip the search and use only the Lagrangian heuristic.
  bool heuristic_only = false;
};

struct AssignmentResult {
  bool feasible = false;
  Solution solution;
  ObjectiveVector objective;
  std::vector<OrderChoice> choices;  // [order]
  bool proven = true;
  // > 0 when infeasible: how far the least-violating assignment misses the
  // epsilon bounds (coverage shortfall plus relative cost/time excess).
  double violation = 0.0;
};

AssignmentResult best_assignment(const Instance& instance, const Configuration& configuration,
                                 const Scalarization& scalarization, const AssignmentOptions& options = {});

// Admissible bound on the primary scalarized value of any completion of
// `partial`: undecided locations act as zero-setup-cost manufacturing sites
// (any mode) and cryo sites at the same time. +inf when no completion can
// satisfy the epsilon bounds.
double lower_bound(const Instance& instance, const PartialConfiguration& partial, const Scalarization& scalarization,
                   const AssignmentOptions& options = {});

struct SolveOptions {
  bool paper_strict = false;
  std::uint64_t node_limit = 10'000'000;
  double time_limit_seconds = 60.0;
  bool prune = true;
  std::uint64_t assignment_node_limit = 2'000'000;
};

struct SearchStats {
  std::uint64_t nodes_explored = 0;
  std::uint64_t nodes_pruned = 0;
  double root_bound = 0.0;
  bool proven_optimal = false;
};

struct SolveResult {
  bool feasible = false;
  Solution solution;
  ObjectiveVector objective;
  Configuration configuration;
  SearchStats stats;
};

// Throws std::invalid_argument for an invalid scalarization.
SolveResult solve(const Instance& instance, const Scalarization& scalarization, const SolveOptions& options = {});

// Order in which locations are branched on: decreasing max(setup costs),
// ties by index.
std::vector<std::size_t> branching_order(const Instance& instance);

}  // namespace atmp
