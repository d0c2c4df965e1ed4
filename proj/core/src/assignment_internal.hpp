// Assignment subproblem shared by the exact and heuristic solvers: given the
// feasible choices of every order, pick one per order.
#pragma once

#include <utility>
#include <vector>

#include "atmp/exact.hpp"

namespace atmp::detail {

// Open manufacturing sites as (location, mode), and open cryo sites; both
// sorted by location.
struct Sites {
  std::vector<std::pair<int, int>> manufacturing;
  std::vector<int> cryo;
};

Sites sites_of(const Configuration& configuration);

// Choices for one order; index 0 is always `uncovered`.
std::vector<OrderChoice> build_choices(const Instance& instance, const Sites& sites, std::size_t order,
                                       bool paper_strict);

struct Subproblem {
  const Scalarization* scalarization = nullptr;
  double setup_cost = 0.0;
  std::vector<std::vector<OrderChoice>> choices;  // [order]
};

struct SubproblemResult {
  bool feasible = false;
  std::vector<int> pick;  // index into choices[order]
  ObjectiveVector objective;
  bool proven = true;
  double violation = 0.0;
  // Valid lower bound on the primary value even when the search stopped
  // early; +inf when infeasibility is proven.
  double primary_bound = 0.0;
};

SubproblemResult solve_subproblem(const Subproblem& problem, const AssignmentOptions& options);

}  // namespace atmp::detail
