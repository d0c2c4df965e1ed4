// Multi-start local search over facility configurations. Assignments are
// always recomputed by the assignment subproblem, so every candidate the
// search evaluates is a feasible network.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "atmp/exact.hpp"
#include "atmp/pareto.hpp"

namespace atmp {

struct Neighborhood {
  bool toggle = true;       // closed -> manufacturing(mode 0), open -> closed
  bool retype = true;       // manufacturing <-> cryo
  bool change_mode = true;  // manufacturing(k) -> manufacturing(k')
  bool swap_pair = true;    // an open and a closed location trade states
};

struct SearchParams {
  std::size_t starts = 8;
  // Stop after this many consecutive starts that do not improve the best,
  // counted only once some start is feasible.
  std::size_t max_no_improve = 4;
  std::uint64_t seed = 1;
  Neighborhood neighborhood;
  bool paper_strict = false;
  // Bounded assignment subproblems with more orders than this use the
  // Lagrangian heuristic only.
  std::size_t exact_assignment_orders = 12;
  std::uint64_t assignment_node_limit = 200'000;
};

// Throws std::invalid_argument when a count is zero or no move is enabled.
void check_params(const SearchParams& params);

struct HeuristicResult {
  bool feasible = false;  // always true for weighted sums
  Solution solution;
  ObjectiveVector objective;
  Configuration configuration;
  std::size_t evaluations = 0;
  std::size_t starts_run = 0;
};

// When `warm_start` is given it is the first start; otherwise the first
// start is the all-closed network. Further starts are random, biased toward
// locations that reach many orders fresh.
HeuristicResult local_search(const Instance& instance, const Scalarization& scalarization, const SearchParams& params,
                             const std::optional<Configuration>& warm_start = std::nullopt);

// Every configuration one move away from `configuration`, in a fixed order.
std::vector<Configuration> neighbors(const Configuration& configuration, std::size_t modes,
                                     const Neighborhood& neighborhood);

// Epsilon sweep with local_search as the cell solver, warm-started from the
// previous cell of the same coverage level. Points are never marked optimal.
ParetoFront front_heuristic(const Instance& instance, const FrontGrid& grid, const SearchParams& params);

}  // namespace atmp
