// Three-objective Pareto fronts (min W, min C, max V) built by sweeping
// epsilon-constraint problems: coverage as an outer loop over integer
// levels, cost as a descending bound within each level.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "atmp/exact.hpp"
#include "atmp/instance.hpp"
#include "atmp/solution.hpp"

namespace atmp {

struct FrontPoint {
  Solution solution;
  ObjectiveVector objective;
  bool optimal = true;  // the cell that produced it was solved to proven optimality
  std::size_t solution_id = 0;
};

// Mutually nondominated, sorted by (V desc, C asc, W asc).
struct ParetoFront {
  std::vector<FrontPoint> points;
  // Some cell hit a budget, or some level hit the cost-level cap.
  bool approximate = false;
};

struct FrontGrid {
  // Maximum number of cost bounds tried per coverage level. The sweep moves
  // the bound just below the cost of the last point found, so a level with
  // at most this many nondominated points is swept completely.
  std::size_t cost_levels = 16;
  // Coverage levels solved concurrently; 0 means one per hardware thread.
  unsigned threads = 0;
  SolveOptions solve;
};

// One epsilon-constraint cell: min W s.t. V >= v, C <= eps.
struct CellResult {
  bool feasible = false;
  Solution solution;
  ObjectiveVector objective;
  bool proven = true;
  Configuration configuration;
};

// `warm_start` is the configuration found by the previous cell of the same
// level, if any.
using CellSolver =
    std::function<CellResult(const EpsilonConstraint& cell, const std::optional<Configuration>& warm_start)>;

// Runs the sweep with an arbitrary cell solver. Levels are independent and
// may run concurrently; the merge is deterministic.
ParetoFront epsilon_sweep(const Instance& instance, const FrontGrid& grid, const CellSolver& solver);

ParetoFront front_exact(const Instance& instance, const FrontGrid& grid = {});

// Indices of the points not dominated by any other, in input order. Among
// points with equal objective vectors only the first is kept. Values of W
// and C within `tolerance` count as equal.
std::vector<std::size_t> nondominated_indices(const std::vector<ObjectiveVector>& points, double tolerance = 0.0);
std::vector<ObjectiveVector> nondominated_filter(const std::vector<ObjectiveVector>& points, double tolerance = 0.0);

// Sorts by (V desc, C asc, W asc) and renumbers solution ids.
void sort_front(ParetoFront& front);

// Reference point for hypervolume: the worst acceptable W and C, and the
// lowest acceptable coverage.
struct HypervolumeReference {
  double waiting_time_hours = 0.0;
  double cost = 0.0;
  double coverage = 0.0;
};

// Volume of objective space dominated by the points and bounded by the
// reference. Throws std::invalid_argument when some point is worse than the
// reference on any objective, or a value is not finite.
double hypervolume(const std::vector<ObjectiveVector>& points, const HypervolumeReference& reference);

// A reference every point of both fronts satisfies: 10% beyond the worst W
// and C (at least 1), and coverage -1.
HypervolumeReference common_reference(const std::vector<ObjectiveVector>& a, const std::vector<ObjectiveVector>& b);

std::vector<ObjectiveVector> objectives(const ParetoFront& front);

// CSV with header v,cost,waiting_hours,solution_id,optimality_flag,mean_waiting_hours.
// mean_waiting_hours is W / V (0 when V = 0).
std::string write_front_csv(const ParetoFront& front);
// Sidecar document: the solution of every front point, keyed by solution_id.
std::string write_front_solutions(const ParetoFront& front);

struct FrontRow {
  int coverage = 0;
  double cost = 0.0;
  double waiting_time_hours = 0.0;
  std::size_t solution_id = 0;
  bool optimal = true;
  double mean_waiting_hours = 0.0;
};

// Throws std::invalid_argument on malformed input.
std::vector<FrontRow> read_front_csv(const std::string& text);

// Shortest round-trip decimal form, as used in all text outputs.
std::string format_number(double value);

}  // namespace atmp
