// Brute-force ground truth for tiny instances. Enumerates every feasible
// solution and scores it with its own objective code, written separately
// from the evaluator so that the two can cross-check each other.

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "atmp/instance.hpp"
#include "atmp/pareto.hpp"
#include "atmp/solution.hpp"

namespace atmp {

struct OracleOptions {
  // Also enumerate cryopreserved, covered orders with no cryo assignment.
  bool paper_strict = false;
  // Refuse instances with more feasible solutions than this.
  std::uint64_t max_solutions = 10'000'000;
};

class OracleTooLarge : public std::length_error {
 public:
  explicit OracleTooLarge(std::uint64_t count);
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t count_;
};

// Exact number of solutions enumerate_all would visit (saturating).
std::uint64_t oracle_solution_count(const Instance& instance, const OracleOptions& options = {});

// Objective values recomputed from the raw formulas; the solution must be
// feasible.
ObjectiveVector oracle_objective(const Instance& instance, const Solution& solution);

// Calls `visit` for every feasible solution, facility configurations outer
// (lexicographic over closed, cryo, manufacturing by mode per location),
// per-order options inner. Returning false stops the enumeration.
void enumerate_all(const Instance& instance, const std::function<bool(const Solution&, const ObjectiveVector&)>& visit,
                   const OracleOptions& options = {});

// Nondominated set of all feasible solutions, sorted like any front. The
// first solution enumerated is kept for each distinct objective vector.
ParetoFront oracle_front(const Instance& instance, const OracleOptions& options = {});

}  // namespace atmp
