// Ways of turning the three objectives (min W, min C, max V) into a single
// optimization target.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "atmp/solution.hpp"

namespace atmp {

enum class Objective { waiting_time, cost, coverage };

// Minimizes time * W + cost * C - coverage * V. All weights >= 0, not all zero;
// `coverage` acts as a reward per patient covered.
struct WeightedSum {
  double time = 1.0;
  double cost = 1.0;
  double coverage = 0.0;
};

// Optimizes `primary` subject to bounds on the other objectives. Ties on the
// primary objective are broken lexicographically on the remaining ones (in
// W, C, V order), so optima are never dominated.
struct EpsilonConstraint {
  Objective primary = Objective::waiting_time;
  std::optional<double> max_waiting_time;
  std::optional<double> max_cost;
  std::optional<int> min_coverage;
};

using Scalarization = std::variant<WeightedSum, EpsilonConstraint>;

// Throws std::invalid_argument for negative or all-zero weights.
void check_scalarization(const Scalarization& scalarization);

// Lexicographic minimization key. Weighted sums use a single component.
struct ScalarKey {
  std::array<double, 3> values{};
  int size = 1;

  double primary() const { return values[0]; }
};

ScalarKey scalar_key(const Scalarization& scalarization, const ObjectiveVector& objective);

// Epsilon bounds hold (always true for weighted sums).
bool satisfies_bounds(const Scalarization& scalarization, const ObjectiveVector& objective);

// True when `a` is lexicographically smaller than `b` by more than the
// relative comparison tolerance on some component, with earlier components
// tied within tolerance.
bool better(const ScalarKey& a, const ScalarKey& b);

// Within tolerance on every component.
bool tied(const ScalarKey& a, const ScalarKey& b);

// Tolerance used when comparing objective values, relative to magnitude.
double value_tolerance(double magnitude);

std::string to_string(const Scalarization& scalarization);

// "W", "C", "V" (also accepts "time", "cost", "coverage").
Objective parse_objective(const std::string& text);

}  // namespace atmp
