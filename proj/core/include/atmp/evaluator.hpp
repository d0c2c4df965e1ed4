// Feasibility checking and objective evaluation of complete solutions.
//
// These functions compute the waiting-time, cost and coverage objectives
// exactly as the model states them; every solver in the library is tested
// against them.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "atmp/instance.hpp"
#include "atmp/solution.hpp"

namespace atmp {

enum class Severity { error, warning };

// Constraint tags used in ConstraintViolation::constraint.
namespace constraint_tag {
inline constexpr const char* kFreshTo = "fresh_to";
inline constexpr const char* kFreshFrom = "fresh_from";
inline constexpr const char* kFrozenLeg = "frozen_leg";
inline constexpr const char* kOneManufacturing = "one_manufacturing";
inline constexpr const char* kOneCryo = "one_cryo";
inline constexpr const char* kManufacturingAssignIfOpen = "manufacturing_assign_if_open";
inline constexpr const char* kCryoAssignIfOpen = "cryo_assign_if_open";
inline constexpr const char* kOneType = "one_type";
inline constexpr const char* kModeManufacturing = "mode_manufacturing";
// Warning only: a covered, cryopreserved order that visits no cryo facility.
inline constexpr const char* kCryoGap = "cryo_gap";
}  // namespace constraint_tag

struct ConstraintViolation {
  std::string constraint;
  std::vector<std::size_t> index;
  Severity severity = Severity::error;
  std::string message;

  std::string to_string() const;
};

class SolutionShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InfeasibleSolution : public std::invalid_argument {
 public:
  explicit InfeasibleSolution(std::vector<ConstraintViolation> violations);
  const std::vector<ConstraintViolation>& violations() const { return violations_; }

 private:
  std::vector<ConstraintViolation> violations_;
};

// All violations (errors and cryo-gap warnings). Throws SolutionShapeError.
std::vector<ConstraintViolation> check_feasible(const Instance& instance, const Solution& solution);

// No error-severity violations. Warnings are allowed.
bool is_feasible(const Instance& instance, const Solution& solution);

// True when some covered order is cryopreserved without a cryo assignment.
bool has_cryo_gap(const Solution& solution);

// The objective functions reject infeasible solutions with InfeasibleSolution.
double waiting_time(const Instance& instance, const Solution& solution);
double total_cost(const Instance& instance, const Solution& solution);
int coverage(const Instance& instance, const Solution& solution);
ObjectiveVector evaluate(const Instance& instance, const Solution& solution);

}  // namespace atmp
