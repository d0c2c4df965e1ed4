// Pure 0-1 linear encoding of the network model.
//
// The waiting-time objective contains products of up to four binaries
// (manufacturing assignment, cryopreservation flag, mode, cryo assignment).
// Each distinct product gets one auxiliary binary w = a*b, linked by
//   w <= a,  w <= b,  w >= a + b - 1,
// with longer products chained through pair auxiliaries.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "atmp/instance.hpp"
#include "atmp/scalarization.hpp"
#include "atmp/solution.hpp"

namespace atmp::milp {

enum class VariableType { binary, continuous };

struct Variable {
  std::string name;
  VariableType type = VariableType::binary;
  double lower = 0.0;
  double upper = 1.0;
};

enum class Sense { less_equal, equal, greater_equal };

struct Term {
  int variable = 0;
  double coefficient = 0.0;
};

using LinearExpression = std::vector<Term>;

struct Constraint {
  std::string name;
  LinearExpression terms;
  Sense sense = Sense::less_equal;
  double rhs = 0.0;
};

// product == left * right
struct ProductDefinition {
  int product = 0;
  int left = 0;
  int right = 0;
};

// Always a minimization.
struct LinearProgram {
  std::vector<Variable> variables;
  LinearExpression objective;
  std::vector<Constraint> constraints;
  std::vector<ProductDefinition> products;

  // Index of the named variable, or -1.
  int find(const std::string& name) const;
};

double evaluate_expression(const LinearExpression& expression, std::span<const std::uint8_t> assignment);
double objective_value(const LinearProgram& program, std::span<const std::uint8_t> assignment);

// Names of constraints violated by a 0-1 assignment (absolute tolerance).
std::vector<std::string> violated_constraints(const LinearProgram& program, std::span<const std::uint8_t> assignment,
                                              double tolerance = 1e-9);

// Visits every 0-1 point satisfying all constraints, in lexicographic order of
// the variable list, by depth-first search with activity-bound pruning.
// Intended for verification on small programs. The callback returns false to
// stop early. Throws std::invalid_argument for continuous variables.
void for_each_feasible_point(const LinearProgram& program,
                             const std::function<bool(std::span<const std::uint8_t>)>& visit,
                             double tolerance = 1e-9);

// CPLEX LP text format: objective, constraint rows, bounds, binaries.
std::string write_lp(const LinearProgram& program);

// ---------------------------------------------------------------------------

struct EncodeOptions {
  // Keep the model's verbatim `sum_j cryo[i,j] <= frozen[i]` only. By default
  // a covered, cryopreserved order must also be assigned a cryo facility.
  bool paper_strict = false;
};

// Variable indices of the model's decision binaries, row-major like Solution.
struct VariableMap {
  std::vector<int> manufacturing_open;        // [location]
  std::vector<int> cryo_open;                 // [location]
  std::vector<int> mode_assignment;           // [location][mode]
  std::vector<int> cryopreserved;             // [order]
  std::vector<int> manufacturing_assignment;  // [order][location]
  std::vector<int> cryo_assignment;           // [order][location]
};

struct Encoding {
  LinearProgram program;
  VariableMap variables;
  // The three objectives as linear functions of the program's variables;
  // exact on every feasible point.
  LinearExpression waiting_time;
  LinearExpression cost;
  LinearExpression coverage;
  std::size_t auxiliary_count = 0;
};

// Throws std::invalid_argument for an invalid scalarization.
Encoding encode(const Instance& instance, const Scalarization& scalarization, const EncodeOptions& options = {});

// Closed-form auxiliary count: |I||J|(1 + |J| + 2|K| + |K||J|).
std::size_t expected_auxiliary_count(std::size_t orders, std::size_t locations, std::size_t modes);

class InconsistentAssignment : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Reads the decision binaries back into a Solution. Throws
// InconsistentAssignment when an auxiliary differs from its product.
Solution decode(const Instance& instance, const Encoding& encoding, std::span<const std::uint8_t> assignment);

// The full 0-1 point (including auxiliaries) corresponding to a Solution.
std::vector<std::uint8_t> lift(const Encoding& encoding, const Solution& solution);

}  // namespace atmp::milp
