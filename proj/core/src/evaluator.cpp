#include "atmp/evaluator.hpp"

#include <sstream>
#include <utility>

namespace atmp {

namespace {

std::string describe(const std::vector<ConstraintViolation>& violations) {
  std::string out = "solution is infeasible:";
  for (const auto& v : violations) {
    if (v.severity == Severity::error) out += "\n  " + v.to_string();
  }
  return out;
}

void require_shape(const Instance& instance, const Solution& solution) {
  if (!solution.shaped_for(instance)) {
    throw SolutionShapeError("solution arrays are not shaped for this instance (" +
                             std::to_string(instance.order_count()) + " orders, " +
                             std::to_string(instance.location_count()) + " locations, " +
                             std::to_string(instance.mode_count()) + " modes)");
  }
}

void require_feasible(const Instance& instance, const Solution& solution) {
  auto violations = check_feasible(instance, solution);
  for (const auto& v : violations) {
    if (v.severity == Severity::error) throw InfeasibleSolution(std::move(violations));
  }
}

// Time from collection until the order reaches manufacturing site j,
// either directly (fresh) or through its assigned cryo site (frozen).
double time_to_manufacture(const Instance& inst, const Solution& s, std::size_t i, std::size_t j) {
  if (!s.cryopreserved[i]) return inst.to_location(i, j);
  double t = 0.0;
  for (std::size_t jp = 0; jp < inst.location_count(); ++jp) {
    if (s.cryo_assignment(i, jp)) t += inst.to_location(i, jp) + inst.between_locations(jp, j);
  }
  return t;
}

double production_time(const Instance& inst, const Solution& s, std::size_t i, std::size_t j) {
  double t = 0.0;
  for (std::size_t k = 0; k < inst.mode_count(); ++k) {
    if (!s.mode_assignment(j, k)) continue;
    t += s.cryopreserved[i] ? inst.mode(k).production_time_frozen_hours : inst.mode(k).production_time_fresh_hours;
  }
  return t;
}

// Expected number of production runs: 1 + sum_k r_ik m_jk.
double repeat_factor(const Instance& inst, const Solution& s, std::size_t i, std::size_t j) {
  double f = 1.0;
  for (std::size_t k = 0; k < inst.mode_count(); ++k) {
    if (s.mode_assignment(j, k)) f += inst.failure_rate(i, k);
  }
  return f;
}

}  // namespace

std::string ConstraintViolation::to_string() const {
  std::ostringstream out;
  out << (severity == Severity::warning ? "warning " : "") << constraint;
  for (std::size_t i : index) out << '[' << i << ']';
  out << ": " << message;
  return out.str();
}

InfeasibleSolution::InfeasibleSolution(std::vector<ConstraintViolation> violations)
    : std::invalid_argument(describe(violations)), violations_(std::move(violations)) {}

std::vector<ConstraintViolation> check_feasible(const Instance& inst, const Solution& s) {
  require_shape(inst, s);
  namespace tag = constraint_tag;
  std::vector<ConstraintViolation> out;
  auto report = [&out](const char* constraint, std::vector<std::size_t> index, std::string message,
                       Severity severity = Severity::error) {
    out.push_back({constraint, std::move(index), severity, std::move(message)});
  };

  const std::size_t n_i = inst.order_count();
  const std::size_t n_j = inst.location_count();
  const double tol = kFeasibilityTolerance;

  for (std::size_t i = 0; i < n_i; ++i) {
    const double relaxed = s.cryopreserved[i] ? inst.big_t_hours() : 0.0;
    const double limit = inst.order(i).shelf_life_hours + relaxed;
    double to = 0.0, from = 0.0, cryo_leg = 0.0;
    for (std::size_t j = 0; j < n_j; ++j) {
      if (s.manufacturing_assignment(i, j)) {
        to += inst.to_location(i, j);
        from += inst.to_order(j, i);
      }
      if (s.cryo_assignment(i, j)) cryo_leg += inst.to_location(i, j);
    }
    if (to > limit + tol) report(tag::kFreshTo, {i}, "travel to manufacturing exceeds shelf-life");
    if (from > limit + tol) report(tag::kFreshFrom, {i}, "travel from manufacturing exceeds shelf-life");
    if (cryo_leg > inst.cryo_leg_limit_hours() + tol) {
      report(tag::kFrozenLeg, {i}, "travel to cryopreservation exceeds the cryo leg limit");
    }
    const std::size_t m_count = s.manufacturing_assignment.row_sum(i);
    const std::size_t c_count = s.cryo_assignment.row_sum(i);
    if (m_count > 1) report(tag::kOneManufacturing, {i}, "order assigned to more than one manufacturing facility");
    if (c_count > static_cast<std::size_t>(s.cryopreserved[i])) {
      report(tag::kOneCryo, {i}, "cryo assignments exceed the cryopreservation flag");
    }
    if (s.cryopreserved[i] && c_count == 0 && m_count > 0) {
      report(tag::kCryoGap, {i}, "cryopreserved order covered without a cryo facility", Severity::warning);
    }
    for (std::size_t j = 0; j < n_j; ++j) {
      if (s.manufacturing_assignment(i, j) && !s.manufacturing_open[j]) {
        report(tag::kManufacturingAssignIfOpen, {i, j}, "assigned to a closed manufacturing facility");
      }
      if (s.cryo_assignment(i, j) && !s.cryo_open[j]) {
        report(tag::kCryoAssignIfOpen, {i, j}, "assigned to a closed cryo facility");
      }
    }
  }

  for (std::size_t j = 0; j < n_j; ++j) {
    if (s.manufacturing_open[j] && s.cryo_open[j]) report(tag::kOneType, {j}, "both facility types opened");
    const std::size_t modes = s.mode_assignment.row_sum(j);
    if (modes != static_cast<std::size_t>(s.manufacturing_open[j])) {
      report(tag::kModeManufacturing, {j}, "mode count must equal the manufacturing-open flag");
    }
  }
  return out;
}

bool is_feasible(const Instance& instance, const Solution& solution) {
  for (const auto& v : check_feasible(instance, solution)) {
    if (v.severity == Severity::error) return false;
  }
  return true;
}

bool has_cryo_gap(const Solution& s) {
  for (std::size_t i = 0; i < s.order_count(); ++i) {
    if (s.cryopreserved[i] && s.cryo_assignment.row_sum(i) == 0 && s.manufacturing_assignment.row_sum(i) > 0) {
      return true;
    }
  }
  return false;
}

namespace {

double waiting_time_of(const Instance& inst, const Solution& s) {
  double total = 0.0;
  for (std::size_t i = 0; i < inst.order_count(); ++i) {
    for (std::size_t j = 0; j < inst.location_count(); ++j) {
      if (!s.manufacturing_assignment(i, j)) continue;
      const double to_patient = inst.to_order(j, i);
      total += repeat_factor(inst, s, i, j) * (time_to_manufacture(inst, s, i, j) + production_time(inst, s, i, j)) +
               to_patient;
    }
  }
  return total;
}

double total_cost_of(const Instance& inst, const Solution& s) {
  double total = 0.0;
  for (std::size_t j = 0; j < inst.location_count(); ++j) {
    if (s.manufacturing_open[j]) total += inst.location(j).setup_cost_manufacturing;
    if (s.cryo_open[j]) total += inst.location(j).setup_cost_cryo;
  }
  for (std::size_t i = 0; i < inst.order_count(); ++i) {
    for (std::size_t j = 0; j < inst.location_count(); ++j) {
      if (!s.manufacturing_assignment(i, j)) continue;
      for (std::size_t k = 0; k < inst.mode_count(); ++k) {
        if (!s.mode_assignment(j, k)) continue;
        const double op = s.cryopreserved[i] ? inst.op_cost_frozen(i, j, k) : inst.op_cost_fresh(i, j, k);
        total += (1.0 + inst.failure_rate(i, k)) * op;
      }
    }
  }
  return total;
}

int coverage_of(const Instance& inst, const Solution& s) {
  int v = 0;
  for (std::size_t i = 0; i < inst.order_count(); ++i) {
    v += static_cast<int>(s.manufacturing_assignment.row_sum(i));
  }
  return v;
}

}  // namespace

double waiting_time(const Instance& instance, const Solution& solution) {
  require_feasible(instance, solution);
  return waiting_time_of(instance, solution);
}

double total_cost(const Instance& instance, const Solution& solution) {
  require_feasible(instance, solution);
  return total_cost_of(instance, solution);
}

int coverage(const Instance& instance, const Solution& solution) {
  require_shape(instance, solution);
  return coverage_of(instance, solution);
}

ObjectiveVector evaluate(const Instance& instance, const Solution& solution) {
  require_feasible(instance, solution);
  return {waiting_time_of(instance, solution), total_cost_of(instance, solution), coverage_of(instance, solution)};
}

}  // namespace atmp
