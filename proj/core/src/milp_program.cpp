#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include "atmp/milp.hpp"

namespace atmp::milp {

int LinearProgram::find(const std::string& name) const {
  for (std::size_t v = 0; v < variables.size(); ++v) {
    if (variables[v].name == name) return static_cast<int>(v);
  }
  return -1;
}

double evaluate_expression(const LinearExpression& expression, std::span<const std::uint8_t> x) {
  double total = 0.0;
  for (const Term& t : expression) total += t.coefficient * x[static_cast<std::size_t>(t.variable)];
  return total;
}

double objective_value(const LinearProgram& program, std::span<const std::uint8_t> x) {
  return evaluate_expression(program.objective, x);
}

namespace {

bool holds(Sense sense, double lhs, double rhs, double tol) {
  switch (sense) {
    case Sense::less_equal: return lhs <= rhs + tol;
    case Sense::greater_equal: return lhs >= rhs - tol;
    case Sense::equal: return std::abs(lhs - rhs) <= tol;
  }
  return false;
}

}  // namespace

std::vector<std::string> violated_constraints(const LinearProgram& program, std::span<const std::uint8_t> x,
                                              double tolerance) {
  std::vector<std::string> out;
  for (const auto& c : program.constraints) {
    if (!holds(c.sense, evaluate_expression(c.terms, x), c.rhs, tolerance)) out.push_back(c.name);
  }
  return out;
}

namespace {

class FeasiblePointSearch {
 public:
  FeasiblePointSearch(const LinearProgram& program, const std::function<bool(std::span<const std::uint8_t>)>& visit,
                      double tol)
      : program_(program), visit_(visit), tol_(tol) {
    const std::size_t n = program.variables.size();
    for (const auto& v : program.variables) {
      if (v.type != VariableType::binary) {
        throw std::invalid_argument("feasible-point enumeration supports binary variables only (" + v.name + ")");
      }
    }
    columns_.resize(n);
    min_activity_.assign(program.constraints.size(), 0.0);
    max_activity_.assign(program.constraints.size(), 0.0);
    for (std::size_t c = 0; c < program.constraints.size(); ++c) {
      for (const Term& t : program.constraints[c].terms) {
        columns_[static_cast<std::size_t>(t.variable)].push_back({static_cast<int>(c), t.coefficient});
        min_activity_[c] += std::min(0.0, t.coefficient);
        max_activity_[c] += std::max(0.0, t.coefficient);
      }
    }
    point_.assign(n, 0);
  }

  void run() {
    for (std::size_t c = 0; c < program_.constraints.size(); ++c) {
      if (!satisfiable(c)) return;
    }
    descend(0);
  }

 private:
  bool satisfiable(std::size_t c) const {
    const auto& con = program_.constraints[c];
    switch (con.sense) {
      case Sense::less_equal: return min_activity_[c] <= con.rhs + tol_;
      case Sense::greater_equal: return max_activity_[c] >= con.rhs - tol_;
      case Sense::equal: return min_activity_[c] <= con.rhs + tol_ && max_activity_[c] >= con.rhs - tol_;
    }
    return false;
  }

  // Fixes variable v to `value`; returns false (and leaves state unchanged)
  // if some constraint becomes unsatisfiable.
  bool fix(std::size_t v, int value) {
    for (const Term& t : columns_[v]) {
      const auto c = static_cast<std::size_t>(t.variable);
      min_activity_[c] += t.coefficient * value - std::min(0.0, t.coefficient);
      max_activity_[c] += t.coefficient * value - std::max(0.0, t.coefficient);
    }
    bool ok = true;
    for (const Term& t : columns_[v]) {
      if (!satisfiable(static_cast<std::size_t>(t.variable))) {
        ok = false;
        break;
      }
    }
    if (!ok) unfix(v, value);
    return ok;
  }

  void unfix(std::size_t v, int value) {
    for (const Term& t : columns_[v]) {
      const auto c = static_cast<std::size_t>(t.variable);
      min_activity_[c] -= t.coefficient * value - std::min(0.0, t.coefficient);
      max_activity_[c] -= t.coefficient * value - std::max(0.0, t.coefficient);
    }
  }

  void descend(std::size_t v) {
    if (stopped_) return;
    if (v == point_.size()) {
      if (!visit_(point_)) stopped_ = true;
      return;
    }
    for (int value = 0; value <= 1 && !stopped_; ++value) {
      if (!fix(v, value)) continue;
      point_[v] = static_cast<std::uint8_t>(value);
      descend(v + 1);
      point_[v] = 0;
      unfix(v, value);
    }
  }

  const LinearProgram& program_;
  const std::function<bool(std::span<const std::uint8_t>)>& visit_;
  double tol_;
  // Per variable: (constraint index, coefficient); Term::variable holds the
  // constraint index here.
  std::vector<std::vector<Term>> columns_;
  std::vector<double> min_activity_;
  std::vector<double> max_activity_;
  std::vector<std::uint8_t> point_;
  bool stopped_ = false;
};

std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return ec == std::errc() ? std::string(buf, end) : std::to_string(v);
}

class LineWriter {
 public:
  explicit LineWriter(std::string& out) : out_(out) {}
  void token(const std::string& t) {
    if (line_ + t.size() + 1 > 200) {
      out_ += "\n   ";
      line_ = 3;
    }
    out_ += ' ';
    out_ += t;
    line_ += t.size() + 1;
  }
  void start(const std::string& prefix) {
    out_ += prefix;
    line_ = prefix.size();
  }
  void end() {
    out_ += '\n';
    line_ = 0;
  }

 private:
  std::string& out_;
  std::size_t line_ = 0;
};

void write_terms(LineWriter& w, const LinearProgram& program, const LinearExpression& terms) {
  if (terms.empty()) {
    w.token("0");
    w.token(program.variables.empty() ? std::string("x") : program.variables.front().name);
    return;
  }
  for (const Term& t : terms) {
    w.token(t.coefficient < 0.0 ? "-" : "+");
    w.token(format_number(std::abs(t.coefficient)) + " " + program.variables[static_cast<std::size_t>(t.variable)].name);
  }
}

}  // namespace

void for_each_feasible_point(const LinearProgram& program,
                             const std::function<bool(std::span<const std::uint8_t>)>& visit, double tolerance) {
  FeasiblePointSearch search(program, visit, tolerance);
  search.run();
}

std::string write_lp(const LinearProgram& program) {
  std::string out;
  out += "\\ " + std::to_string(program.variables.size()) + " variables, " +
         std::to_string(program.constraints.size()) + " constraints\n";
  LineWriter w(out);
  out += "Minimize\n";
  w.start(" obj:");
  write_terms(w, program, program.objective);
  w.end();
  out += "Subject To\n";
  for (const auto& c : program.constraints) {
    w.start(" " + c.name + ":");
    write_terms(w, program, c.terms);
    const char* sense = c.sense == Sense::less_equal ? "<=" : c.sense == Sense::equal ? "=" : ">=";
    w.token(sense);
    w.token(format_number(c.rhs));
    w.end();
  }
  bool any_continuous = false;
  for (const auto& v : program.variables) any_continuous |= v.type == VariableType::continuous;
  if (any_continuous) {
    out += "Bounds\n";
    for (const auto& v : program.variables) {
      if (v.type != VariableType::continuous) continue;
      out += " " + format_number(v.lower) + " <= " + v.name + " <= " + format_number(v.upper) + "\n";
    }
  }
  out += "Binaries\n";
  w.start("");
  for (const auto& v : program.variables) {
    if (v.type == VariableType::binary) w.token(v.name);
  }
  w.end();
  out += "End\n";
  return out;
}

}  // namespace atmp::milp
