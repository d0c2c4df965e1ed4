#include <string>
#include <utility>

#include "atmp/milp.hpp"

namespace atmp::milp {

namespace {

std::string indexed(const char* stem, std::initializer_list<std::size_t> idx) {
  std::string s = stem;
  for (std::size_t v : idx) s += "_" + std::to_string(v);
  return s;
}

class Builder {
 public:
  int add_binary(std::string name) {
    program_.variables.push_back({std::move(name), VariableType::binary, 0.0, 1.0});
    return static_cast<int>(program_.variables.size()) - 1;
  }

  int add_product(std::string name, int left, int right) {
    const int w = add_binary(name);
    add_constraint(name + "_le_left", {{w, 1.0}, {left, -1.0}}, Sense::less_equal, 0.0);
    add_constraint(name + "_le_right", {{w, 1.0}, {right, -1.0}}, Sense::less_equal, 0.0);
    add_constraint(name + "_ge_both", {{w, 1.0}, {left, -1.0}, {right, -1.0}}, Sense::greater_equal, -1.0);
    program_.products.push_back({w, left, right});
    return w;
  }

  void add_constraint(std::string name, LinearExpression terms, Sense sense, double rhs) {
    std::erase_if(terms, [](const Term& t) { return t.coefficient == 0.0; });
    program_.constraints.push_back({std::move(name), std::move(terms), sense, rhs});
  }

  std::size_t variable_count() const { return program_.variables.size(); }
  LinearProgram& program() { return program_; }

 private:
  LinearProgram program_;
};

// Accumulates a linear expression densely, then compacts it.
class DenseExpression {
 public:
  explicit DenseExpression(std::size_t n) : coef_(n, 0.0) {}
  void add(int var, double c) { coef_[static_cast<std::size_t>(var)] += c; }
  void add(const DenseExpression& other, double scale) {
    for (std::size_t v = 0; v < coef_.size(); ++v) coef_[v] += scale * other.coef_[v];
  }
  LinearExpression compact() const {
    LinearExpression out;
    for (std::size_t v = 0; v < coef_.size(); ++v) {
      if (coef_[v] != 0.0) out.push_back({static_cast<int>(v), coef_[v]});
    }
    return out;
  }

 private:
  std::vector<double> coef_;
};

// Auxiliary indices for one (order, manufacturing site) pair.
struct PairAuxiliaries {
  int frozen_mfg = -1;                // assign_mfg * frozen
  std::vector<int> frozen_via;        // [cryo site] frozen_mfg * assign_cryo
  std::vector<int> mfg_mode;          // [mode] assign_mfg * mode
  std::vector<int> frozen_mode;       // [mode] mfg_mode * frozen
  std::vector<int> frozen_mode_via;   // [mode][cryo site] frozen_mode * assign_cryo
};

}  // namespace

std::size_t expected_auxiliary_count(std::size_t orders, std::size_t locations, std::size_t modes) {
  return orders * locations * (1 + locations + 2 * modes + modes * locations);
}

Encoding encode(const Instance& inst, const Scalarization& scalarization, const EncodeOptions& options) {
  check_scalarization(scalarization);
  const std::size_t n_i = inst.order_count();
  const std::size_t n_j = inst.location_count();
  const std::size_t n_k = inst.mode_count();

  Builder b;
  Encoding enc;
  VariableMap& vm = enc.variables;

  // Facility-side binaries first, then one block per order; the order blocks
  // keep every per-order constraint local in the variable ordering.
  for (std::size_t j = 0; j < n_j; ++j) {
    vm.manufacturing_open.push_back(b.add_binary(indexed("open_mfg", {j})));
    vm.cryo_open.push_back(b.add_binary(indexed("open_cryo", {j})));
    for (std::size_t k = 0; k < n_k; ++k) vm.mode_assignment.push_back(b.add_binary(indexed("mode", {j, k})));
  }

  std::vector<std::vector<PairAuxiliaries>> aux(n_i, std::vector<PairAuxiliaries>(n_j));
  std::size_t aux_count = 0;
  for (std::size_t i = 0; i < n_i; ++i) {
    vm.cryopreserved.push_back(b.add_binary(indexed("frozen", {i})));
    for (std::size_t j = 0; j < n_j; ++j) vm.manufacturing_assignment.push_back(b.add_binary(indexed("assign_mfg", {i, j})));
    for (std::size_t j = 0; j < n_j; ++j) vm.cryo_assignment.push_back(b.add_binary(indexed("assign_cryo", {i, j})));

    const int z = vm.cryopreserved[i];
    for (std::size_t j = 0; j < n_j; ++j) {
      const int xm = vm.manufacturing_assignment[i * n_j + j];
      PairAuxiliaries& a = aux[i][j];
      a.frozen_mfg = b.add_product(indexed("frozen_mfg", {i, j}), xm, z);
      for (std::size_t jp = 0; jp < n_j; ++jp) {
        a.frozen_via.push_back(
            b.add_product(indexed("frozen_via", {i, j, jp}), a.frozen_mfg, vm.cryo_assignment[i * n_j + jp]));
      }
      for (std::size_t k = 0; k < n_k; ++k) {
        a.mfg_mode.push_back(b.add_product(indexed("mfg_mode", {i, j, k}), xm, vm.mode_assignment[j * n_k + k]));
      }
      for (std::size_t k = 0; k < n_k; ++k) {
        a.frozen_mode.push_back(b.add_product(indexed("frozen_mode", {i, j, k}), a.mfg_mode[k], z));
      }
      for (std::size_t k = 0; k < n_k; ++k) {
        for (std::size_t jp = 0; jp < n_j; ++jp) {
          a.frozen_mode_via.push_back(b.add_product(indexed("frozen_mode_via", {i, j, k, jp}), a.frozen_mode[k],
                                                    vm.cryo_assignment[i * n_j + jp]));
        }
      }
      aux_count += 1 + n_j + 2 * n_k + n_k * n_j;
    }
  }
  enc.auxiliary_count = aux_count;

  // Model constraints.
  const double big_t = inst.big_t_hours();
  for (std::size_t i = 0; i < n_i; ++i) {
    const int z = vm.cryopreserved[i];
    const double shelf = inst.order(i).shelf_life_hours;
    LinearExpression to, from, leg, one_m, one_c, cryo_required;
    for (std::size_t j = 0; j < n_j; ++j) {
      const int xm = vm.manufacturing_assignment[i * n_j + j];
      const int xc = vm.cryo_assignment[i * n_j + j];
      to.push_back({xm, inst.to_location(i, j)});
      from.push_back({xm, inst.to_order(j, i)});
      leg.push_back({xc, inst.to_location(i, j)});
      one_m.push_back({xm, 1.0});
      one_c.push_back({xc, 1.0});
      cryo_required.push_back({xc, 1.0});
    }
    to.push_back({z, -big_t});
    from.push_back({z, -big_t});
    one_c.push_back({z, -1.0});
    b.add_constraint(indexed("fresh_to", {i}), std::move(to), Sense::less_equal, shelf);
    b.add_constraint(indexed("fresh_from", {i}), std::move(from), Sense::less_equal, shelf);
    b.add_constraint(indexed("frozen_leg", {i}), std::move(leg), Sense::less_equal, inst.cryo_leg_limit_hours());
    b.add_constraint(indexed("one_mfg", {i}), std::move(one_m), Sense::less_equal, 1.0);
    b.add_constraint(indexed("one_cryo", {i}), std::move(one_c), Sense::less_equal, 0.0);
    if (!options.paper_strict) {
      // frozen * sum_j assign_mfg  <=  sum_j assign_cryo
      for (std::size_t j = 0; j < n_j; ++j) cryo_required.push_back({aux[i][j].frozen_mfg, -1.0});
      b.add_constraint(indexed("cryo_required", {i}), std::move(cryo_required), Sense::greater_equal, 0.0);
    }
    for (std::size_t j = 0; j < n_j; ++j) {
      b.add_constraint(indexed("mfg_if_open", {i, j}),
                       {{vm.manufacturing_assignment[i * n_j + j], 1.0}, {vm.manufacturing_open[j], -1.0}},
                       Sense::less_equal, 0.0);
      b.add_constraint(indexed("cryo_if_open", {i, j}),
                       {{vm.cryo_assignment[i * n_j + j], 1.0}, {vm.cryo_open[j], -1.0}}, Sense::less_equal, 0.0);
    }
  }
  for (std::size_t j = 0; j < n_j; ++j) {
    b.add_constraint(indexed("one_type", {j}), {{vm.manufacturing_open[j], 1.0}, {vm.cryo_open[j], 1.0}},
                     Sense::less_equal, 1.0);
    LinearExpression modes;
    for (std::size_t k = 0; k < n_k; ++k) modes.push_back({vm.mode_assignment[j * n_k + k], 1.0});
    modes.push_back({vm.manufacturing_open[j], -1.0});
    b.add_constraint(indexed("mode_if_mfg", {j}), std::move(modes), Sense::equal, 0.0);
  }

  // Objectives. With x = assign_mfg[i,j], z = frozen[i], m_k = mode[j,k],
  // c_k = x*m_k, e_k = c_k*z and D(j') = d(i,j') + d(j',j):
  //   x*TTM   = (x - x*z) d(i,j) + sum_j' x*z*xc_j' D(j')
  //   x*PT    = sum_k (c_k - e_k) pf_k + e_k pz_k
  //   x*r*TTM = sum_k r_k [(c_k - e_k) d(i,j) + sum_j' e_k*xc_j' D(j')]
  //   x*r*PT  = sum_k r_k [(c_k - e_k) pf_k + e_k pz_k]   (m_k m_k' = 0 for k != k')
  const std::size_t n_vars = b.variable_count();
  DenseExpression w(n_vars), c(n_vars), v(n_vars);
  for (std::size_t j = 0; j < n_j; ++j) {
    c.add(vm.manufacturing_open[j], inst.location(j).setup_cost_manufacturing);
    c.add(vm.cryo_open[j], inst.location(j).setup_cost_cryo);
  }
  for (std::size_t i = 0; i < n_i; ++i) {
    for (std::size_t j = 0; j < n_j; ++j) {
      const int x = vm.manufacturing_assignment[i * n_j + j];
      const PairAuxiliaries& a = aux[i][j];
      const double d_to = inst.to_location(i, j);
      v.add(x, 1.0);
      w.add(x, inst.to_order(j, i) + d_to);
      w.add(a.frozen_mfg, -d_to);
      for (std::size_t jp = 0; jp < n_j; ++jp) {
        w.add(a.frozen_via[jp], inst.to_location(i, jp) + inst.between_locations(jp, j));
      }
      for (std::size_t k = 0; k < n_k; ++k) {
        const double r = inst.failure_rate(i, k);
        const double pf = inst.mode(k).production_time_fresh_hours;
        const double pz = inst.mode(k).production_time_frozen_hours;
        const int ck = a.mfg_mode[k];
        const int ek = a.frozen_mode[k];
        w.add(ck, (1.0 + r) * pf + r * d_to);
        w.add(ek, (1.0 + r) * (pz - pf) - r * d_to);
        for (std::size_t jp = 0; jp < n_j; ++jp) {
          w.add(a.frozen_mode_via[k * n_j + jp], r * (inst.to_location(i, jp) + inst.between_locations(jp, j)));
        }
        const double cf = inst.op_cost_fresh(i, j, k);
        const double cz = inst.op_cost_frozen(i, j, k);
        c.add(ck, (1.0 + r) * cf);
        c.add(ek, (1.0 + r) * (cz - cf));
      }
    }
  }
  enc.waiting_time = w.compact();
  enc.cost = c.compact();
  enc.coverage = v.compact();

  DenseExpression objective(n_vars);
  if (const auto* ws = std::get_if<WeightedSum>(&scalarization)) {
    objective.add(w, ws->time);
    objective.add(c, ws->cost);
    objective.add(v, -ws->coverage);
  } else {
    const auto& e = std::get<EpsilonConstraint>(scalarization);
    switch (e.primary) {
      case Objective::waiting_time: objective.add(w, 1.0); break;
      case Objective::cost: objective.add(c, 1.0); break;
      case Objective::coverage: objective.add(v, -1.0); break;
    }
    if (e.max_waiting_time) b.add_constraint("max_waiting_time", enc.waiting_time, Sense::less_equal, *e.max_waiting_time);
    if (e.max_cost) b.add_constraint("max_cost", enc.cost, Sense::less_equal, *e.max_cost);
    if (e.min_coverage) {
      b.add_constraint("min_coverage", enc.coverage, Sense::greater_equal, static_cast<double>(*e.min_coverage));
    }
  }
  b.program().objective = objective.compact();
  enc.program = std::move(b.program());
  return enc;
}

std::vector<std::uint8_t> lift(const Encoding& enc, const Solution& s) {
  const VariableMap& vm = enc.variables;
  std::vector<std::uint8_t> x(enc.program.variables.size(), 0);
  const std::size_t n_j = vm.manufacturing_open.size();
  const std::size_t n_i = vm.cryopreserved.size();
  const std::size_t n_k = n_j == 0 ? 0 : vm.mode_assignment.size() / n_j;
  for (std::size_t j = 0; j < n_j; ++j) {
    x[vm.manufacturing_open[j]] = s.manufacturing_open[j];
    x[vm.cryo_open[j]] = s.cryo_open[j];
    for (std::size_t k = 0; k < n_k; ++k) x[vm.mode_assignment[j * n_k + k]] = s.mode_assignment(j, k);
  }
  for (std::size_t i = 0; i < n_i; ++i) {
    x[vm.cryopreserved[i]] = s.cryopreserved[i];
    for (std::size_t j = 0; j < n_j; ++j) {
      x[vm.manufacturing_assignment[i * n_j + j]] = s.manufacturing_assignment(i, j);
      x[vm.cryo_assignment[i * n_j + j]] = s.cryo_assignment(i, j);
    }
  }
  for (const auto& p : enc.program.products) x[p.product] = x[p.left] & x[p.right];
  return x;
}

Solution decode(const Instance& inst, const Encoding& enc, std::span<const std::uint8_t> x) {
  if (x.size() != enc.program.variables.size()) {
    throw InconsistentAssignment("assignment has " + std::to_string(x.size()) + " values, program has " +
                                 std::to_string(enc.program.variables.size()) + " variables");
  }
  for (const auto& p : enc.program.products) {
    if (x[p.product] != (x[p.left] & x[p.right])) {
      throw InconsistentAssignment("auxiliary " + enc.program.variables[p.product].name +
                                   " does not equal the product of " + enc.program.variables[p.left].name + " and " +
                                   enc.program.variables[p.right].name);
    }
  }
  const VariableMap& vm = enc.variables;
  const std::size_t n_i = inst.order_count();
  const std::size_t n_j = inst.location_count();
  const std::size_t n_k = inst.mode_count();
  Solution s = Solution::empty(inst);
  for (std::size_t j = 0; j < n_j; ++j) {
    s.manufacturing_open[j] = x[vm.manufacturing_open[j]];
    s.cryo_open[j] = x[vm.cryo_open[j]];
    for (std::size_t k = 0; k < n_k; ++k) s.mode_assignment.set(j, k, x[vm.mode_assignment[j * n_k + k]] != 0);
  }
  for (std::size_t i = 0; i < n_i; ++i) {
    s.cryopreserved[i] = x[vm.cryopreserved[i]];
    for (std::size_t j = 0; j < n_j; ++j) {
      s.manufacturing_assignment.set(i, j, x[vm.manufacturing_assignment[i * n_j + j]] != 0);
      s.cryo_assignment.set(i, j, x[vm.cryo_assignment[i * n_j + j]] != 0);
    }
  }
  return s;
}

}  // namespace atmp::milp
