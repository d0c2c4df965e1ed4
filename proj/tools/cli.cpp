#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "atmp/classical.hpp"
#include "atmp/evaluator.hpp"
#include "atmp/exact.hpp"
#include "atmp/heuristic.hpp"
#include "atmp/instance.hpp"
#include "atmp/milp.hpp"
#include "atmp/pareto.hpp"

namespace atmp::cli {

namespace {

using json = nlohmann::ordered_json;

// Bad command-line values; reported with exit code 2.
struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string instance;
  std::string out;
  std::uint64_t seed = 0;
  bool paper_strict = false;

  // gen
  std::size_t orders = 3, locations = 3, modes = 2;
  double hours_per_unit = 48.0;

  // eval
  std::string solution;

  // scalarization
  std::string weights;
  std::optional<std::string> primary;
  std::optional<double> max_cost, max_waiting;
  std::optional<int> min_coverage;

  // solvers
  std::string method = "exact";
  std::uint64_t node_limit = 10'000'000;
  double time_limit = 60.0;
  std::size_t starts = 8;
  std::size_t max_no_improve = 4;
  std::size_t cost_levels = 16;
  unsigned threads = 0;
  std::string solutions_out;

  // baseline
  std::string model = "lscp";
  double radius = 0.0;
  double backup_radius = 0.0;
  std::size_t p = 1;
  std::vector<double> demand_weights;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw BadInput("cannot write " + path);
  file << text;
}

Instance load_instance(const Flags& f) {
  if (f.instance.empty()) throw BadInput("--instance is required");
  return read_instance(read_file(f.instance));
}

Scalarization scalarization_of(const Flags& f) {
  const bool epsilon = f.max_cost || f.max_waiting || f.min_coverage;
  if (!f.weights.empty()) {
    if (epsilon) throw BadInput("--weights cannot be combined with epsilon bounds");
    std::vector<double> w;
    std::stringstream ss(f.weights);
    for (std::string part; std::getline(ss, part, ',');) {
      try {
        std::size_t used = 0;
        w.push_back(std::stod(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::exception&) {
        throw BadInput("--weights: bad number '" + part + "'");
      }
    }
    if (w.size() != 3) throw BadInput("--weights expects three numbers: time,cost,coverage");
    Scalarization s = WeightedSum{w[0], w[1], w[2]};
    try {
      check_scalarization(s);
    } catch (const std::invalid_argument& e) {
      throw BadInput(std::string("--weights: ") + e.what());
    }
    return s;
  }
  EpsilonConstraint e;
  try {
    e.primary = parse_objective(f.primary.value_or("W"));
  } catch (const std::invalid_argument& ex) {
    throw BadInput(std::string("--primary: ") + ex.what());
  }
  e.max_cost = f.max_cost;
  e.max_waiting_time = f.max_waiting;
  e.min_coverage = f.min_coverage;
  if (!epsilon && !f.primary) throw BadInput("give --weights, --primary or an epsilon bound");
  return e;
}

json objective_json(const ObjectiveVector& o) {
  json j = json::object();
  j["waiting_hours"] = o.waiting_time_hours;
  j["cost"] = o.cost;
  j["coverage"] = o.coverage;
  return j;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

int cmd_gen(const Flags& f, std::ostream& out) {
  GenerateParams params;
  params.orders = f.orders;
  params.locations = f.locations;
  params.modes = f.modes;
  params.seed = f.seed;
  params.hours_per_unit = f.hours_per_unit;
  Instance inst = [&] {
    try {
      return generate(params);
    } catch (const std::invalid_argument& e) {
      throw BadInput(e.what());
    }
  }();
  emit(write_instance(inst), f.out, out);
  return kOk;
}

int cmd_validate(const Flags& f, std::ostream& out) {
  if (f.instance.empty()) throw BadInput("--instance is required");
  const InstanceData data = parse_instance(read_file(f.instance));
  std::vector<Violation> violations;
  try {
    violations = validate(data);
  } catch (const InstanceShapeError& e) {
    throw BadInput(e.what());
  }
  std::string report;
  for (const auto& v : violations) report += v.to_string() + "\n";
  if (violations.empty()) report = "ok\n";
  emit(report, f.out, out);
  return violations.empty() ? kOk : kInfeasible;
}

int cmd_eval(const Flags& f, std::ostream& out) {
  const Instance inst = load_instance(f);
  if (f.solution.empty()) throw BadInput("--solution is required");
  const Solution s = read_solution(read_file(f.solution));
  if (!s.shaped_for(inst)) throw BadInput("solution arrays are not shaped for this instance");
  const auto violations = check_feasible(inst, s);
  json doc = json::object();
  json list = json::array();
  bool feasible = true;
  for (const auto& v : violations) {
    list.push_back(v.to_string());
    feasible = feasible && v.severity != Severity::error;
  }
  doc["feasible"] = feasible;
  doc["violations"] = std::move(list);
  if (feasible) doc["objective"] = objective_json(evaluate(inst, s));
  emit(dump(doc), f.out, out);
  return feasible ? kOk : kInfeasible;
}

SearchParams search_params(const Flags& f) {
  SearchParams p;
  p.starts = f.starts;
  p.max_no_improve = f.max_no_improve;
  p.seed = f.seed;
  p.paper_strict = f.paper_strict;
  try {
    check_params(p);
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
  return p;
}

SolveOptions solve_options(const Flags& f) {
  SolveOptions o;
  o.paper_strict = f.paper_strict;
  o.node_limit = f.node_limit;
  o.time_limit_seconds = f.time_limit;
  return o;
}

int cmd_solve(const Flags& f, std::ostream& out) {
  const Instance inst = load_instance(f);
  const Scalarization s = scalarization_of(f);
  json doc = json::object();
  doc["scalarization"] = to_string(s);
  doc["method"] = f.method;
  bool feasible = false;
  bool exhausted = false;
  Solution solution;
  ObjectiveVector objective;
  if (f.method == "exact") {
    const SolveResult r = solve(inst, s, solve_options(f));
    feasible = r.feasible;
    exhausted = !r.stats.proven_optimal;
    solution = r.solution;
    objective = r.objective;
    json stats = json::object();
    stats["nodes_explored"] = r.stats.nodes_explored;
    stats["nodes_pruned"] = r.stats.nodes_pruned;
    stats["root_bound"] = std::isfinite(r.stats.root_bound) ? json(r.stats.root_bound) : json("inf");
    stats["proven_optimal"] = r.stats.proven_optimal;
    doc["stats"] = std::move(stats);
  } else if (f.method == "heuristic") {
    const HeuristicResult r = local_search(inst, s, search_params(f));
    feasible = r.feasible;
    solution = r.solution;
    objective = r.objective;
    json stats = json::object();
    stats["evaluations"] = r.evaluations;
    stats["starts_run"] = r.starts_run;
    doc["stats"] = std::move(stats);
  } else {
    throw BadInput("--method must be exact or heuristic");
  }
  doc["feasible"] = feasible;
  if (feasible) {
    doc["objective"] = objective_json(objective);
    doc["solution"] = json::parse(write_solution(solution));
  }
  emit(dump(doc), f.out, out);
  if (exhausted) return kBudgetExhausted;
  return feasible ? kOk : kInfeasible;
}

int cmd_front(const Flags& f, std::ostream& out) {
  const Instance inst = load_instance(f);
  FrontGrid grid;
  if (f.cost_levels == 0) throw BadInput("--cost-levels must be at least 1");
  grid.cost_levels = f.cost_levels;
  grid.threads = f.threads;
  grid.solve = solve_options(f);
  ParetoFront front;
  bool exhausted = false;
  if (f.method == "exact") {
    front = front_exact(inst, grid);
    exhausted = front.approximate;
  } else if (f.method == "heuristic") {
    front = front_heuristic(inst, grid, search_params(f));
  } else {
    throw BadInput("--method must be exact or heuristic");
  }
  emit(write_front_csv(front), f.out, out);
  std::string sidecar = f.solutions_out;
  if (sidecar.empty() && !f.out.empty() && f.out != "-") sidecar = f.out + ".solutions.json";
  if (!sidecar.empty()) emit(write_front_solutions(front), sidecar, out);
  return exhausted ? kBudgetExhausted : kOk;
}

int cmd_baseline(const Flags& f, std::ostream& out) {
  const Instance inst = load_instance(f);
  CoverSpec spec;
  spec.coverage_radius_hours = f.radius;
  spec.p = f.p;
  spec.demand_weights = f.demand_weights;
  BaselineResult r;
  try {
    if (f.model == "lscp") {
      r = lscp(inst, spec);
    } else if (f.model == "mclp") {
      r = mclp(inst, spec);
    } else if (f.model == "pmedian") {
      r = p_median(inst, spec);
    } else if (f.model == "pcenter") {
      r = p_center(inst, spec);
    } else if (f.model == "backup") {
      r = backup_lscp(inst, BackupCoverSpec{f.radius, f.backup_radius});
    } else {
      throw BadInput("--model must be lscp, mclp, pmedian, pcenter or backup");
    }
  } catch (const UncoverableOrders& e) {
    json doc = json::object();
    doc["model"] = f.model;
    doc["feasible"] = false;
    doc["uncoverable_orders"] = e.orders();
    emit(dump(doc), f.out, out);
    return kInfeasible;
  } catch (const BadInput&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
  json doc = json::object();
  doc["model"] = f.model;
  doc["feasible"] = true;
  doc["open"] = r.open;
  doc["value"] = r.value;
  emit(dump(doc), f.out, out);
  return kOk;
}

int cmd_export_lp(const Flags& f, std::ostream& out) {
  const Instance inst = load_instance(f);
  const milp::Encoding enc = milp::encode(inst, scalarization_of(f), {f.paper_strict});
  emit(milp::write_lp(enc.program), f.out, out);
  return kOk;
}

void add_common(CLI::App* cmd, Flags& f, bool needs_instance = true) {
  if (needs_instance) cmd->add_option("--instance", f.instance, "Instance JSON file");
  cmd->add_option("--seed", f.seed, "Random seed");
  cmd->add_option("--out", f.out, "Output path (default: stdout)");
  cmd->add_flag("--paper-strict", f.paper_strict,
                "Allow cryopreserved orders to be covered without a cryo facility");
}

void add_scalarization(CLI::App* cmd, Flags& f) {
  cmd->add_option("--weights", f.weights, "Weighted sum time,cost,coverage (coverage is a reward per patient)");
  cmd->add_option("--primary", f.primary, "Epsilon-constraint objective: W, C or V (default W)");
  cmd->add_option("--max-cost", f.max_cost, "Epsilon bound on total cost");
  cmd->add_option("--max-waiting", f.max_waiting, "Epsilon bound on total waiting hours");
  cmd->add_option("--min-coverage", f.min_coverage, "Epsilon floor on patients covered");
}

void add_budgets(CLI::App* cmd, Flags& f) {
  cmd->add_option("--method", f.method, "exact or heuristic")->capture_default_str();
  cmd->add_option("--node-limit", f.node_limit, "Exact search node cap")->capture_default_str();
  cmd->add_option("--time-limit", f.time_limit, "Exact search wall-clock cap, seconds")->capture_default_str();
  cmd->add_option("--starts", f.starts, "Heuristic starts")->capture_default_str();
  cmd->add_option("--max-no-improve", f.max_no_improve, "Heuristic starts without improvement before stopping")
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Network design for autologous therapies: orders, manufacturing and cryo sites.\n"
               "Instances are JSON documents, schema version " +
                   std::to_string(kInstanceSchemaVersion) + ".",
               "atmpnet"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  add_common(gen, f, false);
  gen->add_option("--orders", f.orders, "Number of orders")->capture_default_str();
  gen->add_option("--locations", f.locations, "Number of candidate locations")->capture_default_str();
  gen->add_option("--modes", f.modes, "Number of manufacturing modes")->capture_default_str();
  gen->add_option("--hours-per-unit", f.hours_per_unit, "Travel hours per unit distance")->capture_default_str();

  auto* validate_cmd = app.add_subcommand("validate", "Check an instance; exit 1 on violations, 2 if unreadable");
  add_common(validate_cmd, f);

  auto* eval = app.add_subcommand("eval", "Score a solution file");
  add_common(eval, f);
  eval->add_option("--solution", f.solution, "Solution JSON file");

  auto* solve_cmd = app.add_subcommand("solve", "Optimize one scalarization");
  add_common(solve_cmd, f);
  add_scalarization(solve_cmd, f);
  add_budgets(solve_cmd, f);

  auto* front = app.add_subcommand("front", "Pareto front as CSV plus a solutions sidecar");
  add_common(front, f);
  add_budgets(front, f);
  front->add_option("--cost-levels", f.cost_levels, "Cost bounds tried per coverage level")->capture_default_str();
  front->add_option("--threads", f.threads, "Coverage levels solved in parallel (0: all cores)")
      ->capture_default_str();
  front->add_option("--solutions", f.solutions_out, "Sidecar path (default: <out>.solutions.json)");

  auto* baseline = app.add_subcommand("baseline", "Classical covering and median models");
  add_common(baseline, f);
  baseline->add_option("--model", f.model, "lscp, mclp, pmedian, pcenter or backup")->capture_default_str();
  baseline->add_option("--radius", f.radius, "Coverage radius, hours (primary radius for backup)");
  baseline->add_option("--backup-radius", f.backup_radius, "Backup coverage radius, hours");
  baseline->add_option("--p", f.p, "Facility count")->capture_default_str();
  baseline->add_option("--demand-weights", f.demand_weights, "Per-order demand weights (default 1)")->delimiter(',');

  auto* export_lp = app.add_subcommand("export-lp", "Write the linearized program in LP format");
  add_common(export_lp, f);
  add_scalarization(export_lp, f);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*gen) return cmd_gen(f, out);
    if (*validate_cmd) return cmd_validate(f, out);
    if (*eval) return cmd_eval(f, out);
    if (*solve_cmd) return cmd_solve(f, out);
    if (*front) return cmd_front(f, out);
    if (*baseline) return cmd_baseline(f, out);
    if (*export_lp) return cmd_export_lp(f, out);
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const BadInput& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const InstanceShapeError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace atmp::cli
