#include "atmp/pareto.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "atmp/evaluator.hpp"

namespace atmp {

namespace {

using json = nlohmann::ordered_json;

struct LevelResult {
  std::vector<FrontPoint> points;
  bool approximate = false;
};

LevelResult sweep_level(int level, const FrontGrid& grid, const CellSolver& solver) {
  LevelResult out;
  EpsilonConstraint cell;
  cell.primary = Objective::waiting_time;
  cell.min_coverage = level;
  std::optional<Configuration> warm;
  for (std::size_t step = 0;; ++step) {
    if (step == grid.cost_levels) {
      out.approximate = true;
      break;
    }
    CellResult r = solver(cell, warm);
    if (!r.proven) out.approximate = true;
    if (!r.feasible) break;
    const double c = r.objective.cost;
    out.points.push_back(FrontPoint{std::move(r.solution), r.objective, r.proven, 0});
    warm = std::move(r.configuration);
    cell.max_cost = c - 1e-6 * std::max(1.0, std::abs(c));
  }
  return out;
}

bool weakly_dominates(const ObjectiveVector& a, const ObjectiveVector& b, double tol) {
  return a.waiting_time_hours <= b.waiting_time_hours + tol && a.cost <= b.cost + tol && a.coverage >= b.coverage;
}

}  // namespace

ParetoFront epsilon_sweep(const Instance& instance, const FrontGrid& grid, const CellSolver& solver) {
  const int levels = static_cast<int>(instance.order_count()) + 1;
  std::vector<LevelResult> results(static_cast<std::size_t>(levels));
  unsigned threads = grid.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : grid.threads;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(levels));

  if (threads <= 1) {
    for (int v = 0; v < levels; ++v) results[static_cast<std::size_t>(v)] = sweep_level(v, grid, solver);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (int v = next++; v < levels; v = next++) {
          try {
            results[static_cast<std::size_t>(v)] = sweep_level(v, grid, solver);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  ParetoFront all;
  for (auto& level : results) {
    all.approximate = all.approximate || level.approximate;
    for (auto& p : level.points) all.points.push_back(std::move(p));
  }
  const auto keep = nondominated_indices(objectives(all), kFeasibilityTolerance);
  ParetoFront front;
  front.approximate = all.approximate;
  for (std::size_t idx : keep) front.points.push_back(std::move(all.points[idx]));
  sort_front(front);
  return front;
}

ParetoFront front_exact(const Instance& instance, const FrontGrid& grid) {
  const CellSolver solver = [&](const EpsilonConstraint& cell, const std::optional<Configuration>&) {
    SolveResult r = solve(instance, cell, grid.solve);
    CellResult out;
    out.feasible = r.feasible;
    out.solution = std::move(r.solution);
    out.objective = r.objective;
    out.proven = r.stats.proven_optimal;
    out.configuration = std::move(r.configuration);
    return out;
  };
  return epsilon_sweep(instance, grid, solver);
}

std::vector<std::size_t> nondominated_indices(const std::vector<ObjectiveVector>& points, double tolerance) {
  std::vector<std::size_t> keep;
  for (std::size_t b = 0; b < points.size(); ++b) {
    bool dropped = false;
    for (std::size_t a = 0; a < points.size() && !dropped; ++a) {
      if (a == b || !weakly_dominates(points[a], points[b], tolerance)) continue;
      const bool equal = weakly_dominates(points[b], points[a], tolerance);
      dropped = !equal || a < b;
    }
    if (!dropped) keep.push_back(b);
  }
  return keep;
}

std::vector<ObjectiveVector> nondominated_filter(const std::vector<ObjectiveVector>& points, double tolerance) {
  std::vector<ObjectiveVector> out;
  for (std::size_t idx : nondominated_indices(points, tolerance)) out.push_back(points[idx]);
  return out;
}

void sort_front(ParetoFront& front) {
  std::stable_sort(front.points.begin(), front.points.end(), [](const FrontPoint& a, const FrontPoint& b) {
    if (a.objective.coverage != b.objective.coverage) return a.objective.coverage > b.objective.coverage;
    if (a.objective.cost != b.objective.cost) return a.objective.cost < b.objective.cost;
    return a.objective.waiting_time_hours < b.objective.waiting_time_hours;
  });
  for (std::size_t n = 0; n < front.points.size(); ++n) front.points[n].solution_id = n;
}

std::vector<ObjectiveVector> objectives(const ParetoFront& front) {
  std::vector<ObjectiveVector> out;
  out.reserve(front.points.size());
  for (const auto& p : front.points) out.push_back(p.objective);
  return out;
}

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, end);
}

std::string write_front_csv(const ParetoFront& front) {
  std::string out = "v,cost,waiting_hours,solution_id,optimality_flag,mean_waiting_hours\n";
  for (const auto& p : front.points) {
    const auto& o = p.objective;
    const double mean = o.coverage > 0 ? o.waiting_time_hours / o.coverage : 0.0;
    out += std::to_string(o.coverage) + ',' + format_number(o.cost) + ',' + format_number(o.waiting_time_hours) + ',' +
           std::to_string(p.solution_id) + ',' + (p.optimal ? "optimal" : "approximate") + ',' + format_number(mean) +
           '\n';
  }
  return out;
}

std::string write_front_solutions(const ParetoFront& front) {
  json doc = json::object();
  doc["approximate"] = front.approximate;
  json list = json::array();
  for (const auto& p : front.points) {
    json entry = json::object();
    entry["solution_id"] = p.solution_id;
    entry["coverage"] = p.objective.coverage;
    entry["cost"] = p.objective.cost;
    entry["waiting_hours"] = p.objective.waiting_time_hours;
    entry["optimal"] = p.optimal;
    entry["solution"] = json::parse(write_solution(p.solution));
    list.push_back(std::move(entry));
  }
  doc["points"] = std::move(list);
  return doc.dump(2) + "\n";
}

namespace {

double parse_double(const std::string& field, std::size_t line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::invalid_argument("front csv line " + std::to_string(line) + ": bad number '" + field + "'");
  }
  return v;
}

long long parse_integer(const std::string& field, std::size_t line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::invalid_argument("front csv line " + std::to_string(line) + ": bad integer '" + field + "'");
  }
  return v;
}

}  // namespace

std::vector<FrontRow> read_front_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("v,cost,waiting_hours,solution_id,optimality_flag", 0) != 0) {
    throw std::invalid_argument("front csv: missing or unexpected header");
  }
  std::vector<FrontRow> rows;
  for (std::size_t n = 2; std::getline(in, line); ++n) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ls(line);
    for (std::string f; std::getline(ls, f, ',');) fields.push_back(f);
    if (fields.size() != 6) throw std::invalid_argument("front csv line " + std::to_string(n) + ": expected 6 fields");
    FrontRow r;
    r.coverage = static_cast<int>(parse_integer(fields[0], n));
    r.cost = parse_double(fields[1], n);
    r.waiting_time_hours = parse_double(fields[2], n);
    r.solution_id = static_cast<std::size_t>(parse_integer(fields[3], n));
    if (fields[4] != "optimal" && fields[4] != "approximate") {
      throw std::invalid_argument("front csv line " + std::to_string(n) + ": bad optimality flag");
    }
    r.optimal = fields[4] == "optimal";
    r.mean_waiting_hours = parse_double(fields[5], n);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace atmp
