#include <utility>

#include "atmp/instance.hpp"
#include "json_util.hpp"

namespace atmp {

using detail::as_int;
using detail::as_number;
using detail::child_path;
using detail::json;
using detail::require;
using detail::require_array;

SchemaError::SchemaError(std::string path, const std::string& what)
    : std::runtime_error((path.empty() ? std::string("/") : path) + ": " + what), path_(std::move(path)) {}

namespace {

std::string join_violations(const std::vector<Violation>& violations) {
  std::string out = "instance violates " + std::to_string(violations.size()) + " invariant(s)";
  for (const auto& v : violations) out += "\n  " + v.to_string();
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(join_violations(violations)), violations_(std::move(violations)) {}

InstanceData parse_instance(const std::string& text) {
  const json doc = detail::parse_document(text);
  if (!doc.is_object()) throw SchemaError("", "expected an object at document root");
  InstanceData d;

  const json& orders = require_array(require(doc, "orders", ""), "/orders");
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const std::string p = child_path("/orders", i);
    d.orders.push_back({as_int(require(orders[i], "id", p), child_path(p, "id")),
                        as_number(require(orders[i], "shelf_life_hours", p), child_path(p, "shelf_life_hours"))});
  }

  const json& locations = require_array(require(doc, "locations", ""), "/locations");
  for (std::size_t j = 0; j < locations.size(); ++j) {
    const std::string p = child_path("/locations", j);
    const json& l = locations[j];
    d.locations.push_back(
        {as_int(require(l, "id", p), child_path(p, "id")),
         as_number(require(l, "setup_cost_manufacturing", p), child_path(p, "setup_cost_manufacturing")),
         as_number(require(l, "setup_cost_cryo", p), child_path(p, "setup_cost_cryo"))});
  }

  const json& modes = require_array(require(doc, "modes", ""), "/modes");
  for (std::size_t k = 0; k < modes.size(); ++k) {
    const std::string p = child_path("/modes", k);
    const json& m = modes[k];
    d.modes.push_back({as_int(require(m, "id", p), child_path(p, "id")),
                       as_number(require(m, "p_fresh_hours", p), child_path(p, "p_fresh_hours")),
                       as_number(require(m, "p_frozen_hours", p), child_path(p, "p_frozen_hours"))});
  }

  const std::size_t n_i = d.orders.size();
  const std::size_t n_j = d.locations.size();
  const std::size_t n_k = d.modes.size();
  const std::size_t nodes = n_i + n_j;

  const json& travel = require_array(require(doc, "travel", ""), nodes, "/travel");
  std::vector<double> entries;
  entries.reserve(nodes * nodes);
  for (std::size_t a = 0; a < nodes; ++a) {
    const std::string p = child_path("/travel", a);
    const json& row = require_array(travel[a], nodes, p);
    for (std::size_t b = 0; b < nodes; ++b) entries.push_back(as_number(row[b], child_path(p, b)));
  }
  d.travel = TravelMatrix(nodes, std::move(entries));

  auto read_tensor = [&](const char* key) {
    const std::string root = std::string("/") + key;
    const json& t = require_array(require(doc, key, ""), n_i, root);
    std::vector<double> out;
    out.reserve(n_i * n_j * n_k);
    for (std::size_t i = 0; i < n_i; ++i) {
      const std::string pi = child_path(root, i);
      const json& ti = require_array(t[i], n_j, pi);
      for (std::size_t j = 0; j < n_j; ++j) {
        const std::string pj = child_path(pi, j);
        const json& tj = require_array(ti[j], n_k, pj);
        for (std::size_t k = 0; k < n_k; ++k) out.push_back(as_number(tj[k], child_path(pj, k)));
      }
    }
    return out;
  };
  d.op_cost_fresh = read_tensor("op_cost_fresh");
  d.op_cost_frozen = read_tensor("op_cost_frozen");

  const json& rates = require_array(require(doc, "failure_rate", ""), n_i, "/failure_rate");
  for (std::size_t i = 0; i < n_i; ++i) {
    const std::string p = child_path("/failure_rate", i);
    const json& row = require_array(rates[i], n_k, p);
    for (std::size_t k = 0; k < n_k; ++k) d.failure_rate.push_back(as_number(row[k], child_path(p, k)));
  }

  if (auto it = doc.find("big_t_hours"); it != doc.end() && !it->is_null()) {
    d.big_t_hours = as_number(*it, "/big_t_hours");
  }
  if (auto it = doc.find("cryo_leg_limit_hours"); it != doc.end() && !it->is_null()) {
    d.cryo_leg_limit_hours = as_number(*it, "/cryo_leg_limit_hours");
  }
  if (auto it = doc.find("schema_version"); it != doc.end()) {
    const int version = as_int(*it, "/schema_version");
    if (version != kInstanceSchemaVersion) {
      throw SchemaError("/schema_version", "unsupported schema version " + std::to_string(version));
    }
  }
  return d;
}

Instance read_instance(const std::string& text) {
  InstanceData data = parse_instance(text);
  auto violations = validate(data);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return Instance(std::move(data));
}

std::string write_instance(const Instance& instance) {
  const auto& d = instance.data();
  const std::size_t n_i = instance.order_count();
  const std::size_t n_j = instance.location_count();
  const std::size_t n_k = instance.mode_count();

  json doc = json::object();
  json orders = json::array();
  for (const auto& o : d.orders) orders.push_back({{"id", o.id}, {"shelf_life_hours", o.shelf_life_hours}});
  doc["orders"] = std::move(orders);

  json locations = json::array();
  for (const auto& l : d.locations) {
    locations.push_back({{"id", l.id},
                         {"setup_cost_manufacturing", l.setup_cost_manufacturing},
                         {"setup_cost_cryo", l.setup_cost_cryo}});
  }
  doc["locations"] = std::move(locations);

  json modes = json::array();
  for (const auto& m : d.modes) {
    modes.push_back({{"id", m.id}, {"p_fresh_hours", m.production_time_fresh_hours},
                     {"p_frozen_hours", m.production_time_frozen_hours}});
  }
  doc["modes"] = std::move(modes);

  json travel = json::array();
  for (std::size_t a = 0; a < d.travel.node_count(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < d.travel.node_count(); ++b) row.push_back(d.travel(a, b));
    travel.push_back(std::move(row));
  }
  doc["travel"] = std::move(travel);

  auto write_tensor = [&](bool fresh) {
    json t = json::array();
    for (std::size_t i = 0; i < n_i; ++i) {
      json ti = json::array();
      for (std::size_t j = 0; j < n_j; ++j) {
        json tj = json::array();
        for (std::size_t k = 0; k < n_k; ++k) {
          tj.push_back(fresh ? instance.op_cost_fresh(i, j, k) : instance.op_cost_frozen(i, j, k));
        }
        ti.push_back(std::move(tj));
      }
      t.push_back(std::move(ti));
    }
    return t;
  };
  doc["op_cost_fresh"] = write_tensor(true);
  doc["op_cost_frozen"] = write_tensor(false);

  json rates = json::array();
  for (std::size_t i = 0; i < n_i; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < n_k; ++k) row.push_back(instance.failure_rate(i, k));
    rates.push_back(std::move(row));
  }
  doc["failure_rate"] = std::move(rates);
  doc["big_t_hours"] = instance.big_t_hours();
  doc["cryo_leg_limit_hours"] = instance.cryo_leg_limit_hours();
  doc["schema_version"] = kInstanceSchemaVersion;
  return doc.dump() + "\n";
}

}  // namespace atmp
