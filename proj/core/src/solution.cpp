#include "atmp/solution.hpp"

#include <cmath>
#include <sstream>

#include "atmp/instance.hpp"
#include "json_util.hpp"

namespace atmp {

std::size_t BitMatrix::row_sum(std::size_t r) const {
  std::size_t n = 0;
  for (std::size_t c = 0; c < cols_; ++c) n += bits_[r * cols_ + c];
  return n;
}

std::size_t BitMatrix::first_in_row(std::size_t r) const {
  for (std::size_t c = 0; c < cols_; ++c) {
    if (bits_[r * cols_ + c]) return c;
  }
  return cols_;
}

Solution Solution::empty(std::size_t orders, std::size_t locations, std::size_t modes) {
  Solution s;
  s.manufacturing_open.assign(locations, 0);
  s.cryo_open.assign(locations, 0);
  s.manufacturing_assignment = BitMatrix(orders, locations);
  s.cryo_assignment = BitMatrix(orders, locations);
  s.cryopreserved.assign(orders, 0);
  s.mode_assignment = BitMatrix(locations, modes);
  return s;
}

Solution Solution::empty(const Instance& instance) {
  return empty(instance.order_count(), instance.location_count(), instance.mode_count());
}

bool Solution::shaped_for(const Instance& instance) const {
  const std::size_t n_i = instance.order_count();
  const std::size_t n_j = instance.location_count();
  const std::size_t n_k = instance.mode_count();
  return manufacturing_open.size() == n_j && cryo_open.size() == n_j &&
         manufacturing_assignment.rows() == n_i && manufacturing_assignment.cols() == n_j &&
         cryo_assignment.rows() == n_i && cryo_assignment.cols() == n_j && cryopreserved.size() == n_i &&
         mode_assignment.rows() == n_j && mode_assignment.cols() == n_k;
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  const bool no_worse = a.waiting_time_hours <= b.waiting_time_hours && a.cost <= b.cost && a.coverage >= b.coverage;
  const bool better = a.waiting_time_hours < b.waiting_time_hours || a.cost < b.cost || a.coverage > b.coverage;
  return no_worse && better;
}

bool approx_equal(const ObjectiveVector& a, const ObjectiveVector& b, double tolerance) {
  return a.coverage == b.coverage && std::abs(a.waiting_time_hours - b.waiting_time_hours) <= tolerance &&
         std::abs(a.cost - b.cost) <= tolerance;
}

std::string to_string(const ObjectiveVector& objective) {
  std::ostringstream out;
  out.precision(17);
  out << "(W=" << objective.waiting_time_hours << ", C=" << objective.cost << ", V=" << objective.coverage << ")";
  return out.str();
}

namespace {

using detail::json;

json bits_to_json(const std::vector<std::uint8_t>& bits) {
  json out = json::array();
  for (auto b : bits) out.push_back(static_cast<int>(b));
  return out;
}

json bits_to_json(const BitMatrix& bits) {
  json out = json::array();
  for (std::size_t r = 0; r < bits.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < bits.cols(); ++c) row.push_back(bits(r, c) ? 1 : 0);
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::uint8_t> read_bits(const json& doc, const char* key) {
  const std::string path = std::string("/") + key;
  const json& arr = detail::require_array(detail::require(doc, key, ""), path);
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(detail::as_bit(arr[i], detail::child_path(path, i)) ? 1 : 0);
  }
  return out;
}

BitMatrix read_bit_matrix(const json& doc, const char* key, std::size_t rows, std::size_t cols) {
  const std::string path = std::string("/") + key;
  const json& arr = detail::require_array(detail::require(doc, key, ""), rows, path);
  BitMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string pr = detail::child_path(path, r);
    const json& row = detail::require_array(arr[r], cols, pr);
    for (std::size_t c = 0; c < cols; ++c) out.set(r, c, detail::as_bit(row[c], detail::child_path(pr, c)));
  }
  return out;
}

}  // namespace

std::string write_solution(const Solution& s) {
  json doc = json::object();
  doc["manufacturing_open"] = bits_to_json(s.manufacturing_open);
  doc["cryo_open"] = bits_to_json(s.cryo_open);
  doc["manufacturing_assignment"] = bits_to_json(s.manufacturing_assignment);
  doc["cryo_assignment"] = bits_to_json(s.cryo_assignment);
  doc["cryopreserved"] = bits_to_json(s.cryopreserved);
  doc["mode_assignment"] = bits_to_json(s.mode_assignment);
  doc["mode_count"] = s.mode_count();
  return doc.dump() + "\n";
}

Solution read_solution(const std::string& text) {
  const json doc = detail::parse_document(text);
  if (!doc.is_object()) throw SchemaError("", "expected an object at document root");
  Solution s;
  s.manufacturing_open = read_bits(doc, "manufacturing_open");
  s.cryo_open = read_bits(doc, "cryo_open");
  s.cryopreserved = read_bits(doc, "cryopreserved");
  const std::size_t n_j = s.manufacturing_open.size();
  const std::size_t n_i = s.cryopreserved.size();
  if (s.cryo_open.size() != n_j) throw SchemaError("/cryo_open", "length differs from manufacturing_open");
  const std::size_t n_k = static_cast<std::size_t>(detail::as_int(detail::require(doc, "mode_count", ""), "/mode_count"));
  s.manufacturing_assignment = read_bit_matrix(doc, "manufacturing_assignment", n_i, n_j);
  s.cryo_assignment = read_bit_matrix(doc, "cryo_assignment", n_i, n_j);
  s.mode_assignment = read_bit_matrix(doc, "mode_assignment", n_j, n_k);
  return s;
}

}  // namespace atmp
