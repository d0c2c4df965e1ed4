// Problem data for the personalised-medicine supply-chain network design model.
//
// Units: all times are hours, all costs are in one abstract money unit.
// Node indexing for travel times follows the file format: orders first
// (0 .. |I|-1), then candidate locations (|I| .. |I|+|J|-1).

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace atmp {

inline constexpr double kDefaultCryoLegLimitHours = 24.0;
inline constexpr double kFeasibilityTolerance = 1e-9;
inline constexpr int kInstanceSchemaVersion = 1;

struct Order {
  int id = 0;
  double shelf_life_hours = 0.0;

  bool operator==(const Order&) const = default;
};

struct CandidateLocation {
  int id = 0;
  double setup_cost_manufacturing = 0.0;
  double setup_cost_cryo = 0.0;

  bool operator==(const CandidateLocation&) const = default;
};

// A manufacturing mode (e.g. manual, semi-automated, automated).
struct Mode {
  int id = 0;
  double production_time_fresh_hours = 0.0;
  double production_time_frozen_hours = 0.0;

  bool operator==(const Mode&) const = default;
};

// Dense, possibly asymmetric travel-time matrix over orders and locations.
class TravelMatrix {
 public:
  TravelMatrix() = default;
  explicit TravelMatrix(std::size_t node_count);
  TravelMatrix(std::size_t node_count, std::vector<double> row_major);

  std::size_t node_count() const { return node_count_; }
  double operator()(std::size_t from, std::size_t to) const {
    return entries_[from * node_count_ + to];
  }
  void set(std::size_t from, std::size_t to, double hours) {
    entries_[from * node_count_ + to] = hours;
  }
  double max_entry() const;
  const std::vector<double>& entries() const { return entries_; }

  bool operator==(const TravelMatrix&) const = default;

 private:
  std::size_t node_count_ = 0;
  std::vector<double> entries_;
};

// Raw, mutable problem data. Tensors are stored flat, row-major:
// op costs as [order][location][mode], failure rates as [order][mode].
struct InstanceData {
  std::vector<Order> orders;
  std::vector<CandidateLocation> locations;
  std::vector<Mode> modes;
  TravelMatrix travel;
  std::vector<double> op_cost_fresh;
  std::vector<double> op_cost_frozen;
  std::vector<double> failure_rate;
  std::optional<double> big_t_hours;
  double cryo_leg_limit_hours = kDefaultCryoLegLimitHours;

  bool operator==(const InstanceData&) const = default;
};

// Thrown when instance data cannot even be indexed (wrong tensor shapes).
class InstanceShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Immutable, shape-checked problem instance. Safe to share across threads.
class Instance {
 public:
  // Throws InstanceShapeError if any tensor is not fully populated.
  // A missing big_t_hours is resolved to (max travel + 1).
  explicit Instance(InstanceData data);

  std::size_t order_count() const { return data_.orders.size(); }
  std::size_t location_count() const { return data_.locations.size(); }
  std::size_t mode_count() const { return data_.modes.size(); }

  const Order& order(std::size_t i) const { return data_.orders[i]; }
  const CandidateLocation& location(std::size_t j) const { return data_.locations[j]; }
  const Mode& mode(std::size_t k) const { return data_.modes[k]; }
  const TravelMatrix& travel() const { return data_.travel; }

  // Order node i to location node j.
  double to_location(std::size_t i, std::size_t j) const {
    return data_.travel(i, order_count() + j);
  }
  // Location node j back to order node i.
  double to_order(std::size_t j, std::size_t i) const {
    return data_.travel(order_count() + j, i);
  }
  double between_locations(std::size_t from, std::size_t to) const {
    return data_.travel(order_count() + from, order_count() + to);
  }

  double op_cost_fresh(std::size_t i, std::size_t j, std::size_t k) const {
    return data_.op_cost_fresh[(i * location_count() + j) * mode_count() + k];
  }
  double op_cost_frozen(std::size_t i, std::size_t j, std::size_t k) const {
    return data_.op_cost_frozen[(i * location_count() + j) * mode_count() + k];
  }
  double failure_rate(std::size_t i, std::size_t k) const {
    return data_.failure_rate[i * mode_count() + k];
  }

  double big_t_hours() const { return *data_.big_t_hours; }
  double cryo_leg_limit_hours() const { return data_.cryo_leg_limit_hours; }

  const InstanceData& data() const { return data_; }

  bool operator==(const Instance& other) const { return data_ == other.data_; }

 private:
  InstanceData data_;
};

// One failed instance invariant. `index` locates the offending entry.
struct Violation {
  std::string field;
  std::vector<std::size_t> index;
  std::string message;

  std::string to_string() const;
};

std::vector<Violation> validate(const InstanceData& data);
std::vector<Violation> validate(const Instance& instance);

// ---------------------------------------------------------------------------
// Generation

enum class Geometry { unit_square, matrix_supplied };

struct GenerateParams {
  std::size_t orders = 1;
  std::size_t locations = 1;
  std::size_t modes = 1;
  std::uint64_t seed = 0;
  Geometry geometry = Geometry::unit_square;
  // Required when geometry == matrix_supplied; |I|+|J| nodes.
  std::optional<TravelMatrix> travel;
  // Hours of travel per unit of Euclidean distance in the unit square.
  double hours_per_unit = 48.0;
};

// Deterministic for a fixed seed. Throws std::invalid_argument on zero counts
// or a supplied matrix of the wrong size.
Instance generate(const GenerateParams& params);

// ---------------------------------------------------------------------------
// Serialization

// Thrown for documents that do not follow the instance/solution schema.
// `path` is a JSON-pointer-like location such as "/orders/2/shelf_life_hours".
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& what);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Thrown by read_instance when the document parses but violates invariants.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Parses a document into raw data without checking value invariants.
InstanceData parse_instance(const std::string& text);

// parse_instance + validate; throws SchemaError or ValidationError.
Instance read_instance(const std::string& text);

// Canonical form: keys sorted, numbers rendered shortest-round-trip,
// big_t_hours always written.
std::string write_instance(const Instance& instance);

}  // namespace atmp
