#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace atmp {

class Instance;

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool operator()(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool value) { bits_[r * cols_ + c] = value ? 1 : 0; }
  std::size_t row_sum(std::size_t r) const;
  // Index of the first set column in row r, or cols() if none.
  std::size_t first_in_row(std::size_t r) const;

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

// Complete assignment of every binary decision of the network model.
struct Solution {
  std::vector<std::uint8_t> manufacturing_open;  // [location]
  std::vector<std::uint8_t> cryo_open;           // [location]
  BitMatrix manufacturing_assignment;            // [order][location]
  BitMatrix cryo_assignment;                     // [order][location]
  std::vector<std::uint8_t> cryopreserved;       // [order]
  BitMatrix mode_assignment;                     // [location][mode]

  // All-closed network, nothing covered.
  static Solution empty(std::size_t orders, std::size_t locations, std::size_t modes);
  static Solution empty(const Instance& instance);

  std::size_t order_count() const { return cryopreserved.size(); }
  std::size_t location_count() const { return manufacturing_open.size(); }
  std::size_t mode_count() const { return mode_assignment.cols(); }

  // True when every array is shaped for the given instance.
  bool shaped_for(const Instance& instance) const;

  bool operator==(const Solution&) const = default;
};

// The (W, C, V) triple: total waiting time, total cost, patients covered.
struct ObjectiveVector {
  double waiting_time_hours = 0.0;
  double cost = 0.0;
  int coverage = 0;

  bool operator==(const ObjectiveVector&) const = default;
};

// a dominates b iff it is no worse on all of (min W, min C, max V) and
// strictly better on at least one.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

// Componentwise equality within an absolute tolerance on W and C.
bool approx_equal(const ObjectiveVector& a, const ObjectiveVector& b, double tolerance);

std::string to_string(const ObjectiveVector& objective);

// Solution documents use the same index conventions as instance documents.
// read_solution throws SchemaError.
std::string write_solution(const Solution& solution);
Solution read_solution(const std::string& text);

}  // namespace atmp
