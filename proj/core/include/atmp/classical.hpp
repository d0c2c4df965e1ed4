// Classical location models on the instance geometry: set covering (LSCP),
// maximal covering (MCLP), p-median, p-center and backup covering. Travel
// times are order -> candidate location.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "atmp/instance.hpp"

namespace atmp {

struct CoverSpec {
  double coverage_radius_hours = 0.0;
  std::size_t p = 1;
  std::vector<double> demand_weights;  // [order]; empty means all 1
};

struct BackupCoverSpec {
  double primary_radius_hours = 0.0;
  double backup_radius_hours = 0.0;
};

// Some orders cannot be covered as required; ids are listed.
class UncoverableOrders : public std::invalid_argument {
 public:
  UncoverableOrders(const std::string& model, std::vector<std::size_t> orders);
  const std::vector<std::size_t>& orders() const { return orders_; }

 private:
  std::vector<std::size_t> orders_;
};

// Ties between optimal location sets go to the lexicographically smallest
// ascending index list.
struct BaselineResult {
  std::vector<std::size_t> open;  // ascending location indices
  double value = 0.0;             // count, covered weight, total or max weighted travel
};

// Throws std::invalid_argument for a negative radius, p outside [1, |J|] or
// a weight vector of the wrong size or with negative entries. `needs_p`
// selects whether p is checked.
void check_cover_spec(const Instance& instance, const CoverSpec& spec, bool needs_p);

// Minimum number of locations covering every order within the radius.
BaselineResult lscp(const Instance& instance, const CoverSpec& spec);
// At most p locations maximizing the covered demand weight; ties go to
// fewer locations.
BaselineResult mclp(const Instance& instance, const CoverSpec& spec);
// Exactly p locations minimizing sum_i w_i * min_{j open} d[i,j].
BaselineResult p_median(const Instance& instance, const CoverSpec& spec);
// Exactly p locations minimizing max_i min_{j open} d[i,j]; weights unused.
BaselineResult p_center(const Instance& instance, const CoverSpec& spec);
// Minimum number of locations such that every order has one within the
// primary radius and two within the backup radius.
BaselineResult backup_lscp(const Instance& instance, const BackupCoverSpec& spec);

}  // namespace atmp
