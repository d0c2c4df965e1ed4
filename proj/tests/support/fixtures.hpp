// Shared helpers for unit, property and acceptance tests.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "atmp/instance.hpp"
#include "atmp/scalarization.hpp"
#include "atmp/solution.hpp"

namespace atmp::testing {

// All-zero data for |I| orders, |J| locations, |K| modes: zero travel, costs
// and rates, shelf-life 100 h, big_t left to be derived.
InstanceData blank_data(std::size_t orders, std::size_t locations, std::size_t modes, double shelf_life = 100.0);

// Travel helpers using order/location indices rather than node indices.
void set_to_location(InstanceData& d, std::size_t order, std::size_t location, double hours);
void set_to_order(InstanceData& d, std::size_t location, std::size_t order, double hours);
void set_between(InstanceData& d, std::size_t from, std::size_t to, double hours);
void set_op_cost(InstanceData& d, std::size_t i, std::size_t j, std::size_t k, double fresh, double frozen);
void set_failure_rate(InstanceData& d, std::size_t i, std::size_t k, double r);

struct TinyCase {
  std::uint64_t seed;
  Instance instance;
};

// Generated instances with |I| <= max_orders, |J| <= 3, |K| <= 2; sizes cycle
// with the index so every shape occurs.
std::vector<TinyCase> tiny_suite(std::size_t count, std::size_t max_orders = 4, std::uint64_t first_seed = 1000);

// A random solution passing check_feasible (errors only); cryo-gap orders
// occur only when allow_gap is set.
Solution random_feasible_solution(const Instance& instance, std::mt19937_64& rng, bool allow_gap = false);

// Scalarizations exercised by solver comparisons, sized for generated
// instances (setup costs in the hundreds to thousands).
std::vector<Scalarization> reference_scalarizations(std::size_t orders);

// Lexicographic key minimum over explicitly listed objective vectors that
// satisfy the bounds; written without the library's tie tolerance.
struct BruteOptimum {
  bool feasible = false;
  ScalarKey key;
};
BruteOptimum brute_optimum(const Scalarization& s, const std::vector<ObjectiveVector>& feasible_objectives);

bool keys_equal(const ScalarKey& a, const ScalarKey& b, double tolerance);

// Objective-vector multisets compared as sorted sets within a tolerance.
bool same_objective_sets(std::vector<ObjectiveVector> a, std::vector<ObjectiveVector> b, double tolerance);

std::string describe(const std::vector<ObjectiveVector>& points);

// Hand-worked examples. Fresh: one site, d(i,j)=2, pf=10, d(j,i)=3, failure
// rate r. Frozen: manufacturing at 0, cryo at 1, d(i,1)=1, d(1,0)=2, pz=5,
// d(0,i)=3, setups 100 and 40, frozen operating cost 20, failure rate r.
Instance hand_fresh_case(double r);
Solution hand_fresh_solution(const Instance& instance);
Instance hand_frozen_case(double r);
Solution hand_frozen_solution(const Instance& instance);

// Subset enumeration for the classical models. Subsets are visited by size,
// then lexicographically; the first best one wins.
struct BruteBaseline {
  bool found = false;
  std::vector<std::size_t> open;
  double value = 0.0;
};
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t size);
double nearest_open(const Instance& instance, std::size_t order, const std::vector<std::size_t>& open);
std::size_t open_within(const Instance& instance, std::size_t order, const std::vector<std::size_t>& open, double radius);
// Smallest set giving one site within `primary` (and two within `backup` when
// `two` is set) to every order.
BruteBaseline brute_cover(const Instance& instance, double primary, double backup, bool two);
enum class BruteModel { median, center, max_cover };
// median/center use exactly p sites; max_cover tries 1..p and maximizes.
BruteBaseline brute_p(const Instance& instance, std::size_t p, const std::vector<double>& weights, BruteModel model,
                      double radius);

}  // namespace atmp::testing
