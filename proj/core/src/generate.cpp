#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "atmp/instance.hpp"

namespace atmp {

namespace {

// Portable uniform draws; std::uniform_real_distribution is not
// bit-reproducible across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

double round_to(double v, double quantum) { return std::round(v / quantum) * quantum; }
double cents(double v) { return round_to(v, 0.01); }

}  // namespace

Instance generate(const GenerateParams& params) {
  if (params.orders == 0 || params.locations == 0 || params.modes == 0) {
    throw std::invalid_argument("generate: order, location and mode counts must be >= 1");
  }
  const std::size_t n_i = params.orders;
  const std::size_t n_j = params.locations;
  const std::size_t n_k = params.modes;
  const std::size_t nodes = n_i + n_j;
  Rng rng(params.seed);

  InstanceData d;
  if (params.geometry == Geometry::matrix_supplied) {
    if (!params.travel || params.travel->node_count() != nodes) {
      throw std::invalid_argument("generate: matrix-supplied geometry needs a travel matrix over " +
                                  std::to_string(nodes) + " nodes");
    }
    d.travel = *params.travel;
  } else {
    std::vector<double> x(nodes), y(nodes);
    for (std::size_t a = 0; a < nodes; ++a) {
      x[a] = rng.unit();
      y[a] = rng.unit();
    }
    d.travel = TravelMatrix(nodes);
    for (std::size_t a = 0; a < nodes; ++a) {
      for (std::size_t b = a + 1; b < nodes; ++b) {
        const double hours = cents(std::hypot(x[a] - x[b], y[a] - y[b]) * params.hours_per_unit);
        d.travel.set(a, b, hours);
        d.travel.set(b, a, hours);
      }
    }
  }

  for (std::size_t j = 0; j < n_j; ++j) {
    d.locations.push_back({static_cast<int>(j), cents(rng.uniform(500.0, 2500.0)), cents(rng.uniform(100.0, 600.0))});
  }
  for (std::size_t k = 0; k < n_k; ++k) {
    const double fresh = cents(rng.uniform(48.0, 240.0));
    d.modes.push_back({static_cast<int>(k), fresh, cents(fresh + rng.uniform(6.0, 48.0))});
  }

  // Shelf-lives: order 0 can always go fresh to its best location, order 1
  // cannot go fresh anywhere (it must be cryopreserved to be covered), the
  // rest are a coin flip between the two regimes.
  for (std::size_t i = 0; i < n_i; ++i) {
    double reach = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n_j; ++j) {
      reach = std::min(reach, std::max(d.travel(i, n_i + j), d.travel(n_i + j, i)));
    }
    const bool fresh_feasible = i == 0 ? true : i == 1 ? false : rng.coin();
    const double jitter = rng.unit();
    double shelf_life = 0.0;
    if (!fresh_feasible) shelf_life = std::floor(reach * (0.3 + 0.6 * jitter) * 100.0) / 100.0;
    if (shelf_life <= 0.0) shelf_life = std::max(0.5, cents(reach + 24.0 * jitter));
    d.orders.push_back({static_cast<int>(i), shelf_life});
  }

  d.op_cost_fresh.resize(n_i * n_j * n_k);
  d.op_cost_frozen.resize(n_i * n_j * n_k);
  for (std::size_t idx = 0; idx < n_i * n_j * n_k; ++idx) {
    const double fresh = cents(rng.uniform(50.0, 250.0));
    d.op_cost_fresh[idx] = fresh;
    d.op_cost_frozen[idx] = cents(fresh * rng.uniform(1.0, 1.4));
  }
  d.failure_rate.resize(n_i * n_k);
  for (double& r : d.failure_rate) r = round_to(rng.uniform(0.0, 0.3), 0.001);

  d.big_t_hours = d.travel.max_entry() + 1.0;
  d.cryo_leg_limit_hours = kDefaultCryoLegLimitHours;
  return Instance(std::move(d));
}

}  // namespace atmp
