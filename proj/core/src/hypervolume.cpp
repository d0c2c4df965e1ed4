#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "atmp/pareto.hpp"

namespace atmp {

namespace {

struct Point3 {
  double x, y, z;  // all minimized
};

// Area dominated by 2-D points (minimization) below (rx, ry).
double area_2d(std::vector<std::pair<double, double>> pts, double rx, double ry) {
  std::sort(pts.begin(), pts.end());
  double area = 0.0;
  double low = ry;
  for (std::size_t n = 0; n < pts.size(); ++n) {
    low = std::min(low, pts[n].second);
    const double next_x = n + 1 < pts.size() ? pts[n + 1].first : rx;
    area += (next_x - pts[n].first) * (ry - low);
  }
  return area;
}

}  // namespace

double hypervolume(const std::vector<ObjectiveVector>& points, const HypervolumeReference& ref) {
  if (!std::isfinite(ref.waiting_time_hours) || !std::isfinite(ref.cost) || !std::isfinite(ref.coverage)) {
    throw std::invalid_argument("hypervolume reference must be finite");
  }
  std::vector<Point3> pts;
  for (const auto& p : points) {
    if (!std::isfinite(p.waiting_time_hours) || !std::isfinite(p.cost)) {
      throw std::invalid_argument("hypervolume point must be finite");
    }
    if (p.waiting_time_hours > ref.waiting_time_hours || p.cost > ref.cost || p.coverage < ref.coverage) {
      throw std::invalid_argument("hypervolume reference is not dominated by point " + to_string(p));
    }
    pts.push_back({p.waiting_time_hours, p.cost, -static_cast<double>(p.coverage)});
  }
  const double rz = -ref.coverage;
  std::sort(pts.begin(), pts.end(), [](const Point3& a, const Point3& b) { return a.z < b.z; });

  double volume = 0.0;
  std::vector<std::pair<double, double>> active;
  for (std::size_t n = 0; n < pts.size();) {
    const double z = pts[n].z;
    while (n < pts.size() && pts[n].z == z) {
      active.emplace_back(pts[n].x, pts[n].y);
      ++n;
    }
    const double next_z = n < pts.size() ? pts[n].z : rz;
    volume += area_2d(active, ref.waiting_time_hours, ref.cost) * (next_z - z);
  }
  return volume;
}

HypervolumeReference common_reference(const std::vector<ObjectiveVector>& a, const std::vector<ObjectiveVector>& b) {
  double w = 0.0, c = 0.0;
  for (const auto* set : {&a, &b}) {
    for (const auto& p : *set) {
      w = std::max(w, p.waiting_time_hours);
      c = std::max(c, p.cost);
    }
  }
  return {w + std::max(1.0, 0.1 * w), c + std::max(1.0, 0.1 * c), -1.0};
}

}  // namespace atmp
