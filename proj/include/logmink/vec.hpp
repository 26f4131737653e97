#pragma once

#include <Eigen/Dense>

#include <vector>

namespace logmink {

// Points and directions live in R^3; bodies of dimension n < 3 keep the
// trailing coordinates at zero.
using Vec = Eigen::Vector3d;
using Mat = Eigen::Matrix3d;

constexpr int kMaxDim = 3;

inline Vec make_vec(double x, double y = 0.0, double z = 0.0) {
  return Vec(x, y, z);
}

/// Largest Euclidean norm over a point set (0 for an empty set).
inline double max_norm(const std::vector<Vec>& points) {
  double r = 0.0;
  for (const Vec& p : points) r = std::max(r, p.norm());
  return r;
}

}  // namespace logmink
