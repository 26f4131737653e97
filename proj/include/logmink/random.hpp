#pragma once

// Seedable generators whose output does not depend on the standard library's
// distribution implementations, so seeded runs reproduce across platforms.

#include "logmink/geometry.hpp"

#include <cstdint>
#include <random>

namespace logmink {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal via Box-Muller.
  double normal();
  /// Uniform point on the unit sphere S^{dim-1}.
  Vec sphere_point(int dim);

 private:
  std::mt19937_64 engine_;
};

/// Symmetrized convex hull of `points` uniform points on the unit sphere.
ConvexBody random_symmetric_polytope(Rng& rng, int dim, int points = 20);

/// Wulff shape of `normals` random antipodal pairs of directions with
/// support values in [0.7, 1.3]. Generic draws are simple polytopes.
ConvexBody random_symmetric_wulff(Rng& rng, int dim, int normals = 12);

/// Random map with |det| in [min_det, max_det] and condition number <= 50.
LinearMap random_linear_map(Rng& rng, int dim, double min_det = 0.1, double max_det = 10.0);

/// Random rotation (det = +1).
LinearMap random_rotation(Rng& rng, int dim);

/// rotation * (base + half_height [-e3, e3]) for a random polygon `base`.
struct CylinderSample {
  ConvexBody body;
  ConvexBody base;
  double half_height;
  LinearMap rotation;

  /// The same construction with the base scaled by `c_base` and the height
  /// by `c_height`: a relative cylinder of `body`.
  ConvexBody relative(double c_base, double c_height) const;
};

CylinderSample random_cylinder(Rng& rng, int base_points = 10);

}  // namespace logmink
