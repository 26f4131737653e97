#pragma once

#include "logmink/geometry.hpp"

#include <optional>
#include <vector>

namespace logmink {

/// K = K_1 + ... + K_m with K_i full dimensional in the subspace xi_i and the
/// xi_i forming a direct sum of R^n (not necessarily orthogonal).
struct CylinderSplit {
  std::vector<EmbeddedBody> factors;

  ConvexBody reconstruct() const;
};

/// Finest split of K, or nullopt when K is not a cylinder.
///
/// In R^3 a generator d is accepted when every facet normal except one
/// antipodal pair +-n satisfies |u.d| <= tol; then K = B + s[-d,d] where B is
/// the section of K by the plane n^perp and s = h_K(n) / |n.d|. Candidates for
/// d are the edge directions of K. A planar body splits iff it is a
/// parallelogram. Factors are sorted by dimension, then lexicographically by
/// the canonical direction (lines) or canonical normal (planes).
std::optional<CylinderSplit> detect_cylinder(const ConvexBody& k, double tol = 1e-8);

}  // namespace logmink
