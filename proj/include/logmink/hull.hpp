#pragma once

#include "logmink/vec.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace logmink {

/// Convex hull of the xy-coordinates of `points` by Andrew's monotone chain.
/// Returns indices of the hull vertices in counter-clockwise order with
/// collinear and duplicate points removed. `tol` is an absolute distance.
std::vector<std::size_t> hull_2d(std::span<const Vec> points, double tol);

struct HullFacet {
  Vec normal;                         ///< outward unit normal
  double offset = 0.0;                ///< normal . x on the facet plane
  std::vector<std::size_t> vertices;  ///< counter-clockwise seen from outside
};

struct Hull3 {
  std::vector<HullFacet> facets;
  std::vector<std::size_t> vertices;  ///< sorted, unique
};

/// 3D convex hull by gift wrapping over whole (merged) facets: coplanar
/// points within `rel_tol * scale` of a facet plane belong to that facet, and
/// each facet polygon is the planar hull of its points. Indices refer to
/// `points`. Throws DegenerateShape when the points are (nearly) coplanar.
Hull3 hull_3d(std::span<const Vec> points, double rel_tol = 1e-9);

}  // namespace logmink
