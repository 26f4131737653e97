#include "logmink/cylinder.hpp"

#include "logmink/direction.hpp"

#include <algorithm>
#include <cmath>

namespace logmink {

namespace {

Vec sort_key(const EmbeddedBody& f) {
  const Subspace& s = f.space;
  if (s.dim() == 1) return canonical(s.basis()[0]);
  return canonical(s.basis()[0].cross(s.basis()[1]).normalized());
}

bool factor_less(const EmbeddedBody& a, const EmbeddedBody& b) {
  if (a.space.dim() != b.space.dim()) return a.space.dim() < b.space.dim();
  const Vec ka = sort_key(a), kb = sort_key(b);
  for (int i = 0; i < kMaxDim; ++i) {
    if (std::abs(ka[i] - kb[i]) > kDirectionTol) return ka[i] < kb[i];
  }
  return false;
}

/// Parallelogram test: two segments along the edge directions.
std::optional<std::vector<std::pair<Vec, double>>> split_polygon(const ConvexBody& k) {
  if (k.facets().size() != 4) return std::nullopt;
  std::vector<std::pair<Vec, double>> out;
  const Vec& n0 = k.facets()[0].normal;
  for (const Facet& f : k.facets()) {
    if (!out.empty() && same_direction(f.normal, -n0, 1e-8)) continue;
    const Vec e = k.vertices()[f.vertices[1]] - k.vertices()[f.vertices[0]];
    out.push_back({e.normalized(), 0.5 * e.norm()});
    if (out.size() == 2) break;
  }
  return out;
}

std::optional<CylinderSplit> split_planar(const ConvexBody& k) {
  const auto segs = split_polygon(k);
  if (!segs) return std::nullopt;
  CylinderSplit out;
  for (const auto& [d, half] : *segs) out.factors.push_back({Subspace::line(2, d), make_segment(half)});
  return out;
}

std::vector<Vec> edge_directions(const ConvexBody& k) {
  DirectionIndex index(1e-10);
  const double shortest = 1e-9 * k.circumradius();
  for (const Facet& f : k.facets()) {
    const std::size_t m = f.vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Vec e = k.vertices()[f.vertices[(i + 1) % m]] - k.vertices()[f.vertices[i]];
      if (e.norm() <= shortest) continue;
      index.insert(canonical(e.normalized()));
    }
  }
  return index.directions();
}

std::optional<CylinderSplit> split_along(const ConvexBody& k, const Vec& d, double tol) {
  std::optional<Vec> cap;
  for (const Facet& f : k.facets()) {
    if (std::abs(f.normal.dot(d)) <= tol) continue;
    const Vec c = canonical(f.normal);
    if (!cap) {
      cap = c;
    } else if (!same_direction(*cap, c, tol)) {
      return std::nullopt;
    }
  }
  if (!cap) return std::nullopt;
  const Vec n = *cap;
  const double nd = n.dot(d);
  const auto [a, b] = plane_basis(n);
  const Subspace plane(3, {a, b});
  std::vector<Vec> section;
  section.reserve(k.vertices().size());
  for (const Vec& x : k.vertices()) section.push_back(plane.to_local(x - (n.dot(x) / nd) * d));
  const ConvexBody base = ConvexBody::from_points(2, std::move(section));

  CylinderSplit out;
  out.factors.push_back({Subspace::line(3, d), make_segment(k.support(n) / std::abs(nd))});
  if (const auto segs = split_polygon(base)) {
    for (const auto& [e, half] : *segs) {
      out.factors.push_back({Subspace::line(3, plane.embed(e)), make_segment(half)});
    }
  } else {
    out.factors.push_back({plane, base});
  }
  return out;
}

}  // namespace

ConvexBody CylinderSplit::reconstruct() const {
  std::vector<PointSet> parts;
  parts.reserve(factors.size());
  for (const EmbeddedBody& f : factors) parts.push_back(f.embedded());
  return minkowski_sum(parts);
}

std::optional<CylinderSplit> detect_cylinder(const ConvexBody& k, double tol) {
  std::optional<CylinderSplit> best;
  if (k.dim() == 2) {
    best = split_planar(k);
  } else if (k.dim() == 3) {
    for (const Vec& d : edge_directions(k)) {
      auto s = split_along(k, d, tol);
      if (s && (!best || s->factors.size() > best->factors.size())) best = std::move(s);
      if (best && best->factors.size() == 3) break;
    }
  }
  if (best) std::sort(best->factors.begin(), best->factors.end(), factor_less);
  return best;
}

}  // namespace logmink
