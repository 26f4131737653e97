#include "logmink/geometry.hpp"

#include "logmink/direction.hpp"
#include "logmink/error.hpp"
#include "logmink/hull.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <numbers>
#include <string>

namespace logmink {
namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw GeometryError(ErrorCode::kInvalidInput, "dimension must be 1, 2 or 3");
  }
}

void check_padding(int dim, const Vec& x) {
  for (int i = dim; i < kMaxDim; ++i) {
    if (std::abs(x[i]) > 1e-12 * std::max(1.0, x.norm())) {
      throw GeometryError(ErrorCode::kInvalidInput,
                          "coordinate beyond the body dimension is nonzero");
    }
  }
}

// Area of a planar polygon given in cyclic order, measured along `normal`.
double polygon_area(const std::vector<Vec>& pts, const std::vector<std::size_t>& ring,
                    const Vec& normal) {
  Vec acc = Vec::Zero();
  for (std::size_t k = 0; k < ring.size(); ++k) {
    acc += pts[ring[k]].cross(pts[ring[(k + 1) % ring.size()]]);
  }
  return 0.5 * std::abs(acc.dot(normal));
}

double segment_distance(const Vec& p, const Vec& a, const Vec& b) {
  const Vec d = b - a;
  const double len2 = d.squaredNorm();
  double t = len2 > 0.0 ? (p - a).dot(d) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return (p - (a + t * d)).norm();
}

ConvexBody segment_body(double a) {
  std::vector<Vec> v{make_vec(a), make_vec(-a)};
  std::vector<Facet> f{{make_vec(1.0), a, 1.0, {0}}, {make_vec(-1.0), a, 1.0, {1}}};
  return ConvexBody(1, std::move(v), std::move(f));
}

}  // namespace

// ---------------------------------------------------------------- ConvexBody

ConvexBody ConvexBody::from_points(int dim, std::vector<Vec> points) {
  check_dim(dim);
  if (points.empty()) throw GeometryError(ErrorCode::kDegenerateShape, "empty point set");
  for (const Vec& p : points) check_padding(dim, p);
  const double scale = max_norm(points);
  if (!(scale > 0.0)) throw GeometryError(ErrorCode::kDegenerateShape, "point set is {o}");

  if (dim == 1) {
    double a = 0.0;
    for (const Vec& p : points) a = std::max(a, std::abs(p.x()));
    return segment_body(a);
  }

  std::vector<Vec> verts;
  std::vector<Facet> facets;
  if (dim == 2) {
    const std::vector<std::size_t> ring = hull_2d(points, kBodyTol * scale);
    if (ring.size() < 3) throw GeometryError(ErrorCode::kDegenerateShape, "polygon is flat");
    for (std::size_t i : ring) verts.push_back(points[i]);
    const std::size_t m = verts.size();
    for (std::size_t k = 0; k < m; ++k) {
      const Vec d = verts[(k + 1) % m] - verts[k];
      Facet f;
      f.normal = make_vec(d.y(), -d.x()).normalized();
      f.area = d.norm();
      f.vertices = {k, (k + 1) % m};
      facets.push_back(std::move(f));
    }
  } else {
    const Hull3 hull = hull_3d(points, kBodyTol);
    std::vector<std::size_t> remap(points.size(), 0);
    for (std::size_t k = 0; k < hull.vertices.size(); ++k) {
      remap[hull.vertices[k]] = k;
      verts.push_back(points[hull.vertices[k]]);
    }
    for (const HullFacet& hf : hull.facets) {
      Facet f;
      f.normal = hf.normal;
      for (std::size_t i : hf.vertices) f.vertices.push_back(remap[i]);
      f.area = polygon_area(verts, f.vertices, f.normal);
      facets.push_back(std::move(f));
    }
  }
  for (Facet& f : facets) {
    double h = -std::numeric_limits<double>::infinity();
    for (const Vec& v : verts) h = std::max(h, f.normal.dot(v));
    f.support = h;
  }
  return ConvexBody(dim, std::move(verts), std::move(facets));
}

ConvexBody::ConvexBody(int dim, std::vector<Vec> vertices, std::vector<Facet> facets)
    : dim_(dim), vertices_(std::move(vertices)), facets_(std::move(facets)) {
  check_dim(dim_);
  const double scale = circumradius();
  const double tol = kBodyTol * std::max(scale, 1e-300);
  for (const Vec& v : vertices_) {
    check_padding(dim_, v);
    const bool mirrored = std::any_of(vertices_.begin(), vertices_.end(),
                                      [&](const Vec& w) { return (v + w).norm() <= tol; });
    if (!mirrored) {
      throw GeometryError(ErrorCode::kAsymmetricInput, "vertex set is not origin symmetric");
    }
  }
  for (const Facet& f : facets_) {
    double h = -std::numeric_limits<double>::infinity();
    for (const Vec& v : vertices_) h = std::max(h, f.normal.dot(v));
    if (std::abs(h - f.support) > tol) {
      throw GeometryError(ErrorCode::kInvalidInput, "facet support disagrees with vertices");
    }
  }

  double vol = 0.0;
  if (dim_ == 1) {
    double lo = 0.0, hi = 0.0;
    for (const Vec& v : vertices_) {
      lo = std::min(lo, v.x());
      hi = std::max(hi, v.x());
    }
    vol = hi - lo;
  } else if (dim_ == 2) {
    for (const Facet& f : facets_) {
      const Vec& a = vertices_[f.vertices[0]];
      const Vec& b = vertices_[f.vertices[1]];
      vol += 0.5 * std::abs(a.x() * b.y() - a.y() * b.x());
    }
  } else {
    for (const Facet& f : facets_) {
      const Vec& a = vertices_[f.vertices[0]];
      for (std::size_t k = 1; k + 1 < f.vertices.size(); ++k) {
        vol += std::abs(a.dot(vertices_[f.vertices[k]].cross(vertices_[f.vertices[k + 1]]))) / 6.0;
      }
    }
  }
  if (!(vol > 1e-12)) {
    throw GeometryError(ErrorCode::kDegenerateShape, "body volume below 1e-12");
  }
  volume_ = vol;
}

double ConvexBody::surface_area() const {
  double s = 0.0;
  for (const Facet& f : facets_) s += f.area;
  return s;
}

double ConvexBody::support(const Vec& x) const {
  double h = -std::numeric_limits<double>::infinity();
  for (const Vec& v : vertices_) h = std::max(h, x.dot(v));
  return h;
}

ConvexBody ConvexBody::scaled(double c) const {
  if (!(c > 0.0)) throw GeometryError(ErrorCode::kInvalidInput, "scale factor must be positive");
  std::vector<Vec> v = vertices_;
  for (Vec& p : v) p *= c;
  std::vector<Facet> f = facets_;
  const double area_scale = std::pow(c, dim_ - 1);
  for (Facet& g : f) {
    g.support *= c;
    if (dim_ > 1) g.area *= area_scale;
  }
  return ConvexBody(dim_, std::move(v), std::move(f));
}

// ------------------------------------------------------------ SupportSamples

SupportSamples::SupportSamples(int dim, const std::vector<Vec>& directions,
                               const std::vector<double>& values)
    : dim_(dim) {
  check_dim(dim);
  if (directions.size() != values.size()) {
    throw GeometryError(ErrorCode::kInvalidInput, "directions and values differ in length");
  }
  DirectionIndex index;
  for (std::size_t i = 0; i < directions.size(); ++i) {
    check_padding(dim, directions[i]);
    const double len = directions[i].norm();
    const Vec u = unit(directions[i]);
    const double v = values[i] / len;
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw GeometryError(ErrorCode::kInvalidInput, "support values must be positive");
    }
    const std::size_t k = index.insert(u);
    if (k == values_.size()) {
      dirs_.push_back(u);
      values_.push_back(v);
    } else {
      values_[k] = std::min(values_[k], v);
    }
  }
  const std::size_t given = dirs_.size();
  for (std::size_t i = 0; i < given; ++i) {
    const Vec neg = -dirs_[i];
    if (auto j = index.find(neg)) {
      if (std::abs(values_[*j] - values_[i]) > kBodyTol * std::max(values_[i], values_[*j])) {
        throw GeometryError(ErrorCode::kAsymmetricInput,
                            "antipodal samples carry different values");
      }
    } else {
      index.insert(neg);
      dirs_.push_back(neg);
      values_.push_back(values_[i]);
    }
  }
  Eigen::MatrixXd m(dim, static_cast<Eigen::Index>(dirs_.size()));
  for (std::size_t i = 0; i < dirs_.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = dirs_[i].head(dim);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-9);
  if (dirs_.empty() || lu.rank() < dim) {
    throw GeometryError(ErrorCode::kUnboundedShape, "directions do not positively span R^n");
  }
}

SupportSamples SupportSamples::of_body(const ConvexBody& body, const std::vector<Vec>& directions) {
  std::vector<double> values;
  values.reserve(directions.size());
  for (const Vec& u : directions) values.push_back(body.support(unit(u)));
  return SupportSamples(body.dim(), directions, values);
}

// ----------------------------------------------------------------- LinearMap

LinearMap::LinearMap(int dim, const Mat& m) : dim_(dim), m_(Mat::Identity()) {
  check_dim(dim);
  m_.topLeftCorner(dim, dim) = m.topLeftCorner(dim, dim);
  det_ = m_.determinant();
  if (!(std::abs(det_) > 1e-12) || !m_.allFinite()) {
    throw GeometryError(ErrorCode::kSingularMap, "linear map is singular");
  }
}

LinearMap LinearMap::diagonal(const std::vector<double>& d) {
  Mat m = Mat::Identity();
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return LinearMap(static_cast<int>(d.size()), m);
}

LinearMap LinearMap::rotation2d(double angle) {
  Mat m = Mat::Identity();
  m(0, 0) = std::cos(angle);
  m(0, 1) = -std::sin(angle);
  m(1, 0) = std::sin(angle);
  m(1, 1) = std::cos(angle);
  return LinearMap(2, m);
}

// ------------------------------------------------------------------ Subspace

Subspace::Subspace(int ambient_dim, const std::vector<Vec>& vectors, bool allow_full)
    : ambient_(ambient_dim) {
  check_dim(ambient_dim);
  std::vector<Vec> ortho;
  for (const Vec& v : vectors) {
    Vec w = v;
    for (const Vec& b : ortho) w -= w.dot(b) * b;
    if (w.norm() > 1e-9 * std::max(1.0, v.norm())) ortho.push_back(w.normalized());
  }
  const int k = static_cast<int>(ortho.size());
  if (k == 0) throw GeometryError(ErrorCode::kInvalidInput, "subspace spanned by zero vectors");
  if (k == ambient_dim && !allow_full) {
    throw GeometryError(ErrorCode::kInvalidInput, "subspace must be proper");
  }
  if (k == 1) {
    basis_ = {canonical(ortho[0])};
  } else if (k == 2 && ambient_dim == 3) {
    auto [a, b] = plane_basis(ortho[0].cross(ortho[1]).normalized());
    basis_ = {a, b};
  } else {
    for (int i = 0; i < k; ++i) basis_.push_back(Vec::Unit(i));
  }
}

Vec Subspace::to_local(const Vec& x) const {
  Vec out = Vec::Zero();
  for (std::size_t j = 0; j < basis_.size(); ++j) out[static_cast<int>(j)] = x.dot(basis_[j]);
  return out;
}

Vec Subspace::embed(const Vec& local) const {
  Vec out = Vec::Zero();
  for (std::size_t j = 0; j < basis_.size(); ++j) out += local[static_cast<int>(j)] * basis_[j];
  return out;
}

bool Subspace::contains(const Vec& x, double tol) const {
  return (x - project(x)).norm() <= tol * std::max(1.0, x.norm());
}

Subspace Subspace::orthogonal_complement() const {
  if (ambient_ == 2) return Subspace(2, {make_vec(-basis_[0].y(), basis_[0].x())});
  if (dim() == 1) {
    auto [a, b] = plane_basis(basis_[0]);
    return Subspace(3, {a, b});
  }
  return Subspace(3, {basis_[0].cross(basis_[1])});
}

bool Subspace::same_as(const Subspace& other, double tol) const {
  if (other.ambient_ != ambient_ || other.dim() != dim()) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Vec& b) { return contains(b, tol); });
}

// ---------------------------------------------------------------- operations

PointSet EmbeddedBody::embedded() const {
  PointSet out{space.ambient_dim(), {}};
  out.points.reserve(body.vertices().size());
  for (const Vec& v : body.vertices()) out.points.push_back(space.embed(v));
  return out;
}

double support_eval(const ConvexBody& body, const Vec& x) { return body.support(x); }

ConvexBody apply_linear_map(const ConvexBody& body, const LinearMap& t) {
  if (t.dim() != body.dim()) {
    throw GeometryError(ErrorCode::kDimensionMismatch, "map and body dimensions differ");
  }
  std::vector<Vec> v;
  v.reserve(body.vertices().size());
  for (const Vec& p : body.vertices()) v.push_back(t.apply(p));
  return ConvexBody::from_points(body.dim(), std::move(v));
}

namespace {

// Vertices cut out by nearly coplanar dual points are ill conditioned along
// one direction, and tolerance decisions in the dual hull can split such a
// vertex on one side only. The Wulff shape of an even function is symmetric:
// average each vertex with its antipodal partner, snap leftovers onto the
// mirror of their nearest antipode, and merge the resulting duplicates.
// Returns the old-to-new index map; `verts` is compacted in place.
std::vector<std::size_t> symmetrize_vertices(std::vector<Vec>& verts) {
  const double match = 1e-6 * max_norm(verts);
  const std::size_t m = verts.size();
  std::vector<bool> paired(m, false);
  auto nearest_antipode = [&](std::size_t i, bool free_only) {
    std::optional<std::size_t> partner;
    double best = match;
    for (std::size_t j = 0; j < m; ++j) {
      const double d = (verts[i] + verts[j]).norm();
      if (j != i && (!free_only || !paired[j]) && d <= best) {
        best = d;
        partner = j;
      }
    }
    return partner;
  };
  for (std::size_t i = 0; i < m; ++i) {
    if (paired[i]) continue;
    if (const auto j = nearest_antipode(i, true)) {
      verts[i] = 0.5 * (verts[i] - verts[*j]);
      verts[*j] = -verts[i];
      paired[i] = paired[*j] = true;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (paired[i]) continue;
    if (const auto j = nearest_antipode(i, false)) verts[i] = -verts[*j];
  }
  std::vector<std::size_t> remap(m);
  std::vector<Vec> unique;
  for (std::size_t i = 0; i < m; ++i) {
    const auto it = std::find_if(unique.begin(), unique.end(), [&](const Vec& w) { return w == verts[i]; });
    remap[i] = static_cast<std::size_t>(it - unique.begin());
    if (it == unique.end()) unique.push_back(verts[i]);
  }
  verts = std::move(unique);
  return remap;
}

}  // namespace

WulffResult wulff_shape_detailed(const SupportSamples& f) {
  const int dim = f.dim();
  const std::vector<Vec>& u = f.directions();
  const std::vector<double>& h = f.values();
  const std::size_t m = u.size();
  std::vector<double> atom_area(m, 0.0);

  if (dim == 1) {
    double a = std::numeric_limits<double>::infinity();
    for (double v : h) a = std::min(a, v);
    for (std::size_t i = 0; i < m; ++i) {
      if (h[i] <= a) atom_area[i] = 1.0;
    }
    return {segment_body(a), std::move(atom_area)};
  }

  std::vector<Vec> dual(m);
  for (std::size_t i = 0; i < m; ++i) dual[i] = u[i] / h[i];
  const double scale = max_norm(dual);
  const double tol = kBodyTol * scale;
  auto unbounded = [] {
    return GeometryError(ErrorCode::kUnboundedShape, "origin is not interior to the dual hull");
  };

  std::vector<Vec> verts;
  std::vector<Facet> facets;
  if (dim == 2) {
    const std::vector<std::size_t> ring = hull_2d(dual, tol);
    if (ring.size() < 3) throw unbounded();
    const std::size_t r = ring.size();
    for (std::size_t k = 0; k < r; ++k) {
      const Vec& a = dual[ring[k]];
      const Vec& b = dual[ring[(k + 1) % r]];
      const Vec normal = make_vec(b.y() - a.y(), a.x() - b.x()).normalized();
      const double off = normal.dot(a);
      if (!(off > tol)) throw unbounded();
      verts.push_back(normal / off);
    }
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t prev = (k + r - 1) % r;
      const std::size_t atom = ring[k];
      const double len = (verts[k] - verts[prev]).norm();
      atom_area[atom] = len;
      facets.push_back({u[atom], h[atom], len, {prev, k}});
    }
  } else {
    Hull3 hull;
    try {
      hull = hull_3d(dual, 1e-13);
    } catch (const GeometryError&) {
      throw unbounded();
    }
    std::vector<std::vector<std::size_t>> incident(m);
    for (const HullFacet& hf : hull.facets) {
      if (!(hf.offset > tol)) throw unbounded();
      verts.push_back(hf.normal / hf.offset);
    }
    const std::vector<std::size_t> remap = symmetrize_vertices(verts);
    for (std::size_t id = 0; id < hull.facets.size(); ++id) {
      for (std::size_t i : hull.facets[id].vertices) incident[i].push_back(remap[id]);
    }
    for (std::vector<std::size_t>& ring : incident) {
      std::sort(ring.begin(), ring.end());
      ring.erase(std::unique(ring.begin(), ring.end()), ring.end());
    }
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<std::size_t>& ring = incident[i];
      if (ring.size() < 3) continue;
      const Vec e1 = plane_basis(u[i]).first;
      const Vec e2 = u[i].cross(e1);
      Vec centre = Vec::Zero();
      for (std::size_t id : ring) centre += verts[id];
      centre /= static_cast<double>(ring.size());
      std::vector<double> angle(verts.size());
      for (std::size_t id : ring) {
        const Vec d = verts[id] - centre;
        angle[id] = std::atan2(d.dot(e2), d.dot(e1));
      }
      std::sort(ring.begin(), ring.end(),
                [&](std::size_t a, std::size_t b) { return angle[a] < angle[b]; });
      const double area = polygon_area(verts, ring, u[i]);
      if (!(area > 0.0)) continue;
      atom_area[i] = area;
      facets.push_back({u[i], h[i], area, ring});
    }
  }
  return {ConvexBody(dim, std::move(verts), std::move(facets)), std::move(atom_area)};
}

ConvexBody wulff_shape(const SupportSamples& f) { return wulff_shape_detailed(f).body; }

ConvexBody minkowski_sum(std::span<const PointSet> summands) {
  if (summands.empty()) throw GeometryError(ErrorCode::kInvalidInput, "no summands");
  const int dim = summands.front().dim;
  std::vector<Vec> acc{Vec::Zero()};
  for (const PointSet& s : summands) {
    if (s.dim != dim) {
      throw GeometryError(ErrorCode::kDimensionMismatch, "summand dimensions differ");
    }
    std::vector<Vec> next;
    next.reserve(acc.size() * s.points.size());
    for (const Vec& a : acc) {
      for (const Vec& b : s.points) {
        const Vec c = a + b;
        const bool dup = std::any_of(next.begin(), next.end(),
                                     [&](const Vec& q) { return (q - c).norm() <= 1e-14 * (1.0 + c.norm()); });
        if (!dup) next.push_back(c);
      }
    }
    acc = std::move(next);
  }
  return ConvexBody::from_points(dim, std::move(acc));
}

ConvexBody minkowski_sum(const ConvexBody& a, const PointSet& b) {
  const PointSet parts[] = {PointSet::of(a), b};
  return minkowski_sum(std::span<const PointSet>(parts));
}

ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b) {
  return minkowski_sum(a, PointSet::of(b));
}

ConvexBody project(const ConvexBody& body, const Subspace& xi) {
  if (xi.ambient_dim() != body.dim()) {
    throw GeometryError(ErrorCode::kDimensionMismatch, "subspace lives in another dimension");
  }
  std::vector<Vec> local;
  local.reserve(body.vertices().size());
  for (const Vec& v : body.vertices()) local.push_back(xi.to_local(v));
  return ConvexBody::from_points(xi.dim(), std::move(local));
}

double distance_to(const ConvexBody& body, const Vec& p) {
  const double tol = 1e-12 * body.circumradius();
  bool inside = true;
  for (const Facet& f : body.facets()) {
    if (f.normal.dot(p) > f.support + tol) {
      inside = false;
      break;
    }
  }
  if (inside) return 0.0;
  const std::vector<Vec>& v = body.vertices();
  if (body.dim() == 1) return std::max(0.0, std::abs(p.x()) - body.support(make_vec(1.0)));
  double best = std::numeric_limits<double>::infinity();
  if (body.dim() == 2) {
    for (const Facet& f : body.facets()) {
      best = std::min(best, segment_distance(p, v[f.vertices[0]], v[f.vertices[1]]));
    }
    return best;
  }
  for (const Facet& f : body.facets()) {
    const double height = f.normal.dot(p) - f.support;
    const Vec q = p - height * f.normal;
    const std::size_t r = f.vertices.size();
    bool in_polygon = true;
    for (std::size_t k = 0; k < r; ++k) {
      const Vec& a = v[f.vertices[k]];
      const Vec& b = v[f.vertices[(k + 1) % r]];
      if ((b - a).cross(q - a).dot(f.normal) < -tol * (b - a).norm()) {
        in_polygon = false;
        break;
      }
    }
    if (in_polygon) {
      best = std::min(best, std::abs(height));
      continue;
    }
    for (std::size_t k = 0; k < r; ++k) {
      best = std::min(best, segment_distance(p, v[f.vertices[k]], v[f.vertices[(k + 1) % r]]));
    }
  }
  return best;
}

double hausdorff_distance(const ConvexBody& a, const ConvexBody& b) {
  if (a.dim() != b.dim()) {
    throw GeometryError(ErrorCode::kDimensionMismatch, "bodies differ in dimension");
  }
  double d = 0.0;
  for (const Vec& v : a.vertices()) d = std::max(d, distance_to(b, v));
  for (const Vec& v : b.vertices()) d = std::max(d, distance_to(a, v));
  return d;
}

// ---------------------------------------------------------------- factories

ConvexBody make_box(const std::vector<double>& half_sides) {
  const int dim = static_cast<int>(half_sides.size());
  check_dim(dim);
  for (double s : half_sides) {
    if (!(s > 0.0)) throw GeometryError(ErrorCode::kInvalidInput, "box half sides must be positive");
  }
  std::vector<Vec> pts;
  for (int mask = 0; mask < (1 << dim); ++mask) {
    Vec p = Vec::Zero();
    for (int i = 0; i < dim; ++i) p[i] = (mask >> i & 1) ? half_sides[i] : -half_sides[i];
    pts.push_back(p);
  }
  return ConvexBody::from_points(dim, std::move(pts));
}

ConvexBody make_segment(double a) {
  if (!(a > 0.0)) throw GeometryError(ErrorCode::kInvalidInput, "segment half length must be positive");
  return segment_body(a);
}

ConvexBody make_polygon(const std::vector<Vec>& vertices) {
  const double tol = kBodyTol * std::max(max_norm(vertices), 1e-300);
  for (const Vec& v : vertices) {
    const bool mirrored = std::any_of(vertices.begin(), vertices.end(),
                                      [&](const Vec& w) { return (v + w).norm() <= tol; });
    if (!mirrored) {
      throw GeometryError(ErrorCode::kAsymmetricInput, "polygon vertices are not origin symmetric");
    }
  }
  return ConvexBody::from_points(2, vertices);
}

ConvexBody make_regular_polygon(int sides, double circumradius) {
  if (sides < 4 || sides % 2 != 0) {
    throw GeometryError(ErrorCode::kInvalidInput, "symmetric regular polygon needs an even side count >= 4");
  }
  std::vector<Vec> pts;
  for (int k = 0; k < sides / 2; ++k) {
    const double a = 2.0 * std::numbers::pi * k / sides;
    const Vec p = circumradius * make_vec(std::cos(a), std::sin(a));
    pts.push_back(p);
    pts.push_back(-p);
  }
  return ConvexBody::from_points(2, std::move(pts));
}

ConvexBody make_cross_polytope(int dim, double r) {
  check_dim(dim);
  std::vector<Vec> pts;
  for (int i = 0; i < dim; ++i) {
    pts.push_back(r * Vec::Unit(i));
    pts.push_back(-r * Vec::Unit(i));
  }
  return ConvexBody::from_points(dim, std::move(pts));
}

ConvexBody make_prism(const ConvexBody& base, double height) {
  if (base.dim() != 2) throw GeometryError(ErrorCode::kDimensionMismatch, "prism base must be planar");
  if (!(height > 0.0)) throw GeometryError(ErrorCode::kInvalidInput, "prism height must be positive");
  return minkowski_sum(std::array<PointSet, 2>{PointSet{3, base.vertices()},
                                               PointSet::segment(3, height * Vec::UnitZ())});
}

}  // namespace logmink
