#pragma once

// Origin-symmetric polytopes in dimensions 1-3: representation, support
// function, Wulff shapes, Minkowski sums, projections and the Hausdorff metric.

#include "logmink/vec.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace logmink {

/// Relative tolerance for origin symmetry and facet support checks.
constexpr double kBodyTol = 1e-9;

struct Facet {
  Vec normal;             ///< outward unit normal
  double support = 0.0;   ///< h_K(normal)
  double area = 0.0;      ///< (n-1)-dimensional measure; 1 for n = 1 endpoints
  /// Indices into the body's vertex list: the polygon counter-clockwise about
  /// `normal` for n = 3, the two endpoints for n = 2, the endpoint for n = 1.
  std::vector<std::size_t> vertices;
};

/// Full-dimensional origin-symmetric polytope held in both vertex and facet
/// form. Immutable after construction.
class ConvexBody {
 public:
  /// Convex hull of `points` (which must be origin symmetric).
  static ConvexBody from_points(int dim, std::vector<Vec> points);

  /// Takes an already consistent vertex/facet description. Validates symmetry,
  /// facet supports and full dimensionality; computes the volume by simplex
  /// decomposition.
  ConvexBody(int dim, std::vector<Vec> vertices, std::vector<Facet> facets);

  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  double volume() const { return volume_; }
  double surface_area() const;
  double circumradius() const { return max_norm(vertices_); }

  /// h_K(x) = max over vertices of x . v.
  double support(const Vec& x) const;

  ConvexBody scaled(double c) const;

 private:
  int dim_;
  std::vector<Vec> vertices_;
  std::vector<Facet> facets_;
  double volume_ = 0.0;
};

/// Finite point set that may be lower dimensional, e.g. a segment summand.
struct PointSet {
  int dim = 0;
  std::vector<Vec> points;

  static PointSet of(const ConvexBody& body) { return {body.dim(), body.vertices()}; }
  static PointSet segment(int dim, const Vec& a) { return {dim, {a, -a}}; }
  static PointSet origin(int dim) { return {dim, {Vec::Zero()}}; }
};

/// Positive even function sampled on a finite symmetric direction set.
class SupportSamples {
 public:
  /// Normalizes directions, adds missing antipodes, keeps the smallest value
  /// among duplicate directions. Throws InvalidInput on non-positive values,
  /// AsymmetricInput when u and -u carry different values, UnboundedShape when
  /// the directions do not span R^n.
  SupportSamples(int dim, const std::vector<Vec>& directions,
                 const std::vector<double>& values);

  /// Samples h_body on `directions`.
  static SupportSamples of_body(const ConvexBody& body, const std::vector<Vec>& directions);

  int dim() const { return dim_; }
  std::size_t size() const { return dirs_.size(); }
  const std::vector<Vec>& directions() const { return dirs_; }
  const std::vector<double>& values() const { return values_; }

 private:
  int dim_;
  std::vector<Vec> dirs_;
  std::vector<double> values_;
};

/// Invertible linear map of R^n, padded with the identity up to 3x3.
class LinearMap {
 public:
  /// Uses the top-left n x n block of `m`. Throws SingularMap if |det| <= 1e-12.
  LinearMap(int dim, const Mat& m);

  static LinearMap identity(int dim) { return LinearMap(dim, Mat::Identity()); }
  static LinearMap diagonal(const std::vector<double>& d);
  static LinearMap rotation2d(double angle);

  int dim() const { return dim_; }
  const Mat& matrix() const { return m_; }
  double det() const { return det_; }
  Mat transpose_inverse() const { return m_.inverse().transpose(); }
  Vec apply(const Vec& x) const { return m_ * x; }

 private:
  int dim_;
  Mat m_;
  double det_;
};

/// Linear subspace with an orthonormal basis. One-dimensional subspaces use
/// the canonical direction; planes in R^3 use plane_basis of their canonical
/// normal, so equal subspaces have equal bases.
class Subspace {
 public:
  /// Span of `vectors` in R^ambient_dim. Throws InvalidInput if the span is
  /// {0}, or all of R^n unless `allow_full` is set.
  Subspace(int ambient_dim, const std::vector<Vec>& vectors, bool allow_full = false);

  static Subspace line(int ambient_dim, const Vec& d) { return Subspace(ambient_dim, {d}); }

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }

  /// Coordinates of the orthogonal projection of x in this basis.
  Vec to_local(const Vec& x) const;
  Vec embed(const Vec& local) const;
  Vec project(const Vec& x) const { return embed(to_local(x)); }
  bool contains(const Vec& x, double tol = 1e-9) const;
  Subspace orthogonal_complement() const;
  bool same_as(const Subspace& other, double tol = 1e-8) const;

 private:
  int ambient_;
  std::vector<Vec> basis_;
};

/// Convex body living in a proper subspace, stored in the subspace's basis
/// coordinates (body.dim() == space.dim()).
struct EmbeddedBody {
  Subspace space;
  ConvexBody body;

  /// Vertices mapped into the ambient space.
  PointSet embedded() const;
};

double support_eval(const ConvexBody& body, const Vec& x);

/// TK, rebuilt from the mapped vertices. Throws SingularMap.
ConvexBody apply_linear_map(const ConvexBody& body, const LinearMap& t);

/// Wulff shape (Aleksandrov body) [f] = intersection of {x : x.u <= f(u)},
/// computed by polar duality: the points u / f(u) are hulled and every hull
/// facet dualizes to a vertex of [f]. Facet normals of the result are the
/// sample directions themselves.
ConvexBody wulff_shape(const SupportSamples& f);

/// Wulff shape plus the facet area carried by each sample atom (0 for
/// inactive constraints), in the order of f.directions().
struct WulffResult {
  ConvexBody body;
  std::vector<double> atom_area;
};
WulffResult wulff_shape_detailed(const SupportSamples& f);

ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b);
ConvexBody minkowski_sum(const ConvexBody& a, const PointSet& b);
/// Sum of several (possibly lower dimensional) summands; the result must be
/// full dimensional.
ConvexBody minkowski_sum(std::span<const PointSet> summands);

/// Orthogonal projection onto `xi`, expressed in xi's basis coordinates.
ConvexBody project(const ConvexBody& body, const Subspace& xi);

/// Euclidean distance from `p` to the body (0 inside).
double distance_to(const ConvexBody& body, const Vec& p);

double hausdorff_distance(const ConvexBody& a, const ConvexBody& b);

ConvexBody make_box(const std::vector<double>& half_sides);
ConvexBody make_segment(double a);
/// Polygon from a vertex list; throws AsymmetricInput unless origin symmetric.
ConvexBody make_polygon(const std::vector<Vec>& vertices);
ConvexBody make_regular_polygon(int sides, double circumradius = 1.0);
/// conv{+-e_i} scaled by `r`.
ConvexBody make_cross_polytope(int dim, double r = 1.0);
/// Right prism polygon + height*[-e3, e3] over a planar body in the xy-plane.
ConvexBody make_prism(const ConvexBody& base, double height);

}  // namespace logmink
