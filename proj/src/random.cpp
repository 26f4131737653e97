#include "logmink/random.hpp"

#include "logmink/error.hpp"

#include <cmath>
#include <numbers>

namespace logmink {

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Vec Rng::sphere_point(int dim) {
  for (;;) {
    Vec v = Vec::Zero();
    for (int i = 0; i < dim; ++i) v[i] = normal();
    const double len = v.norm();
    if (len > 1e-6) return v / len;
  }
}

ConvexBody random_symmetric_polytope(Rng& rng, int dim, int points) {
  if (points < dim) throw GeometryError(ErrorCode::kInvalidInput, "too few sample points");
  for (;;) {
    std::vector<Vec> pts;
    pts.reserve(2 * static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
      const Vec p = rng.sphere_point(dim);
      pts.push_back(p);
      pts.push_back(-p);
    }
    try {
      return ConvexBody::from_points(dim, std::move(pts));
    } catch (const GeometryError&) {
      // Flat sample; draw again.
    }
  }
}

ConvexBody random_symmetric_wulff(Rng& rng, int dim, int normals) {
  for (;;) {
    std::vector<Vec> dirs;
    std::vector<double> h;
    for (int i = 0; i < normals; ++i) {
      const Vec u = rng.sphere_point(dim);
      const double v = rng.uniform(0.7, 1.3);
      dirs.push_back(u);
      dirs.push_back(-u);
      h.push_back(v);
      h.push_back(v);
    }
    try {
      return wulff_shape(SupportSamples(dim, std::move(dirs), std::move(h)));
    } catch (const GeometryError&) {
      // Unbounded sample; draw again.
    }
  }
}

LinearMap random_linear_map(Rng& rng, int dim, double min_det, double max_det) {
  for (;;) {
    Mat m = Mat::Identity();
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) m(i, j) = rng.normal();
    }
    const double scale = std::exp(rng.uniform(std::log(min_det), std::log(max_det)) / dim);
    const Eigen::Matrix3d block = m;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(block.topLeftCorner(dim, dim));
    const auto& s = svd.singularValues();
    if (s(dim - 1) <= 0.0 || s(0) / s(dim - 1) > 50.0) continue;
    const double det = std::abs(block.topLeftCorner(dim, dim).determinant());
    m.topLeftCorner(dim, dim) *= scale / std::pow(det, 1.0 / dim);
    return LinearMap(dim, m);
  }
}

LinearMap random_rotation(Rng& rng, int dim) {
  Eigen::MatrixXd g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = rng.normal();
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  if (q.determinant() < 0.0) q.col(0) *= -1.0;
  Mat m = Mat::Identity();
  m.topLeftCorner(dim, dim) = q;
  return LinearMap(dim, m);
}

ConvexBody CylinderSample::relative(double c_base, double c_height) const {
  return apply_linear_map(make_prism(base.scaled(c_base), half_height * c_height), rotation);
}

CylinderSample random_cylinder(Rng& rng, int base_points) {
  ConvexBody base = random_symmetric_polytope(rng, 2, base_points);
  const double h = rng.uniform(0.3, 2.0);
  const LinearMap rot = random_rotation(rng, 3);
  ConvexBody body = apply_linear_map(make_prism(base, h), rot);
  return {std::move(body), std::move(base), h, rot};
}

}  // namespace logmink
