#include "logmink/combination.hpp"
#include "logmink/cylinder.hpp"
#include "logmink/error.hpp"
#include "logmink/inequality.hpp"
#include "logmink/random.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace logmink {
namespace {

using testing::cube;
using testing::hexagonal_prism;
using testing::octahedron;
using testing::square;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const GeometryError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no GeometryError thrown";
  return ErrorCode::kInvalidInput;
}

ConvexBody parallelogram(const Vec& d1, const Vec& d2, double a, double b) {
  return minkowski_sum(std::array<PointSet, 2>{PointSet::segment(2, a * d1), PointSet::segment(2, b * d2)});
}

// ------------------------------------------------------------ combinations

TEST(LpCombination, Examples) {
  const ConvexBody k = octahedron();
  EXPECT_LT(hausdorff_distance(lp_combination(k, k, 0.3, 2.5).body, k), 1e-9);
  EXPECT_LT(hausdorff_distance(lp_combination(cube(), cube().scaled(2), 0.5, 1.0).body, cube().scaled(1.5)),
            1e-9);
  EXPECT_LT(hausdorff_distance(lp_combination(cube(), cube().scaled(2), 0.5, 2.0).body,
                               cube().scaled(std::sqrt(2.5))),
            1e-9);
}

TEST(LpCombination, Errors) {
  EXPECT_EQ(code_of([] { lp_combination(cube(), cube(), 0.5, 0.0); }), ErrorCode::kInvalidP);
  EXPECT_EQ(code_of([] { lp_combination(cube(), cube(), 0.5, -1.0); }), ErrorCode::kInvalidP);
  EXPECT_EQ(code_of([] { lp_combination(cube(), square(), 0.5, 1.0); }), ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of([] { log_combination(cube(), cube(), 0.0); }), ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of([] { log_combination(cube(), cube(), 1.0); }), ErrorCode::kInvalidInput);
}

TEST(LogCombination, Examples) {
  const ConvexBody k = hexagonal_prism(0.7);
  const Combination d = log_combination(k, k.scaled(3.0), 0.4);
  EXPECT_TRUE(d.approximate);
  EXPECT_LT(hausdorff_distance(d.body, k.scaled(std::pow(3.0, 0.4))), 1e-9);

  EXPECT_LT(hausdorff_distance(log_combination(cube(), make_box({4, 1, 1}), 0.5).body, make_box({2, 1, 1})),
            1e-6);
  EXPECT_LT(hausdorff_distance(log_combination(k, octahedron(), 1e-6).body, k), 1e-4);
}

TEST(LogCombination, OneDimensional) {
  const Combination c = log_combination(make_segment(2.0), make_segment(8.0), 0.5);
  EXPECT_FALSE(c.approximate);
  EXPECT_NEAR(c.body.volume(), 8.0, 1e-12);
}

// ------------------------------------------------------------ functional

TEST(LogMinkowskiLhs, Examples) {
  const ConvexBody k = octahedron();
  const VerifyReport r = verify_log_minkowski(k, k.scaled(2.5));
  EXPECT_NEAR(r.lhs, std::log(2.5), 1e-12);
  EXPECT_NEAR(r.rhs, std::log(2.5), 1e-12);

  // Facet weights 4/3 on a cube of volume 8; the box doubles h at +-e1.
  const double oracle = (1.0 / 8.0) * (4.0 / 3.0) * (std::log(2.0) + std::log(2.0));
  EXPECT_NEAR(oracle, std::log(2.0) / 3.0, 1e-15);
  EXPECT_NEAR(log_minkowski_lhs(cube(), make_box({2, 1, 1})), oracle, 1e-12);
  EXPECT_NEAR(log_minkowski_rhs(cube(), make_box({2, 1, 1})), std::log(16.0 / 8.0) / 3.0, 1e-12);

  EXPECT_NEAR(log_minkowski_lhs(make_segment(0.5), make_segment(3.0)), std::log(6.0), 1e-15);
  EXPECT_NEAR(log_minkowski_rhs(make_segment(0.5), make_segment(3.0)), std::log(6.0), 1e-15);
  EXPECT_EQ(code_of([] { log_minkowski_lhs(cube(), square()); }), ErrorCode::kDimensionMismatch);
}

TEST(VerifyLogMinkowski, Examples) {
  const VerifyReport planar = verify_log_minkowski(square(), make_box({2, 1}));
  EXPECT_NEAR(planar.lhs, 0.5 * std::log(2.0), 1e-12);
  EXPECT_NEAR(planar.gap, 0.0, 1e-12);
  EXPECT_EQ(planar.equality_class, VerifyClass::kRelativeCylinders);
  EXPECT_FALSE(planar.conjectural);

  const VerifyReport co = verify_log_minkowski(cube(), octahedron());
  EXPECT_NEAR(co.lhs, 0.0, 1e-12);
  EXPECT_NEAR(co.rhs, std::log((4.0 / 3.0) / 8.0) / 3.0, 1e-12);
  EXPECT_NEAR(co.gap, std::log(6.0) / 3.0, 1e-12);
  EXPECT_EQ(co.equality_class, VerifyClass::kStrict);
  EXPECT_FALSE(co.conjectural);
  EXPECT_TRUE(co.passed());

  const VerifyReport same = verify_log_minkowski(octahedron(), octahedron());
  EXPECT_NEAR(same.gap, 0.0, 1e-15);
  EXPECT_EQ(same.equality_class, VerifyClass::kDilatates);
  EXPECT_TRUE(same.conjectural);
}

// ------------------------------------------------------------ cylinders

TEST(DetectCylinder, CubeSplitsIntoThreeAxes) {
  const auto s = detect_cylinder(cube());
  ASSERT_TRUE(s);
  ASSERT_EQ(s->factors.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(s->factors[i].space.dim(), 1);
    EXPECT_TRUE(s->factors[i].space.same_as(Subspace::line(3, Vec::Unit(2 - i))));
    EXPECT_NEAR(s->factors[i].body.volume(), 2.0, 1e-12);
  }
  EXPECT_LT(hausdorff_distance(s->reconstruct(), cube()), 1e-12);
}

TEST(DetectCylinder, HexagonalPrism) {
  const ConvexBody k = hexagonal_prism(0.8);
  const auto s = detect_cylinder(k);
  ASSERT_TRUE(s);
  ASSERT_EQ(s->factors.size(), 2u);
  EXPECT_TRUE(s->factors[0].space.same_as(Subspace::line(3, Vec::UnitZ())));
  EXPECT_NEAR(s->factors[0].body.volume(), 1.6, 1e-12);
  EXPECT_EQ(s->factors[1].space.dim(), 2);
  EXPECT_EQ(s->factors[1].body.facets().size(), 6u);
  EXPECT_LT(hausdorff_distance(s->reconstruct(), k), 1e-12);
}

TEST(DetectCylinder, NonCylinders) {
  EXPECT_FALSE(detect_cylinder(octahedron()));
  EXPECT_FALSE(detect_cylinder(make_regular_polygon(6)));
  EXPECT_FALSE(detect_cylinder(make_segment(1.0)));
}

TEST(DetectCylinder, SlantedPrism) {
  const Mat shear = (Mat() << 1, 0, 0.6, 0, 1, -0.3, 0, 0, 1).finished();
  const ConvexBody k = apply_linear_map(hexagonal_prism(0.9), LinearMap(3, shear));
  const auto s = detect_cylinder(k);
  ASSERT_TRUE(s);
  ASSERT_EQ(s->factors.size(), 2u);
  EXPECT_TRUE(s->factors[0].space.same_as(Subspace::line(3, shear.col(2))));
  EXPECT_LT(hausdorff_distance(s->reconstruct(), k), 1e-8);
  const auto p = detect_cylinder(parallelogram(make_vec(1, 0), make_vec(1, 2).normalized(), 1.0, 0.4));
  ASSERT_TRUE(p);
  EXPECT_EQ(p->factors.size(), 2u);
}

TEST(ClassifyEquality, Examples) {
  const ConvexBody k = hexagonal_prism(0.6);
  EXPECT_EQ(classify_equality(k, k.scaled(3.0)), EqualityCase::kDilatates);
  EXPECT_EQ(classify_equality(cube(), make_box({5, 1, 1})), EqualityCase::kRelativeCylinders);
  EXPECT_EQ(classify_equality(cube(), octahedron()), EqualityCase::kNone);
  EXPECT_EQ(classify_equality(k, make_prism(make_regular_polygon(6, 2.0), 0.6)),
            EqualityCase::kRelativeCylinders);
  EXPECT_EQ(classify_equality(k, make_prism(make_regular_polygon(6, 2.0).scaled(1.0), 0.6).scaled(1.0)),
            EqualityCase::kRelativeCylinders);
  // Rotating the hexagon by 30 degrees breaks the factor dilatation.
  const ConvexBody turned = apply_linear_map(k, LinearMap(3, Eigen::AngleAxisd(std::numbers::pi / 6,
                                                                               Vec::UnitZ())
                                                                 .toRotationMatrix()));
  EXPECT_EQ(classify_equality(k, turned), EqualityCase::kNone);
}

// ------------------------------------------------------------ properties

TEST(LogMinkowskiProperties, LpMonotonicity) {
  Rng rng(11);
  for (int i = 0; i < 8; ++i) {
    const int dim = 2 + i % 2;
    const ConvexBody k = random_symmetric_polytope(rng, dim, 8);
    const ConvexBody l = random_symmetric_polytope(rng, dim, 8);
    const double lambda = rng.uniform(0.1, 0.9);
    double prev = 0.0;
    for (double p : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      const double v = lp_combination(k, l, lambda, p).body.volume();
      EXPECT_LE(prev, v + 1e-7);
      prev = v;
    }
    EXPECT_LE(log_combination(k, l, lambda).body.volume(), lp_combination(k, l, lambda, 0.25).body.volume() + 1e-7);
  }
}

TEST(LogMinkowskiProperties, L1Exactness) {
  Rng rng(12);
  for (int i = 0; i < 10; ++i) {
    const int dim = 2 + i % 2;
    const ConvexBody k = random_symmetric_polytope(rng, dim, 8);
    const ConvexBody l = random_symmetric_polytope(rng, dim, 8);
    const double lambda = rng.uniform(0.1, 0.9);
    const ConvexBody sum = minkowski_sum(k.scaled(1 - lambda), l.scaled(lambda));
    std::vector<Vec> normals;
    for (const Facet& f : sum.facets()) normals.push_back(f.normal);
    const Combination c = lp_combination(k, l, lambda, 1.0, normals);
    EXPECT_LT(hausdorff_distance(c.body, sum), 1e-6);
  }
}

TEST(LogMinkowskiProperties, HolderBoxes) {
  Rng rng(13);
  for (int i = 0; i < 6; ++i) {
    const int dim = 2 + i % 2;
    std::vector<double> a(dim), b(dim), g(dim);
    const double lambda = rng.uniform(0.1, 0.9);
    for (int j = 0; j < dim; ++j) {
      a[j] = rng.uniform(0.2, 3.0);
      b[j] = rng.uniform(0.2, 3.0);
      g[j] = std::pow(a[j], 1 - lambda) * std::pow(b[j], lambda);
    }
    const ConvexBody geo = make_box(g);
    const ConvexBody c = log_combination(make_box(a), make_box(b), lambda).body;
    for (const Vec& v : geo.vertices()) EXPECT_LE(distance_to(c, v), 1e-9);
    EXPECT_LT(std::abs(c.volume() - geo.volume()) / geo.volume(), 1e-5);
  }
}

TEST(LogMinkowskiProperties, GLInvariance) {
  Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    const int dim = 2 + i % 2;
    const ConvexBody k = random_symmetric_polytope(rng, dim, 10);
    const ConvexBody l = random_symmetric_polytope(rng, dim, 10);
    const LinearMap t = random_linear_map(rng, dim);
    const ConvexBody tk = apply_linear_map(k, t), tl = apply_linear_map(l, t);
    EXPECT_LT(std::abs(log_minkowski_lhs(tk, tl) - log_minkowski_lhs(k, l)), 1e-7);
    EXPECT_LT(std::abs(log_minkowski_rhs(tk, tl) - log_minkowski_rhs(k, l)), 1e-9);
  }
}

TEST(LogMinkowskiProperties, PlanarTheorem) {
  Rng rng(15);
  double min_gap = INFINITY;
  for (int i = 0; i < 500; ++i) {
    const ConvexBody k = random_symmetric_polytope(rng, 2, 2 + i % 12);
    const ConvexBody l = random_symmetric_polytope(rng, 2, 2 + (i / 12) % 12);
    const VerifyReport r = verify_log_minkowski(k, l);
    min_gap = std::min(min_gap, r.gap);
    if (classify_equality(k, l) != EqualityCase::kNone) EXPECT_LE(r.gap, 1e-9);
  }
  EXPECT_GE(min_gap, -1e-9);
  for (int i = 0; i < 50; ++i) {
    const Vec d1 = rng.sphere_point(2), d2 = rng.sphere_point(2);
    if (std::abs(d1.x() * d2.y() - d1.y() * d2.x()) < 0.1) continue;
    const ConvexBody k = parallelogram(d1, d2, rng.uniform(0.2, 2), rng.uniform(0.2, 2));
    const ConvexBody l = parallelogram(d1, d2, rng.uniform(0.2, 2), rng.uniform(0.2, 2));
    const VerifyReport r = verify_log_minkowski(k, l);
    EXPECT_LE(std::abs(r.gap), 1e-9);
    EXPECT_TRUE(r.equality_class == VerifyClass::kRelativeCylinders ||
                r.equality_class == VerifyClass::kDilatates);
  }
}

TEST(LogMinkowskiProperties, CylinderTheorem) {
  Rng rng(16);
  double min_gap = INFINITY;
  for (int i = 0; i < 500; ++i) {
    const CylinderSample k = random_cylinder(rng);
    const ConvexBody l = random_symmetric_polytope(rng, 3, 6 + i % 10);
    const VerifyReport r = verify_log_minkowski(k.body, l, 1e-7);
    ASSERT_FALSE(r.conjectural);
    min_gap = std::min(min_gap, r.gap);
    // Equality forces relative cylinders.
    if (std::abs(r.gap) <= 1e-7) {
      EXPECT_NE(classify_equality(k.body, l, 1e-7), EqualityCase::kNone);
    }
  }
  EXPECT_GE(min_gap, -1e-9);
  for (int i = 0; i < 50; ++i) {
    const CylinderSample k = random_cylinder(rng);
    const ConvexBody l = k.relative(rng.uniform(0.3, 3), rng.uniform(0.3, 3));
    const VerifyReport r = verify_log_minkowski(k.body, l, 1e-7);
    EXPECT_LE(std::abs(r.gap), 1e-8);
    EXPECT_EQ(r.equality_class, VerifyClass::kRelativeCylinders);
  }
}

TEST(LogMinkowskiProperties, EqualityChain) {
  Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    const CylinderSample k = random_cylinder(rng);
    const ConvexBody l = k.relative(rng.uniform(0.3, 3), rng.uniform(0.3, 3));
    ASSERT_LE(std::abs(verify_log_minkowski(k.body, l).gap), 1e-9);
    const Vec u0 = k.rotation.apply(Vec::UnitZ());
    const Subspace base_plane = Subspace::line(3, u0).orthogonal_complement();
    const double chain = 2.0 * l.support(u0) * project(l, base_plane).volume();
    EXPECT_LT(std::abs(l.volume() - chain) / l.volume(), 1e-6);
  }
}

}  // namespace
}  // namespace logmink
