// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include "logmink/combination.hpp"
#include "logmink/cylinder.hpp"
#include "logmink/inequality.hpp"
#include "logmink/measures.hpp"
#include "logmink/random.hpp"
#include "logmink/solver.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace {

using namespace logmink;

struct Verdict {
  bool pass = true;
  std::string detail;
};

char buf[512];

template <class... Args>
std::string format(const char* f, Args... args) {
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

ConvexBody parallelogram(const Vec& d1, const Vec& d2, double a, double b) {
  return minkowski_sum(std::array<PointSet, 2>{PointSet::segment(2, a * d1), PointSet::segment(2, b * d2)});
}

SupportSamples samples_of(const ConvexBody& k) {
  std::vector<Vec> u;
  for (const Facet& f : k.facets()) u.push_back(f.normal);
  return SupportSamples::of_body(k, u);
}

// 1. Cone-volume totals.
Verdict cone_volume_totals() {
  Rng rng(101);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const ConvexBody k = random_symmetric_polytope(rng, 2 + i % 2, 20);
    worst = std::max(worst, std::abs(cone_volume_measure(k).total() - k.volume()) / k.volume());
  }
  return {worst < 1e-9, format("max |V_K(S) - V(K)|/V(K) = %.2e over 200 bodies", worst)};
}

// 2. Product decomposition.
Verdict decomposition() {
  Rng rng(202);
  double worst = 0.0;
  std::size_t unmatched = 0;
  auto check = [&](const EmbeddedBody& a, const EmbeddedBody& b) {
    const ConvexBody direct = minkowski_sum(std::array<PointSet, 2>{a.embedded(), b.embedded()});
    const MeasureComparison c = measures_equal(product_cone_volume(a, b), cone_volume_measure(direct), 1e-8);
    worst = std::max(worst, c.max_deviation);
    unmatched += c.unmatched;
  };
  for (int i = 0; i < 50; ++i) {
    const Subspace plane(3, {rng.sphere_point(3), rng.sphere_point(3)});
    const ConvexBody polygon = random_symmetric_polytope(rng, 2, 3 + i % 10);
    check({plane, polygon}, {plane.orthogonal_complement(), make_segment(rng.uniform(0.2, 3.0))});
  }
  for (int i = 0; i < 50; ++i) {
    const Mat r = random_rotation(rng, 3).matrix();
    const Subspace plane(3, {r.col(0), r.col(1)});
    const double a = rng.uniform(0.2, 3.0);
    const double b = rng.uniform(0.2, 3.0);
    std::vector<Vec> corners;
    for (double s : {-1.0, 1.0}) {
      for (double t : {-1.0, 1.0}) corners.push_back(plane.to_local(s * a * r.col(0) + t * b * r.col(1)));
    }
    check({plane, ConvexBody::from_points(2, corners)},
          {plane.orthogonal_complement(), make_segment(rng.uniform(0.2, 3.0))});
  }
  return {worst <= 1e-8 && unmatched == 0,
          format("max atom deviation %.2e, %zu unmatched atoms over 100 products", worst, unmatched)};
}

// 3. Cylinder formula: caps (1/3) a |base|, lateral atoms (4/3) a V_base.
Verdict cylinder_formula() {
  Rng rng(303);
  double worst = 0.0;
  bool counts = true;
  for (int i = 0; i < 50; ++i) {
    const ConvexBody base = random_symmetric_polytope(rng, 2, 3 + i % 12);
    const LinearMap rot = random_rotation(rng, 3);
    const DiscreteMeasure vb = cone_volume_measure(base);
    for (double a : {0.5, 1.0, 2.0}) {
      const DiscreteMeasure vk = cone_volume_measure(apply_linear_map(make_prism(base, a), rot));
      counts = counts && vk.size() == vb.size() + 2;
      auto rel = [&](const Vec& u, double expected) {
        worst = std::max(worst, std::abs(vk.weight_at(rot.apply(u)) - expected) / expected);
      };
      for (double s : {-1.0, 1.0}) rel(Vec(0, 0, s), a * base.volume() / 3.0);
      for (const Atom& at : vb.atoms()) rel(at.direction, 4.0 / 3.0 * a * at.weight);
    }
  }
  return {worst < 1e-9 && counts, format("max relative atom error %.2e over 150 cylinders", worst)};
}

// 4. GL invariance and the surface-measure transform law.
Verdict gl_invariance() {
  Rng rng(404);
  double lhs_drift = 0.0;
  double rhs_drift = 0.0;
  double transform_dev = 0.0;
  std::size_t unmatched = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 2;
    const ConvexBody k = random_symmetric_polytope(rng, n, 12);
    const ConvexBody l = random_symmetric_polytope(rng, n, 12);
    const LinearMap t = random_linear_map(rng, n);
    const ConvexBody tk = apply_linear_map(k, t);
    const ConvexBody tl = apply_linear_map(l, t);
    lhs_drift = std::max(lhs_drift, std::abs(log_minkowski_lhs(tk, tl) - log_minkowski_lhs(k, l)));
    rhs_drift = std::max(rhs_drift, std::abs(log_minkowski_rhs(tk, tl) - log_minkowski_rhs(k, l)));
    const MeasureComparison c =
        measures_equal(transform_surface_measure(surface_area_measure(k), t), surface_area_measure(tk), 1e-7);
    transform_dev = std::max(transform_dev, c.max_deviation);
    unmatched += c.unmatched;
  }
  return {lhs_drift < 1e-7 && rhs_drift < 1e-9 && transform_dev < 1e-7 && unmatched == 0,
          format("lhs drift %.2e, rhs drift %.2e, transform deviation %.2e over 100 triples", lhs_drift, rhs_drift,
                 transform_dev)};
}

// 5. Planar theorem.
Verdict planar_theorem() {
  Rng rng(505);
  double min_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 500; ++i) {
    const ConvexBody k = random_symmetric_polytope(rng, 2, 3 + i % 18);
    const ConvexBody l = random_symmetric_polytope(rng, 2, 3 + (i * 7) % 18);
    min_gap = std::min(min_gap, verify_log_minkowski(k, l).gap);
  }
  double worst_eq = 0.0;
  int misclassified = 0;
  for (int i = 0; i < 50; ++i) {
    const Vec d1 = rng.sphere_point(2);
    Vec d2 = rng.sphere_point(2);
    while (std::abs(d1.x() * d2.y() - d1.y() * d2.x()) < 0.2) d2 = rng.sphere_point(2);
    const ConvexBody k = parallelogram(d1, d2, rng.uniform(0.3, 3.0), rng.uniform(0.3, 3.0));
    const ConvexBody l = parallelogram(d1, d2, rng.uniform(0.3, 3.0), rng.uniform(0.3, 3.0));
    const VerifyReport r = verify_log_minkowski(k, l);
    worst_eq = std::max(worst_eq, std::abs(r.gap));
    if (r.equality_class != VerifyClass::kRelativeCylinders && r.equality_class != VerifyClass::kDilatates) {
      ++misclassified;
    }
  }
  return {min_gap >= -1e-9 && worst_eq <= 1e-9 && misclassified == 0,
          format("min gap %.2e over 500 pairs; parallelograms max |gap| %.2e, %d misclassified", min_gap, worst_eq,
                 misclassified)};
}

// 6. Three-dimensional cylinder theorem.
Verdict cylinder_theorem() {
  Rng rng(606);
  double min_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 500; ++i) {
    const ConvexBody k = random_cylinder(rng).body;
    min_gap = std::min(min_gap, verify_log_minkowski(k, random_symmetric_polytope(rng, 3, 20)).gap);
  }
  double worst_eq = 0.0;
  for (int i = 0; i < 100; ++i) {
    const CylinderSample s = random_cylinder(rng);
    const ConvexBody l = s.relative(rng.uniform(0.3, 3.0), rng.uniform(0.3, 3.0));
    worst_eq = std::max(worst_eq, std::abs(verify_log_minkowski(s.body, l).gap));
  }
  double min_strict = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 100; ++i) {
    const ConvexBody k = random_cylinder(rng).body;
    min_strict = std::min(min_strict, verify_log_minkowski(k, random_symmetric_polytope(rng, 3, 20)).gap);
  }
  return {min_gap >= -1e-9 && worst_eq <= 1e-8 && min_strict > 1e-6,
          format("min gap %.2e over 500 pairs; relative pairs max |gap| %.2e; non-relative min gap %.2e", min_gap,
                 worst_eq, min_strict)};
}

// 7. One-dimensional base case.
Verdict one_dimensional() {
  Rng rng(707);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double a = rng.uniform(0.01, 100.0);
    const double b = rng.uniform(0.01, 100.0);
    const ConvexBody k = make_segment(a);
    const ConvexBody l = make_segment(b);
    const double expected = std::log(b / a);
    const double scale = std::max(1.0, std::abs(expected));
    worst = std::max({worst, std::abs(log_minkowski_lhs(k, l) - expected) / scale,
                      std::abs(log_minkowski_rhs(k, l) - expected) / scale});
  }
  const double eps = std::numeric_limits<double>::epsilon();
  return {worst <= 4 * eps, format("max deviation from log(b/a) %.2e (%.1f ulp) over 20 pairs", worst, worst / eps)};
}

// 8. Solver round trips, gradient, invariances and concentration.
Verdict solver_checks() {
  std::vector<std::string> failures;
  auto round_trip = [&](const char* name, const ConvexBody& k) {
    const SolverResult r = solve_extremum(ExtremumProblem(cone_volume_measure(k)));
    const bool ok = (r.status == SolverStatus::kConverged || r.status == SolverStatus::kDegenerateFamily) &&
                    r.stationarity_residual < 1e-6 && r.iterations <= 10000;
    if (!ok) failures.push_back(std::string(name) + " " + std::string(status_name(r.status)));
    return r.stationarity_residual;
  };
  const double res_octa = round_trip("octahedron", make_cross_polytope(3));
  const double res_hex = round_trip("hexagonal prism", make_prism(make_regular_polygon(6), 0.6));

  Rng rng(808);
  double fd_err = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 2;
    const SupportSamples base = samples_of(random_symmetric_wulff(rng, n, 7));
    const std::vector<Vec>& dirs = base.directions();
    std::vector<double> h = base.values();
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      if (!is_canonical(dirs[i])) continue;
      const double f = rng.uniform(0.9, 1.1);
      const double w = rng.uniform(0.2, 1.0);
      for (std::size_t j = 0; j < dirs.size(); ++j) {
        if (j == i || (dirs[j] + dirs[i]).norm() < 1e-12) {
          h[j] *= f;
          atoms.push_back({dirs[j], w});
        }
      }
    }
    const DiscreteMeasure mu(n, MeasureKind::kConeVolume, atoms);
    const std::vector<double> g = phi_gradient(mu, SupportSamples(n, dirs, h));
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      if (!is_canonical(dirs[i])) continue;
      std::size_t j = 0;
      while ((dirs[j] + dirs[i]).norm() >= 1e-12) ++j;
      auto at = [&](double s) {
        std::vector<double> v = h;
        v[i] *= std::exp(s);
        v[j] *= std::exp(s);
        return phi_objective(mu, SupportSamples(n, dirs, v));
      };
      const double fd = (at(1e-6) - at(-1e-6)) / 2e-6;
      fd_err = std::max(fd_err, std::abs(g[i] + g[j] - fd) / std::max(std::abs(fd), 1e-3));
    }
  }
  if (!(fd_err < 1e-5)) failures.push_back("finite differences");

  double drift = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const ConvexBody k = random_symmetric_polytope(rng, 2 + trial % 2, 12);
    const SupportSamples h = samples_of(k);
    const DiscreteMeasure mu = cone_volume_measure(random_symmetric_polytope(rng, k.dim(), 12));
    std::vector<Atom> atoms;
    for (const Vec& u : h.directions()) atoms.push_back({u, mu.total() * rng.uniform(0.1, 1.0)});
    const DiscreteMeasure target(k.dim(), MeasureKind::kConeVolume, DiscreteMeasure(k.dim(), MeasureKind::kConeVolume, atoms).symmetrized().atoms());
    const double phi = phi_objective(target, h);
    for (double c : {0.1, 1.0, 10.0}) {
      std::vector<double> v = h.values();
      for (double& x : v) x *= c;
      drift = std::max(drift, std::abs(phi_objective(target, SupportSamples(k.dim(), h.directions(), v)) - phi));
    }
  }
  if (!(drift < 1e-12)) failures.push_back("scale invariance");

  const DiscreteMeasure cube_mu = cone_volume_measure(make_box({1, 1, 1}));
  double flat = 0.0;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const double a = 0.5 * std::pow(4.0, i / 4.0);
      const double b = 0.5 * std::pow(4.0, j / 4.0);
      const double phi = phi_objective(cube_mu, samples_of(make_box({a, b, 1.0 / (a * b)})));
      flat = std::max(flat, std::abs(phi + std::numbers::ln2));
    }
  }
  if (!(flat < 1e-9)) failures.push_back("cube family");

  const ConcentrationReport cube_scc = subspace_concentration_check(cube_mu);
  const ConcentrationReport octa_scc = subspace_concentration_check(cone_volume_measure(make_cross_polytope(3)));
  std::size_t axis_lines = 0;
  for (const Subspace& xi : cube_scc.equality_subspaces) axis_lines += xi.dim() == 1;
  const bool scc_ok = cube_scc.verdict == Concentration::kEquality && axis_lines == 3 &&
                      std::abs(cube_scc.max_ratio - 1.0) < 1e-12 && octa_scc.verdict == Concentration::kStrict &&
                      std::abs(octa_scc.max_ratio - 0.75) < 1e-12;
  if (!scc_ok) failures.push_back("concentration verdicts");

  std::string detail = format(
      "residuals octa %.1e hex %.1e; fd rel err %.1e; scale drift %.1e; cube family %.1e; scc cube %s (%zu axes), "
      "octa %s (ratio %.3f)",
      res_octa, res_hex, fd_err, drift, flat, std::string(concentration_name(cube_scc.verdict)).c_str(), axis_lines,
      std::string(concentration_name(octa_scc.verdict)).c_str(), octa_scc.max_ratio);
  for (const std::string& f : failures) detail += "; failed: " + f;
  return {failures.empty(), detail};
}

// 9. Uniqueness dichotomy.
Verdict dichotomy() {
  Rng rng(909);
  int equal = 0;
  int relative = 0;
  double worst = 0.0;
  for (int i = 0; i < 30;) {
    const ConvexBody k = random_symmetric_polytope(rng, 3, 20);
    if (detect_cylinder(k)) continue;
    ++i;
    const RecoveryReport r = recover_and_compare(k);
    equal += r.outcome == RecoveryOutcome::kEqual;
    worst = std::max(worst, r.normalized_hausdorff);
  }
  for (int i = 0; i < 10; ++i) {
    relative += recover_and_compare(random_cylinder(rng).body).outcome == RecoveryOutcome::kRelativeCylinders;
  }
  return {equal == 30 && relative == 10,
          format("%d/30 non-cylinders equal (max normalized Hausdorff %.1e), %d/10 cylinders relative", equal, worst,
                 relative)};
}

// 10. Log combination of parallel boxes.
Verdict box_log_combination() {
  Rng rng(1010);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    std::vector<double> a(3), b(3);
    for (double& x : a) x = rng.uniform(0.3, 3.0);
    for (double& x : b) x = rng.uniform(0.3, 3.0);
    for (double lambda : {0.25, 0.5, 0.75}) {
      std::vector<double> g(3);
      for (int k = 0; k < 3; ++k) g[k] = std::pow(a[k], 1 - lambda) * std::pow(b[k], lambda);
      const Combination c = log_combination(make_box(a), make_box(b), lambda);
      worst = std::max(worst, hausdorff_distance(c.body, make_box(g)));
    }
  }
  return {worst < 1e-6, format("max Hausdorff to the geometric-mean box %.2e over 60 combinations", worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"cone-volume totals", cone_volume_totals},
      {"product decomposition", decomposition},
      {"cylinder cone-volume formula", cylinder_formula},
      {"GL invariance", gl_invariance},
      {"planar inequality", planar_theorem},
      {"cylinder inequality in R^3", cylinder_theorem},
      {"one-dimensional identity", one_dimensional},
      {"extremum solver", solver_checks},
      {"uniqueness dichotomy", dichotomy},
      {"log combination of boxes", box_log_combination},
  };
  const std::array<double, 10> budget = {10, 0, 0, 0, 0, 60, 0, 0, 0, 0};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v = criteria[i].second();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget[i] > 0 && secs >= budget[i]) {
      v.pass = false;
      v.detail += format("; over the %.0f s budget", budget[i]);
    }
    failed += !v.pass;
    std::printf("%s %2zu %s: %s (%.2f s)\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.c_str(),
                secs);
    std::fflush(stdout);
  }
  return failed;
}
