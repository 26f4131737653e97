// Command-line front end. Artifacts go to stdout (or --output); errors go to
// stderr as {"error": name, "message": ...} with exit code 2. A violated
// inequality in a proven regime exits with 3.

#include "logmink/combination.hpp"
#include "logmink/cylinder.hpp"
#include "logmink/error.hpp"
#include "logmink/inequality.hpp"
#include "logmink/io.hpp"
#include "logmink/measures.hpp"
#include "logmink/random.hpp"
#include "logmink/solver.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace logmink;

constexpr int kExitError = 2;

LinearMap parse_matrix(const std::string& text, int dim) {
  std::string s = text;
  for (char& c : s) {
    if (c == ',' || c == ';' || c == '[' || c == ']') c = ' ';
  }
  std::istringstream in(s);
  std::vector<double> v;
  for (double x; in >> x;) v.push_back(x);
  if (!in.eof() || static_cast<int>(v.size()) != dim * dim) {
    throw GeometryError(ErrorCode::kInvalidInput,
                        "matrix needs " + std::to_string(dim * dim) + " numbers in row-major order");
  }
  Mat m = Mat::Identity();
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) m(i, j) = v[static_cast<std::size_t>(i * dim + j)];
  }
  return LinearMap(dim, m);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Pair {
  ConvexBody k;
  ConvexBody l;
};

Pair sweep_instance(const std::string& family, Rng& rng, int points) {
  if (family == "planar-random") {
    ConvexBody k = random_symmetric_polytope(rng, 2, points);
    return {std::move(k), random_symmetric_polytope(rng, 2, points)};
  }
  if (family == "cylinder3d-random") {
    ConvexBody k = random_cylinder(rng).body;
    return {std::move(k), random_symmetric_polytope(rng, 3, points)};
  }
  if (family == "boxes") {
    std::vector<double> a(3), b(3);
    for (double& x : a) x = rng.uniform(0.3, 3.0);
    for (double& x : b) x = rng.uniform(0.3, 3.0);
    return {make_box(a), make_box(b)};
  }
  if (family == "prisms") {
    const CylinderSample s = random_cylinder(rng);
    const double c_base = rng.uniform(0.3, 3.0);
    const double c_height = rng.uniform(0.3, 3.0);
    return {s.body, s.relative(c_base, c_height)};
  }
  throw GeometryError(ErrorCode::kInvalidInput,
                      "unknown family " + family + " (planar-random, cylinder3d-random, boxes, prisms)");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw GeometryError(ErrorCode::kInvalidInput, "cannot write " + path);
  out << text;
}

void fail(ErrorCode code, const std::string& message) {
  std::cerr << error_to_json(code, message).dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Support functions, cone-volume measures and the log-Minkowski inequality for symmetric polytopes"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output;
  std::uint64_t seed = 42;
  app.add_option("-o,--output", output, "Write the artifact here instead of stdout");
  app.add_option("--seed", seed, "RNG seed (LOGMINK_SEED overrides)");

  auto* wulff = app.add_subcommand("wulff", "Wulff shape of a halfspace file");
  std::string wulff_in;
  wulff->add_option("halfspaces", wulff_in, "Body JSON with halfspaces")->required();

  auto* verify = app.add_subcommand("verify", "Check the log-Minkowski inequality for K, L");
  std::string k_path, l_path;
  double verify_tol = 1e-9;
  verify->add_option("K", k_path)->required();
  verify->add_option("L", l_path)->required();
  verify->add_option("--tol", verify_tol, "Gap tolerance")->check(CLI::NonNegativeNumber);

  auto* sweep = app.add_subcommand("sweep", "CSV of gaps over a random family");
  std::string family;
  int count = 100;
  int points = 20;
  double sweep_tol = 1e-9;
  sweep->add_option("--family", family, "planar-random | cylinder3d-random | boxes | prisms")->required();
  sweep->add_option("--count", count, "Number of instances")->check(CLI::PositiveNumber);
  sweep->add_option("--points", points, "Sphere points per random polytope")->check(CLI::Range(3, 1000));
  sweep->add_option("--tol", sweep_tol, "Gap tolerance")->check(CLI::NonNegativeNumber);

  auto* solve = app.add_subcommand("solve", "Recover a body from a cone-volume measure");
  std::string measure_path;
  SolverOptions options;
  solve->add_option("--measure,measure", measure_path, "Measure JSON")->required();
  solve->add_option("--iters", options.max_iters, "Iteration cap")->check(CLI::PositiveNumber);
  solve->add_option("--gtol", options.grad_tol, "Gradient norm tolerance")->check(CLI::PositiveNumber);
  solve->add_option("--enrich", options.enrich, "Extra quasi-uniform direction pairs");

  auto* measure = app.add_subcommand("measure", "Surface area or cone-volume measure of a body");
  std::string body_path;
  std::string kind = "cone-volume";
  measure->add_option("body", body_path)->required();
  measure->add_option("--kind", kind)->check(CLI::IsMember({"cone-volume", "surface"}));

  auto* transform = app.add_subcommand("transform", "Apply a linear map to a body and its surface measure");
  std::string matrix;
  transform->add_option("body", body_path)->required();
  transform->add_option("--matrix", matrix, "n*n entries, row-major")->required();

  auto* detect = app.add_subcommand("detect", "Cylinder split of a body");
  std::string pre_transform;
  detect->add_option("body", body_path)->required();
  detect->add_option("--pre-transform", pre_transform, "Map applied before detection (n*n, row-major)");

  auto* combine = app.add_subcommand("combine", "L_p or logarithmic Minkowski combination");
  double p = 1.0;
  double lambda = 0.5;
  combine->add_option("K", k_path)->required();
  combine->add_option("L", l_path)->required();
  combine->add_option("--p", p, "p > 0, or 0 for the logarithmic combination");
  combine->add_option("--lambda", lambda, "Weight of L in (0, 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    fail(ErrorCode::kInvalidInput, e.what());
    return kExitError;
  }

  try {
    if (const char* env = std::getenv("LOGMINK_SEED")) {
      try {
        std::size_t used = 0;
        seed = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
      } catch (const std::exception&) {
        throw GeometryError(ErrorCode::kInvalidInput, std::string("LOGMINK_SEED is not an integer: ") + env);
      }
    }

    int code = 0;
    Json doc;
    if (wulff->parsed()) {
      doc = body_to_json(body_from_json(read_json_file(wulff_in)));
    } else if (verify->parsed()) {
      const VerifyReport r = verify_log_minkowski(body_from_json(read_json_file(k_path)),
                                                  body_from_json(read_json_file(l_path)), verify_tol);
      doc = verify_report_to_json(r);
      code = verify_exit_code(r);
    } else if (sweep->parsed()) {
      std::string csv = "seed,VK,VL,lhs,rhs,gap,class\n";
      for (int i = 0; i < count; ++i) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        Rng rng(s);
        const Pair pair = sweep_instance(family, rng, points);
        const VerifyReport r = verify_log_minkowski(pair.k, pair.l, sweep_tol);
        code = std::max(code, verify_exit_code(r));
        csv += std::to_string(s) + "," + fmt(pair.k.volume()) + "," + fmt(pair.l.volume()) + "," + fmt(r.lhs) +
               "," + fmt(r.rhs) + "," + fmt(r.gap) + "," + std::string(verify_class_name(r.equality_class)) +
               "\n";
      }
      emit(csv, output);
      return code;
    } else if (solve->parsed()) {
      const LoadedMeasure m = measure_from_json(read_json_file(measure_path));
      if (m.warned) {
        std::cerr << "warning: measure asymmetry " << m.asymmetry << " exceeds 1e-6; symmetrized\n";
      }
      const ExtremumProblem problem(m.measure, options);
      doc = solver_result_to_json(solve_extremum(problem), problem);
    } else if (measure->parsed()) {
      const ConvexBody k = body_from_json(read_json_file(body_path));
      const DiscreteMeasure mu = kind == "surface" ? surface_area_measure(k) : cone_volume_measure(k);
      doc = measure_to_json(mu);
      if (kind == "cone-volume") doc["scc"] = concentration_to_json(subspace_concentration_check(mu));
    } else if (transform->parsed()) {
      const ConvexBody k = body_from_json(read_json_file(body_path));
      const LinearMap t = parse_matrix(matrix, k.dim());
      const ConvexBody tk = apply_linear_map(k, t);
      const DiscreteMeasure moved = transform_surface_measure(surface_area_measure(k), t);
      const MeasureComparison cmp = measures_equal(moved, surface_area_measure(tk));
      Json body = body_to_json(tk);
      body.erase("schema");
      Json mu = measure_to_json(moved);
      mu.erase("schema");
      doc = {{"schema", kSchemaVersion},
             {"body", body},
             {"surface_measure", mu},
             {"consistency", {{"equal", cmp.equal}, {"max_deviation", cmp.max_deviation}}}};
    } else if (detect->parsed()) {
      ConvexBody k = body_from_json(read_json_file(body_path));
      if (!pre_transform.empty()) k = apply_linear_map(k, parse_matrix(pre_transform, k.dim()));
      doc = split_to_json(detect_cylinder(k));
      if (!pre_transform.empty()) doc["pre_transform"] = pre_transform;
    } else if (combine->parsed()) {
      const ConvexBody k = body_from_json(read_json_file(k_path));
      const ConvexBody l = body_from_json(read_json_file(l_path));
      const Combination c = logmink::combine(k, l, {lambda, p});
      doc = body_to_json(c.body);
      doc["approximate"] = c.approximate;
      doc["sample_count"] = c.sample_count;
      doc["p"] = p;
      doc["lambda"] = lambda;
    }
    emit(doc.dump(2) + "\n", output);
    return code;
  } catch (const GeometryError& e) {
    fail(e.code(), e.what());
  } catch (const std::exception& e) {
    fail(ErrorCode::kInvalidInput, e.what());
  }
  return kExitError;
}
