#include "logmink/io.hpp"

#include "logmink/error.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace logmink {

namespace {

GeometryError bad(const std::string& what) { return GeometryError(ErrorCode::kInvalidInput, what); }

int dim_of(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) throw bad("missing integer \"dim\"");
  const int n = j["dim"].get<int>();
  if (n < 1 || n > kMaxDim) throw bad("\"dim\" must be 1, 2 or 3");
  return n;
}

Vec vec_from_json(const Json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw bad("expected an array of " + std::to_string(n) + " numbers");
  }
  Vec v = Vec::Zero();
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_number()) throw bad("coordinate is not a number");
    v[i] = j[i].get<double>();
    if (!std::isfinite(v[i])) throw bad("coordinate is not finite");
  }
  return v;
}

double number_from_json(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number()) {
    throw bad(std::string("missing number \"") + key + "\"");
  }
  return j[key].get<double>();
}

const Json& array_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw bad(std::string("missing array \"") + key + "\"");
  return j[key];
}

Json vec_to_json(const Vec& v, int n) {
  Json a = Json::array();
  for (int i = 0; i < n; ++i) a.push_back(v[i]);
  return a;
}

Json subspace_to_json(const Subspace& xi) {
  Json basis = Json::array();
  for (const Vec& b : xi.basis()) basis.push_back(vec_to_json(b, xi.ambient_dim()));
  return {{"dim", xi.dim()}, {"basis", basis}};
}

}  // namespace

ConvexBody body_from_json(const Json& j) {
  const int n = dim_of(j);
  if (j.contains("vertices")) {
    std::vector<Vec> pts;
    for (const Json& p : array_field(j, "vertices")) pts.push_back(vec_from_json(p, n));
    return ConvexBody::from_points(n, std::move(pts));
  }
  if (j.contains("halfspaces")) {
    std::vector<Vec> dirs;
    std::vector<double> values;
    for (const Json& h : array_field(j, "halfspaces")) {
      if (!h.is_object() || !h.contains("normal")) throw bad("halfspace without \"normal\"");
      const Vec u = vec_from_json(h["normal"], n);
      const double len = u.norm();
      if (!(len > 0.0)) throw bad("zero halfspace normal");
      dirs.push_back(u / len);
      values.push_back(number_from_json(h, "support") / len);
    }
    return wulff_shape(SupportSamples(n, dirs, values));
  }
  throw bad("body needs \"vertices\" or \"halfspaces\"");
}

Json body_to_json(const ConvexBody& k) {
  const int n = k.dim();
  Json verts = Json::array();
  for (const Vec& v : k.vertices()) verts.push_back(vec_to_json(v, n));
  Json facets = Json::array();
  for (const Facet& f : k.facets()) {
    facets.push_back({{"normal", vec_to_json(f.normal, n)}, {"support", f.support}, {"area", f.area}});
  }
  return {{"schema", kSchemaVersion}, {"dim", n}, {"volume", k.volume()}, {"vertices", verts}, {"facets", facets}};
}

LoadedMeasure measure_from_json(const Json& j) {
  const int n = dim_of(j);
  const MeasureKind kind =
      j.contains("kind") && j["kind"].is_string() ? parse_kind(j["kind"].get<std::string>()) : MeasureKind::kGeneric;
  std::vector<Atom> atoms;
  for (const Json& a : array_field(j, "atoms")) {
    if (!a.is_object() || !a.contains("u")) throw bad("atom without \"u\"");
    const Vec u = vec_from_json(a["u"], n);
    if (!(u.norm() > 0.0)) throw bad("zero atom direction");
    atoms.push_back({u / u.norm(), number_from_json(a, "w")});
  }
  const DiscreteMeasure raw(n, kind, std::move(atoms));
  const double asym = raw.asymmetry();
  return {raw.symmetrized(), asym, asym > 1e-6};
}

Json measure_to_json(const DiscreteMeasure& mu) {
  Json atoms = Json::array();
  for (const Atom& a : mu.atoms()) atoms.push_back({{"u", vec_to_json(a.direction, mu.dim())}, {"w", a.weight}});
  return {{"schema", kSchemaVersion},
          {"dim", mu.dim()},
          {"kind", std::string(kind_name(mu.kind()))},
          {"total", mu.total()},
          {"atoms", atoms}};
}

Json concentration_to_json(const ConcentrationReport& r) {
  Json eq = Json::array();
  for (const Subspace& xi : r.equality_subspaces) eq.push_back(subspace_to_json(xi));
  Json viol = Json::array();
  for (const Subspace& xi : r.violating_subspaces) viol.push_back(subspace_to_json(xi));
  return {{"verdict", std::string(concentration_name(r.verdict))},
          {"max_ratio", r.max_ratio},
          {"equality_subspaces", eq},
          {"violating_subspaces", viol}};
}

Json verify_report_to_json(const VerifyReport& r) {
  return {{"schema", kSchemaVersion},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"gap", r.gap},
          {"class", std::string(verify_class_name(r.equality_class))},
          {"conjectural", r.conjectural},
          {"tol", r.tol}};
}

int verify_exit_code(const VerifyReport& r) { return r.passed() ? 0 : 3; }

Json solver_result_to_json(const SolverResult& r, const ExtremumProblem& problem) {
  const int n = problem.dim();
  Json support = Json::array();
  for (std::size_t i = 0; i < r.support.size(); ++i) {
    support.push_back({{"u", vec_to_json(problem.directions()[i], n)}, {"h", r.support[i]}});
  }
  Json trace = Json::array();
  for (const TracePoint& p : r.trace) {
    trace.push_back({{"iteration", p.iteration}, {"phi", p.phi}, {"grad_norm", p.grad_norm}});
  }
  Json body = body_to_json(r.body);
  body.erase("schema");
  return {{"schema", kSchemaVersion},
          {"status", std::string(status_name(r.status))},
          {"phi", r.phi},
          {"grad_norm", r.grad_norm},
          {"stationarity_residual", r.stationarity_residual},
          {"iterations", r.iterations},
          {"scc", concentration_to_json(r.scc)},
          {"body", body},
          {"support", support},
          {"trace", trace}};
}

Json split_to_json(const std::optional<CylinderSplit>& split) {
  Json out = {{"schema", kSchemaVersion}, {"cylinder", split.has_value()}};
  Json factors = Json::array();
  if (split) {
    for (const EmbeddedBody& f : split->factors) {
      const int ambient = f.space.ambient_dim();
      Json local = Json::array();
      for (const Vec& v : f.body.vertices()) local.push_back(vec_to_json(v, f.body.dim()));
      Json embedded = Json::array();
      for (const Vec& v : f.embedded().points) embedded.push_back(vec_to_json(v, ambient));
      Json factor = subspace_to_json(f.space);
      factor["vertices"] = local;
      factor["embedded_vertices"] = embedded;
      factor["volume"] = f.body.volume();
      factors.push_back(factor);
    }
  }
  out["factors"] = factors;
  return out;
}

Json error_to_json(ErrorCode code, const std::string& message) {
  return {{"schema", kSchemaVersion}, {"error", std::string(error_name(code))}, {"message", message}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bad("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw bad(path + ": " + e.what());
  }
}

}  // namespace logmink
