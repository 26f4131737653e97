#include "logmink/measures.hpp"

#include "logmink/direction.hpp"
#include "logmink/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace logmink {

std::string_view kind_name(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::kSurface: return "surface";
    case MeasureKind::kConeVolume: return "cone-volume";
    case MeasureKind::kGeneric: return "generic";
  }
  return "generic";
}

MeasureKind parse_kind(std::string_view name) {
  if (name == "surface") return MeasureKind::kSurface;
  if (name == "cone-volume") return MeasureKind::kConeVolume;
  if (name == "generic") return MeasureKind::kGeneric;
  throw GeometryError(ErrorCode::kInvalidInput, "unknown measure kind: " + std::string(name));
}

std::string_view concentration_name(Concentration c) {
  switch (c) {
    case Concentration::kStrict: return "strict";
    case Concentration::kEquality: return "equality";
    case Concentration::kViolated: return "violated";
  }
  return "strict";
}

DiscreteMeasure::DiscreteMeasure(int dim, MeasureKind kind, std::vector<Atom> atoms)
    : dim_(dim), kind_(kind) {
  if (dim < 1 || dim > kMaxDim) throw GeometryError(ErrorCode::kInvalidInput, "bad dimension");
  DirectionIndex index;
  double total = 0.0;
  for (const Atom& a : atoms) {
    if (!(a.weight >= 0.0) || !std::isfinite(a.weight)) {
      throw GeometryError(ErrorCode::kInvalidInput, "atom weights must be nonnegative");
    }
    for (int i = dim; i < kMaxDim; ++i) {
      if (std::abs(a.direction[i]) > 1e-12) {
        throw GeometryError(ErrorCode::kInvalidInput, "atom direction outside R^n");
      }
    }
    const Vec u = unit(a.direction);
    const std::size_t k = index.insert(u);
    if (k == atoms_.size()) {
      atoms_.push_back({u, a.weight});
    } else {
      atoms_[k].weight += a.weight;
    }
    total += a.weight;
  }
  std::erase_if(atoms_, [&](const Atom& a) { return a.weight < 1e-12 * total || a.weight == 0.0; });
}

double DiscreteMeasure::total() const {
  double t = 0.0;
  for (const Atom& a : atoms_) t += a.weight;
  return t;
}

double DiscreteMeasure::weight_at(const Vec& u, double tol) const {
  for (const Atom& a : atoms_) {
    if (same_direction(a.direction, u, tol)) return a.weight;
  }
  return 0.0;
}

DiscreteMeasure DiscreteMeasure::normalized() const {
  const double t = total();
  if (!(t > 0.0)) throw GeometryError(ErrorCode::kInvalidInput, "measure has zero mass");
  return scaled(1.0 / t);
}

DiscreteMeasure DiscreteMeasure::scaled(double c) const {
  std::vector<Atom> a = atoms_;
  for (Atom& x : a) x.weight *= c;
  return DiscreteMeasure(dim_, kind_, std::move(a));
}

double DiscreteMeasure::asymmetry() const {
  const double t = total();
  if (!(t > 0.0)) return 0.0;
  double worst = 0.0;
  for (const Atom& a : atoms_) {
    worst = std::max(worst, std::abs(a.weight - weight_at(-a.direction)) / t);
  }
  return worst;
}

bool DiscreteMeasure::is_even(double rel_tol) const { return asymmetry() <= rel_tol; }

DiscreteMeasure DiscreteMeasure::symmetrized() const {
  std::vector<Atom> a;
  a.reserve(2 * atoms_.size());
  for (const Atom& x : atoms_) {
    a.push_back({x.direction, 0.5 * x.weight});
    a.push_back({-x.direction, 0.5 * x.weight});
  }
  return DiscreteMeasure(dim_, kind_, std::move(a));
}

DiscreteMeasure surface_area_measure(const ConvexBody& k) {
  std::vector<Atom> atoms;
  atoms.reserve(k.facets().size());
  for (const Facet& f : k.facets()) atoms.push_back({f.normal, f.area});
  return DiscreteMeasure(k.dim(), MeasureKind::kSurface, std::move(atoms));
}

DiscreteMeasure cone_volume_measure(const ConvexBody& k) {
  std::vector<Atom> atoms;
  atoms.reserve(k.facets().size());
  for (const Facet& f : k.facets()) atoms.push_back({f.normal, f.support * f.area / k.dim()});
  return DiscreteMeasure(k.dim(), MeasureKind::kConeVolume, std::move(atoms));
}

DiscreteMeasure transform_surface_measure(const DiscreteMeasure& s, const LinearMap& t) {
  if (t.dim() != s.dim()) throw GeometryError(ErrorCode::kDimensionMismatch, "map/measure dimension");
  const Mat tit = t.transpose_inverse();
  const double det = std::abs(t.det());
  std::vector<Atom> atoms;
  atoms.reserve(s.size());
  for (const Atom& a : s.atoms()) {
    const Vec w = tit * a.direction;
    atoms.push_back({w.normalized(), det * w.norm() * a.weight});
  }
  return DiscreteMeasure(s.dim(), s.kind(), std::move(atoms));
}

DiscreteMeasure transform_cone_volume_measure(const DiscreteMeasure& v, const LinearMap& t) {
  if (t.dim() != v.dim()) throw GeometryError(ErrorCode::kDimensionMismatch, "map/measure dimension");
  const Mat tit = t.transpose_inverse();
  const double det = std::abs(t.det());
  std::vector<Atom> atoms;
  atoms.reserve(v.size());
  for (const Atom& a : v.atoms()) atoms.push_back({(tit * a.direction).normalized(), det * a.weight});
  return DiscreteMeasure(v.dim(), v.kind(), std::move(atoms));
}

DiscreteMeasure product_cone_volume(const EmbeddedBody& k1, const EmbeddedBody& k2) {
  const int n = k1.space.ambient_dim();
  if (k2.space.ambient_dim() != n || k1.space.dim() + k2.space.dim() != n) {
    throw GeometryError(ErrorCode::kSubspaceNotComplementary, "subspace dimensions do not add up");
  }
  for (const Vec& a : k1.space.basis()) {
    for (const Vec& b : k2.space.basis()) {
      if (std::abs(a.dot(b)) > 1e-9) {
        throw GeometryError(ErrorCode::kSubspaceNotComplementary, "subspaces are not orthogonal");
      }
    }
  }
  if (k1.body.dim() != k1.space.dim() || k2.body.dim() != k2.space.dim()) {
    throw GeometryError(ErrorCode::kDimensionMismatch, "factor body does not fill its subspace");
  }
  std::vector<Atom> atoms;
  auto add = [&](const EmbeddedBody& own, double coeff) {
    const DiscreteMeasure own_measure = cone_volume_measure(own.body);
    for (const Atom& a : own_measure.atoms()) {
      atoms.push_back({own.space.embed(a.direction), coeff * a.weight});
    }
  };
  add(k1, static_cast<double>(k1.space.dim()) / n * k2.body.volume());
  add(k2, static_cast<double>(k2.space.dim()) / n * k1.body.volume());
  return DiscreteMeasure(n, MeasureKind::kConeVolume, std::move(atoms));
}

MeasureComparison measures_equal(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double tol) {
  MeasureComparison out;
  if (mu.dim() != nu.dim()) return out;
  constexpr double kAlign = 1e-7;
  std::vector<bool> used(nu.size(), false);
  for (const Atom& a : mu.atoms()) {
    std::size_t best = nu.size();
    double best_d = kAlign;
    for (std::size_t j = 0; j < nu.size(); ++j) {
      const double d = (nu.atoms()[j].direction - a.direction).norm();
      if (!used[j] && d < best_d) {
        best = j;
        best_d = d;
      }
    }
    if (best == nu.size()) {
      ++out.unmatched;
      out.unmatched_weight = std::max(out.unmatched_weight, a.weight);
      continue;
    }
    used[best] = true;
    out.max_deviation = std::max(
        out.max_deviation, std::abs(a.weight - nu.atoms()[best].weight) / (1.0 + a.weight));
  }
  for (std::size_t j = 0; j < nu.size(); ++j) {
    if (used[j]) continue;
    ++out.unmatched;
    out.unmatched_weight = std::max(out.unmatched_weight, nu.atoms()[j].weight);
  }
  out.equal = out.max_deviation <= tol && out.unmatched_weight <= tol;
  return out;
}

ConcentrationReport subspace_concentration_check(const DiscreteMeasure& mu, double rel_tol) {
  ConcentrationReport out;
  const int n = mu.dim();
  const double total = mu.total();
  if (!(total > 0.0)) throw GeometryError(ErrorCode::kInvalidInput, "measure has zero mass");
  if (n == 1) return out;

  // Antipodal atoms always lie in the same subspaces; fold them together.
  DirectionIndex lines;
  std::vector<double> w;
  for (const Atom& a : mu.atoms()) {
    const std::size_t k = lines.insert(canonical(a.direction));
    if (k == w.size()) w.push_back(0.0);
    w[k] += a.weight;
  }
  const std::vector<Vec>& d = lines.directions();
  const double tol = rel_tol * total;

  auto judge = [&](const Subspace& xi, double mass) {
    const double bound = static_cast<double>(xi.dim()) / n * total;
    out.max_ratio = std::max(out.max_ratio, mass / bound);
    if (mass > bound + tol) {
      out.violating_subspaces.push_back(xi);
    } else if (mass >= bound - tol) {
      out.equality_subspaces.push_back(xi);
    }
  };

  for (std::size_t i = 0; i < d.size(); ++i) judge(Subspace::line(n, d[i]), w[i]);
  if (n == 3) {
    DirectionIndex planes;
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        const Vec c = d[i].cross(d[j]);
        if (c.norm() < 1e-9) continue;
        const Vec normal = canonical(c.normalized());
        if (planes.find(normal)) continue;
        planes.insert(normal);
        double mass = 0.0;
        for (std::size_t k = 0; k < d.size(); ++k) {
          if (std::abs(d[k].dot(normal)) <= kDirectionTol) mass += w[k];
        }
        judge(Subspace(3, {d[i], d[j]}), mass);
      }
    }
  }
  if (!out.violating_subspaces.empty()) {
    out.verdict = Concentration::kViolated;
  } else if (!out.equality_subspaces.empty()) {
    out.verdict = Concentration::kEquality;
  }
  return out;
}

}  // namespace logmink
