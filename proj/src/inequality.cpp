#include "logmink/inequality.hpp"

#include "logmink/cylinder.hpp"
#include "logmink/error.hpp"

#include <cmath>

namespace logmink {

std::string_view equality_case_name(EqualityCase c) {
  switch (c) {
    case EqualityCase::kNone: return "none";
    case EqualityCase::kDilatates: return "dilatates";
    case EqualityCase::kRelativeCylinders: return "relative_cylinders";
  }
  return "none";
}

std::string_view verify_class_name(VerifyClass c) {
  switch (c) {
    case VerifyClass::kDilatates: return "dilatates";
    case VerifyClass::kRelativeCylinders: return "relative_cylinders";
    case VerifyClass::kStrict: return "strict";
    case VerifyClass::kNumericalTie: return "numerical_tie";
    case VerifyClass::kViolated: return "violated";
  }
  return "strict";
}

double log_minkowski_lhs(const ConvexBody& k, const ConvexBody& l) {
  if (k.dim() != l.dim()) throw GeometryError(ErrorCode::kDimensionMismatch, "bodies differ in dimension");
  double sum = 0.0;
  for (const Facet& f : k.facets()) {
    const double hl = l.support(f.normal);
    if (!(hl > 0.0)) {
      throw GeometryError(ErrorCode::kNonpositiveSupport, "h_L is not positive on a facet normal of K");
    }
    sum += f.support * f.area / k.dim() * std::log(hl / f.support);
  }
  return sum / k.volume();
}

double log_minkowski_rhs(const ConvexBody& k, const ConvexBody& l) {
  if (k.dim() != l.dim()) throw GeometryError(ErrorCode::kDimensionMismatch, "bodies differ in dimension");
  return std::log(l.volume() / k.volume()) / k.dim();
}

bool are_dilatates(const ConvexBody& k, const ConvexBody& l, double tol) {
  if (k.dim() != l.dim()) return false;
  if (k.dim() == 1) return true;
  const double c = std::pow(l.volume() / k.volume(), 1.0 / k.dim());
  return hausdorff_distance(k.scaled(c), l) <= tol * l.circumradius();
}

EqualityCase classify_equality(const ConvexBody& k, const ConvexBody& l, double tol) {
  if (k.dim() != l.dim()) return EqualityCase::kNone;
  if (are_dilatates(k, l, tol)) return EqualityCase::kDilatates;
  const auto sk = detect_cylinder(k);
  const auto sl = detect_cylinder(l);
  if (!sk || !sl || sk->factors.size() != sl->factors.size()) return EqualityCase::kNone;
  std::vector<bool> used(sl->factors.size(), false);
  for (const EmbeddedBody& a : sk->factors) {
    bool matched = false;
    for (std::size_t j = 0; j < sl->factors.size() && !matched; ++j) {
      const EmbeddedBody& b = sl->factors[j];
      if (used[j] || a.space.dim() != b.space.dim() || !a.space.same_as(b.space)) continue;
      if (!are_dilatates(a.body, b.body, tol)) return EqualityCase::kNone;
      used[j] = matched = true;
    }
    if (!matched) return EqualityCase::kNone;
  }
  return EqualityCase::kRelativeCylinders;
}

VerifyReport verify_log_minkowski(const ConvexBody& k, const ConvexBody& l, double tol) {
  VerifyReport r;
  r.lhs = log_minkowski_lhs(k, l);
  r.rhs = log_minkowski_rhs(k, l);
  r.gap = r.lhs - r.rhs;
  r.tol = tol;
  r.conjectural = k.dim() == 3 && !detect_cylinder(k);
  if (r.gap > tol) {
    r.equality_class = VerifyClass::kStrict;
  } else if (r.gap < -tol) {
    r.equality_class = VerifyClass::kViolated;
  } else {
    switch (classify_equality(k, l)) {
      case EqualityCase::kDilatates: r.equality_class = VerifyClass::kDilatates; break;
      case EqualityCase::kRelativeCylinders: r.equality_class = VerifyClass::kRelativeCylinders; break;
      case EqualityCase::kNone: r.equality_class = VerifyClass::kNumericalTie; break;
    }
  }
  return r;
}

}  // namespace logmink
