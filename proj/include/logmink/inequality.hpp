#pragma once

// The logarithmic Minkowski functional, its verifier, and the equality cases.

#include "logmink/geometry.hpp"

#include <string_view>

namespace logmink {

/// (1/V(K)) sum over facets of K of V_K(u) log(h_L(u) / h_K(u)). Exact for
/// polytopes. Throws DimensionMismatch, NonpositiveSupport.
double log_minkowski_lhs(const ConvexBody& k, const ConvexBody& l);

/// (1/n) log(V(L) / V(K)).
double log_minkowski_rhs(const ConvexBody& k, const ConvexBody& l);

enum class EqualityCase { kNone, kDilatates, kRelativeCylinders };
std::string_view equality_case_name(EqualityCase c);

/// L = cK for c = (V(L)/V(K))^(1/n), up to Hausdorff distance
/// tol * circumradius(L).
bool are_dilatates(const ConvexBody& k, const ConvexBody& l, double tol = 1e-8);

/// Dilatates, or relative cylinders: finest splits of K and L over the same
/// subspaces with pairwise dilatate factors.
EqualityCase classify_equality(const ConvexBody& k, const ConvexBody& l, double tol = 1e-8);

enum class VerifyClass { kDilatates, kRelativeCylinders, kStrict, kNumericalTie, kViolated };
std::string_view verify_class_name(VerifyClass c);

struct VerifyReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  double tol = 0.0;
  VerifyClass equality_class = VerifyClass::kStrict;
  /// Inputs outside the proven range (n = 3 with K not a cylinder).
  bool conjectural = false;

  /// False only for a negative gap beyond tol in a proven regime.
  bool passed() const { return conjectural || equality_class != VerifyClass::kViolated; }
};

VerifyReport verify_log_minkowski(const ConvexBody& k, const ConvexBody& l, double tol = 1e-9);

}  // namespace logmink
