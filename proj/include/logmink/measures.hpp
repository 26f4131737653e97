#pragma once

// Discrete measures on the unit sphere: surface area and cone-volume measures
// of polytopes, their behaviour under linear maps, and subspace
// concentration.

#include "logmink/direction.hpp"
#include "logmink/geometry.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace logmink {

enum class MeasureKind { kSurface, kConeVolume, kGeneric };

std::string_view kind_name(MeasureKind kind);
/// Parses "surface" | "cone-volume" | "generic"; throws InvalidInput.
MeasureKind parse_kind(std::string_view name);

struct Atom {
  Vec direction;  ///< unit vector
  double weight = 0.0;
};

/// Finite Borel measure on S^{n-1}. Construction merges atoms whose
/// directions agree to 1e-9 and drops weights below 1e-12 of the total.
class DiscreteMeasure {
 public:
  DiscreteMeasure(int dim, MeasureKind kind, std::vector<Atom> atoms);

  int dim() const { return dim_; }
  MeasureKind kind() const { return kind_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  double total() const;

  /// Weight of the atom at `u` (0 if absent).
  double weight_at(const Vec& u, double tol = kDirectionTol) const;

  DiscreteMeasure normalized() const;
  DiscreteMeasure scaled(double c) const;

  bool is_even(double rel_tol = 1e-9) const;
  /// Largest |w(u) - w(-u)| relative to the total.
  double asymmetry() const;
  /// (mu + mu(-.)) / 2.
  DiscreteMeasure symmetrized() const;

 private:
  int dim_;
  MeasureKind kind_;
  std::vector<Atom> atoms_;
};

/// One atom (normal, area) per facet.
DiscreteMeasure surface_area_measure(const ConvexBody& k);

/// One atom (normal, support * area / n) per facet; total mass V(K).
DiscreteMeasure cone_volume_measure(const ConvexBody& k);

/// Surface area measure of TK from that of K: each atom (u, a) moves to
/// (<T^{-t}u>, |det T| |T^{-t}u| a); coinciding images are merged.
DiscreteMeasure transform_surface_measure(const DiscreteMeasure& s, const LinearMap& t);

/// Cone-volume measure of TK from that of K: atoms move to <T^{-t}u> and
/// every weight scales by |det T|.
DiscreteMeasure transform_cone_volume_measure(const DiscreteMeasure& v, const LinearMap& t);

/// Cone-volume measure of K1 + K2 for bodies in orthogonal complementary
/// subspaces: (k1/n)|K2| V_{K1} + (k2/n)|K1| V_{K2}. Throws
/// SubspaceNotComplementary.
DiscreteMeasure product_cone_volume(const EmbeddedBody& k1, const EmbeddedBody& k2);

struct MeasureComparison {
  bool equal = false;
  double max_deviation = 0.0;     ///< max |mu_i - nu_i| / (1 + mu_i) over matched atoms
  double unmatched_weight = 0.0;  ///< largest weight without a partner
  std::size_t unmatched = 0;
};

/// Atoms are aligned when their directions differ by less than 1e-7.
MeasureComparison measures_equal(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                                 double tol = 1e-7);

enum class Concentration { kStrict, kEquality, kViolated };
std::string_view concentration_name(Concentration c);

struct ConcentrationReport {
  Concentration verdict = Concentration::kStrict;
  std::vector<Subspace> equality_subspaces;
  std::vector<Subspace> violating_subspaces;
  /// max over candidate subspaces of mu(xi) / ((dim xi / n) mu(S^{n-1})).
  double max_ratio = 0.0;
};

/// Tests mu(xi) <= (dim xi / n) mu(S^{n-1}) on every proper subspace spanned
/// by support directions; `rel_tol` is relative to the total mass.
ConcentrationReport subspace_concentration_check(const DiscreteMeasure& mu,
                                                 double rel_tol = 1e-9);

}  // namespace logmink
