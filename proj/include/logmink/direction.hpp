#pragma once

#include "logmink/vec.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace logmink {

/// Coordinate tolerance used when two unit vectors are treated as the same
/// direction.
constexpr double kDirectionTol = 1e-9;

/// Normalizes `v`; throws InvalidInput for (near) zero vectors.
Vec unit(const Vec& v);

/// Sign-canonical representative of the line through `u`: the first
/// coordinate with magnitude above kDirectionTol is made positive.
Vec canonical(const Vec& u);

/// True when `u` already is its own canonical representative.
bool is_canonical(const Vec& u);

inline bool same_direction(const Vec& a, const Vec& b,
                           double tol = kDirectionTol) {
  return (a - b).lpNorm<Eigen::Infinity>() <= tol;
}

/// Linear-scan lookup of unit vectors up to kDirectionTol. Desk-scale inputs
/// (at most a few thousand directions) make this the simplest correct choice.
class DirectionIndex {
 public:
  explicit DirectionIndex(double tol = kDirectionTol) : tol_(tol) {}

  std::optional<std::size_t> find(const Vec& u) const;

  /// Returns the index of `u`, inserting it if absent.
  std::size_t insert(const Vec& u);

  const std::vector<Vec>& directions() const { return dirs_; }
  std::size_t size() const { return dirs_.size(); }

 private:
  double tol_;
  std::vector<Vec> dirs_;
};

/// Quasi-uniform antipodally symmetric direction set: `count` equally spaced
/// angles for n = 2, a Fibonacci lattice on the upper hemisphere plus its
/// antipodes for n = 3, and {+-e1} for n = 1. `count` must be even.
std::vector<Vec> quasi_uniform_directions(int dim, std::size_t count);

/// Orthonormal pair spanning the plane orthogonal to the unit vector `n`,
/// chosen deterministically from `canonical(n)` so equal planes get equal
/// bases.
std::pair<Vec, Vec> plane_basis(const Vec& n);

}  // namespace logmink
