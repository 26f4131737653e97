#include "logmink/direction.hpp"

#include "logmink/error.hpp"

#include <cmath>
#include <numbers>

namespace logmink {

Vec unit(const Vec& v) {
  const double len = v.norm();
  if (!(len > 1e-300) || !std::isfinite(len)) {
    throw GeometryError(ErrorCode::kInvalidInput, "zero or non-finite direction");
  }
  return v / len;
}

Vec canonical(const Vec& u) {
  for (int i = 0; i < kMaxDim; ++i) {
    if (std::abs(u[i]) > kDirectionTol) return u[i] > 0 ? u : Vec(-u);
  }
  return u;
}

bool is_canonical(const Vec& u) {
  for (int i = 0; i < kMaxDim; ++i) {
    if (std::abs(u[i]) > kDirectionTol) return u[i] > 0;
  }
  return true;
}

std::optional<std::size_t> DirectionIndex::find(const Vec& u) const {
  for (std::size_t i = 0; i < dirs_.size(); ++i) {
    if (same_direction(dirs_[i], u, tol_)) return i;
  }
  return std::nullopt;
}

std::size_t DirectionIndex::insert(const Vec& u) {
  if (auto i = find(u)) return *i;
  dirs_.push_back(u);
  return dirs_.size() - 1;
}

std::vector<Vec> quasi_uniform_directions(int dim, std::size_t count) {
  std::vector<Vec> out;
  if (dim == 1) {
    out = {make_vec(1.0), make_vec(-1.0)};
    return out;
  }
  if (count < 2 || count % 2 != 0) {
    throw GeometryError(ErrorCode::kInvalidInput,
                        "direction count must be even and positive");
  }
  out.reserve(count);
  const std::size_t half = count / 2;
  if (dim == 2) {
    // Offset by half a step so no sample coincides with an axis.
    for (std::size_t k = 0; k < half; ++k) {
      const double a = std::numbers::pi * (static_cast<double>(k) + 0.5) /
                       static_cast<double>(half);
      const Vec u = make_vec(std::cos(a), std::sin(a));
      out.push_back(u);
      out.push_back(-u);
    }
    return out;
  }
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t k = 0; k < half; ++k) {
    const double z = (static_cast<double>(k) + 0.5) / static_cast<double>(half);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * static_cast<double>(k);
    const Vec u(r * std::cos(phi), r * std::sin(phi), z);
    out.push_back(u);
    out.push_back(-u);
  }
  return out;
}

std::pair<Vec, Vec> plane_basis(const Vec& n) {
  const Vec c = canonical(n);
  // Seed with the coordinate axis least aligned with the normal.
  int axis = 0;
  for (int i = 1; i < kMaxDim; ++i) {
    if (std::abs(c[i]) < std::abs(c[axis])) axis = i;
  }
  Vec seed = Vec::Zero();
  seed[axis] = 1.0;
  const Vec a = (seed - seed.dot(c) * c).normalized();
  const Vec b = c.cross(a);
  return {a, b};
}

}  // namespace logmink
