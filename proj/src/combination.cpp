#include "logmink/combination.hpp"

#include "logmink/direction.hpp"
#include "logmink/error.hpp"

#include <cmath>
#include <functional>

namespace logmink {

namespace {

void check_inputs(const ConvexBody& k, const ConvexBody& l, double lambda) {
  if (k.dim() != l.dim()) throw GeometryError(ErrorCode::kDimensionMismatch, "bodies differ in dimension");
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw GeometryError(ErrorCode::kInvalidInput, "lambda must lie in (0,1)");
  }
}

Combination sampled(const ConvexBody& k, const ConvexBody& l,
                    const std::optional<std::vector<Vec>>& sample_dirs, bool exact_on_normals,
                    const std::function<double(double, double)>& f) {
  std::vector<Vec> dirs;
  for (const Facet& x : k.facets()) dirs.push_back(x.normal);
  for (const Facet& x : l.facets()) dirs.push_back(x.normal);
  const std::vector<Vec> extra = sample_dirs ? *sample_dirs : default_sample_directions(k.dim());
  dirs.insert(dirs.end(), extra.begin(), extra.end());

  std::vector<double> values;
  values.reserve(dirs.size());
  for (Vec& u : dirs) {
    u = unit(u);
    values.push_back(f(k.support(u), l.support(u)));
  }
  const SupportSamples samples(k.dim(), dirs, values);
  const bool exact = k.dim() == 1 || (exact_on_normals && k.dim() == 2);
  return {wulff_shape(samples), !exact, samples.size()};
}

}  // namespace

std::vector<Vec> default_sample_directions(int dim) {
  return quasi_uniform_directions(dim, dim == 3 ? 512 : 256);
}

Combination lp_combination(const ConvexBody& k, const ConvexBody& l, double lambda, double p,
                           const std::optional<std::vector<Vec>>& sample_dirs) {
  check_inputs(k, l, lambda);
  if (!(p > 0.0) || !std::isfinite(p)) throw GeometryError(ErrorCode::kInvalidP, "p must be positive");
  // In the plane the normals of (1-l)K + lL are those of K and L.
  return sampled(k, l, sample_dirs, p == 1.0, [&](double hk, double hl) {
    return std::pow((1.0 - lambda) * std::pow(hk, p) + lambda * std::pow(hl, p), 1.0 / p);
  });
}

Combination log_combination(const ConvexBody& k, const ConvexBody& l, double lambda,
                            const std::optional<std::vector<Vec>>& sample_dirs) {
  check_inputs(k, l, lambda);
  return sampled(k, l, sample_dirs, false, [&](double hk, double hl) {
    return std::pow(hk, 1.0 - lambda) * std::pow(hl, lambda);
  });
}

Combination combine(const ConvexBody& k, const ConvexBody& l, const CombinationParams& params,
                    const std::optional<std::vector<Vec>>& sample_dirs) {
  if (params.p == 0.0) return log_combination(k, l, params.lambda, sample_dirs);
  return lp_combination(k, l, params.lambda, params.p, sample_dirs);
}

}  // namespace logmink
