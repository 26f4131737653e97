#pragma once

// L_p and logarithmic Minkowski combinations built as Wulff shapes of the
// combined support function on a finite direction set.

#include "logmink/geometry.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace logmink {

/// lambda in (0,1); p > 0 for the L_p combination, p == 0 for the
/// logarithmic one.
struct CombinationParams {
  double lambda = 0.5;
  double p = 1.0;
};

struct Combination {
  ConvexBody body;
  /// Set when the sampled Wulff shape may be strictly larger than the exact
  /// combination.
  bool approximate = true;
  std::size_t sample_count = 0;
};

/// 256 quasi-uniform directions in the plane, 512 in space, {+-e1} on the line.
std::vector<Vec> default_sample_directions(int dim);

/// Wulff shape of ((1-l) h_K^p + l h_L^p)^(1/p) on the facet normals of K and
/// L plus `sample_dirs` (default_sample_directions when absent). Throws
/// DimensionMismatch, InvalidP for p <= 0 and InvalidInput for lambda outside
/// (0,1).
Combination lp_combination(const ConvexBody& k, const ConvexBody& l, double lambda, double p,
                           const std::optional<std::vector<Vec>>& sample_dirs = std::nullopt);

/// Wulff shape of h_K^(1-l) h_L^l on the same direction set.
Combination log_combination(const ConvexBody& k, const ConvexBody& l, double lambda,
                            const std::optional<std::vector<Vec>>& sample_dirs = std::nullopt);

/// Dispatches on params.p (0 selects the logarithmic combination).
Combination combine(const ConvexBody& k, const ConvexBody& l, const CombinationParams& params,
                    const std::optional<std::vector<Vec>>& sample_dirs = std::nullopt);

}  // namespace logmink
