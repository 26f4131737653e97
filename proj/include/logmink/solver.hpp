#pragma once

// Recovering a body from a prescribed even cone-volume measure by minimizing
//   Phi(h) = sum_i mu_i log h_i - (1/n) log V([h])
// over positive even support vectors h on a fixed direction set, where mu is
// normalized to total mass 1 and [h] is the Wulff shape.

#include "logmink/geometry.hpp"
#include "logmink/measures.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace logmink {

struct SolverOptions {
  int max_iters = 10000;
  double grad_tol = 1e-8;
  double initial_step = 1.0;
  double shrink = 0.5;
  double armijo = 1e-4;
  int max_backtracks = 60;
  /// Curvature pairs kept for the limited-memory direction; 0 gives plain
  /// steepest descent.
  int memory = 8;
  /// Consecutive iterations without a decrease above rounding before giving
  /// up.
  int stall_limit = 50;
  /// Extra quasi-uniform directions added to the support of the target.
  std::size_t enrich = 0;
};

/// Normalized target and the direction set U, stored as adjacent antipodal
/// pairs (u_0, -u_0, u_1, -u_1, ...).
class ExtremumProblem {
 public:
  /// Throws InvalidInput for a zero measure, AsymmetricInput for an odd one
  /// and UnboundedShape when U does not positively span R^n.
  explicit ExtremumProblem(const DiscreteMeasure& target, SolverOptions options = {});

  int dim() const { return target_.dim(); }
  const DiscreteMeasure& target() const { return target_; }
  const std::vector<Vec>& directions() const { return dirs_; }
  /// mu-bar at each direction of U.
  const std::vector<double>& weights() const { return weights_; }
  const SolverOptions& options() const { return options_; }

 private:
  DiscreteMeasure target_;
  SolverOptions options_;
  std::vector<Vec> dirs_;
  std::vector<double> weights_;
};

enum class SolverStatus { kConverged, kDegenerateFamily, kMaxIters, kNoDescent, kConcentrationViolated };
std::string_view status_name(SolverStatus s);

struct TracePoint {
  int iteration = 0;
  double phi = 0.0;
  double grad_norm = 0.0;
};

struct SolverResult {
  ConvexBody body;
  /// Final support values on problem.directions().
  std::vector<double> support;
  double phi = 0.0;
  double grad_norm = 0.0;
  /// max_i |mu_i - Vbar_i| with Vbar the normalized cone-volume measure of body.
  double stationarity_residual = 0.0;
  int iterations = 0;
  SolverStatus status = SolverStatus::kMaxIters;
  ConcentrationReport scc;
  /// One entry per accepted iterate, starting with the initial point.
  std::vector<TracePoint> trace;
};

/// Phi(h); mu is normalized internally and must be supported on h's
/// directions. Throws InvalidInput otherwise and propagates Wulff errors.
double phi_objective(const DiscreteMeasure& mu, const SupportSamples& h);

/// Gradient in log coordinates t_i = log h_i: mu_i - Vbar_{[h],i} for every
/// direction of h (Vbar is zero on inactive directions).
std::vector<double> phi_gradient(const DiscreteMeasure& mu, const SupportSamples& h);

/// Descent in log coordinates from h = 1 with Armijo backtracking. Search
/// directions come from the gradient and the last `memory` step/gradient
/// differences (limited-memory BFGS); a failed line search falls back to
/// steepest descent. The gauge sum_i mu_i t_i = 0 is restored after every
/// step. A target violating subspace concentration is returned
/// untouched with status kConcentrationViolated.
SolverResult solve_extremum(const ExtremumProblem& problem);

enum class RecoveryOutcome { kEqual, kRelativeCylinders, kOther };
std::string_view outcome_name(RecoveryOutcome o);

struct RecoveryReport {
  SolverResult solve;
  RecoveryOutcome outcome = RecoveryOutcome::kOther;
  /// Hausdorff distance between the volume-matched result and K over the
  /// circumradius of K.
  double normalized_hausdorff = 0.0;
  bool input_is_cylinder = false;
};

/// Solves for the cone-volume measure of K and compares. For a cylinder K the
/// outcome is kRelativeCylinders when the result is a relative cylinder of K
/// (dilatates included); otherwise kEqual when the normalized Hausdorff
/// distance is below 1e-5.
RecoveryReport recover_and_compare(const ConvexBody& k, const SolverOptions& options = {});

}  // namespace logmink
