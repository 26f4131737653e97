#include "logmink/solver.hpp"

#include "logmink/cylinder.hpp"
#include "logmink/direction.hpp"
#include "logmink/error.hpp"
#include "logmink/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <optional>

namespace logmink {

namespace {

struct Evaluation {
  ConvexBody body;
  double phi;
  std::vector<double> grad;  ///< per direction
  double residual;
};

Evaluation evaluate(int dim, const std::vector<Vec>& dirs, const std::vector<double>& weights,
                    const std::vector<double>& h) {
  WulffResult w = wulff_shape_detailed(SupportSamples(dim, dirs, h));
  const auto& samples = w.atom_area;
  const double vol = w.body.volume();
  double phi = -std::log(vol) / dim;
  std::vector<double> grad(dirs.size());
  double residual = 0.0;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    phi += weights[i] * std::log(h[i]);
    grad[i] = weights[i] - h[i] * samples[i] / (dim * vol);
    residual = std::max(residual, std::abs(grad[i]));
  }
  return {std::move(w.body), phi, std::move(grad), residual};
}

std::vector<double> weights_on(const DiscreteMeasure& mu, const std::vector<Vec>& dirs) {
  const DiscreteMeasure bar = mu.normalized();
  std::vector<double> w(dirs.size());
  double covered = 0.0;
  for (std::size_t i = 0; i < dirs.size(); ++i) covered += w[i] = bar.weight_at(dirs[i]);
  if (std::abs(covered - 1.0) > 1e-9) {
    throw GeometryError(ErrorCode::kInvalidInput, "measure is not supported on the sample directions");
  }
  return w;
}

double norm(const std::vector<double>& v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

}  // namespace

std::string_view status_name(SolverStatus s) {
  switch (s) {
    case SolverStatus::kConverged: return "converged";
    case SolverStatus::kDegenerateFamily: return "degenerate_family";
    case SolverStatus::kMaxIters: return "max_iters";
    case SolverStatus::kNoDescent: return "no_descent";
    case SolverStatus::kConcentrationViolated: return "concentration_violated";
  }
  return "max_iters";
}

std::string_view outcome_name(RecoveryOutcome o) {
  switch (o) {
    case RecoveryOutcome::kEqual: return "equal";
    case RecoveryOutcome::kRelativeCylinders: return "relative_cylinders";
    case RecoveryOutcome::kOther: return "other";
  }
  return "other";
}

ExtremumProblem::ExtremumProblem(const DiscreteMeasure& target, SolverOptions options)
    : target_(target.normalized()), options_(options) {
  if (!target_.is_even()) throw GeometryError(ErrorCode::kAsymmetricInput, "target measure is not even");
  DirectionIndex lines;
  for (const Atom& a : target_.atoms()) lines.insert(canonical(a.direction));
  if (options_.enrich > 0) {
    for (const Vec& u : quasi_uniform_directions(dim(), 2 * options_.enrich)) lines.insert(canonical(u));
  }
  for (const Vec& c : lines.directions()) {
    dirs_.push_back(c);
    dirs_.push_back(-c);
  }
  for (const Vec& u : dirs_) weights_.push_back(target_.weight_at(u));
  // Boundedness of [1] on U.
  wulff_shape(SupportSamples(dim(), dirs_, std::vector<double>(dirs_.size(), 1.0)));
}

double phi_objective(const DiscreteMeasure& mu, const SupportSamples& h) {
  return evaluate(h.dim(), h.directions(), weights_on(mu, h.directions()), h.values()).phi;
}

std::vector<double> phi_gradient(const DiscreteMeasure& mu, const SupportSamples& h) {
  return evaluate(h.dim(), h.directions(), weights_on(mu, h.directions()), h.values()).grad;
}

SolverResult solve_extremum(const ExtremumProblem& problem) {
  const SolverOptions& opt = problem.options();
  const int dim = problem.dim();
  const std::vector<Vec>& dirs = problem.directions();
  const std::vector<double>& w = problem.weights();
  const std::size_t pairs = dirs.size() / 2;

  // Pair variables: t_p = log h(u_p) = log h(-u_p).
  std::vector<double> pw(pairs);
  for (std::size_t p = 0; p < pairs; ++p) pw[p] = w[2 * p] + w[2 * p + 1];
  auto support_of = [&](const std::vector<double>& t) {
    std::vector<double> h(dirs.size());
    for (std::size_t p = 0; p < pairs; ++p) h[2 * p] = h[2 * p + 1] = std::exp(t[p]);
    return h;
  };
  auto pair_grad = [&](const Evaluation& e) {
    std::vector<double> g(pairs);
    for (std::size_t p = 0; p < pairs; ++p) g[p] = e.grad[2 * p] + e.grad[2 * p + 1];
    return g;
  };
  auto gauge = [&](std::vector<double>& t) {
    const double c = std::inner_product(pw.begin(), pw.end(), t.begin(), 0.0);
    for (double& x : t) x -= c;
  };
  auto try_eval = [&](const std::vector<double>& t) -> std::optional<Evaluation> {
    try {
      return evaluate(dim, dirs, w, support_of(t));
    } catch (const GeometryError&) {
      return std::nullopt;
    }
  };

  std::vector<double> t(pairs, 0.0);
  Evaluation cur = evaluate(dim, dirs, w, support_of(t));
  std::vector<double> g = pair_grad(cur);

  SolverResult out{cur.body, {}, 0.0, 0.0, 0.0, 0, SolverStatus::kMaxIters, {}, {}};
  out.scc = subspace_concentration_check(problem.target());

  auto finish = [&](SolverStatus status, int iters) {
    out.body = cur.body;
    out.support = support_of(t);
    out.phi = cur.phi;
    out.grad_norm = norm(cur.grad);
    out.stationarity_residual = cur.residual;
    out.iterations = iters;
    out.status = status;
    return out;
  };

  out.trace.push_back({0, cur.phi, norm(cur.grad)});
  if (out.scc.verdict == Concentration::kViolated) return finish(SolverStatus::kConcentrationViolated, 0);

  auto dot = [](const std::vector<double>& a, const std::vector<double>& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
  };
  // Curvature pairs (s, y) on the gauge-free components.
  std::deque<std::pair<std::vector<double>, std::vector<double>>> memory;
  auto direction = [&]() {
    std::vector<double> q = g;
    if (memory.empty()) {
      for (double& x : q) x = -x;
      return q;
    }
    std::vector<double> alpha(memory.size());
    for (std::size_t k = memory.size(); k-- > 0;) {
      const auto& [s, y] = memory[k];
      alpha[k] = dot(s, q) / dot(s, y);
      for (std::size_t p = 0; p < pairs; ++p) q[p] -= alpha[k] * y[p];
    }
    const auto& [s_last, y_last] = memory.back();
    const double gamma = dot(s_last, y_last) / dot(y_last, y_last);
    for (double& x : q) x *= gamma;
    for (std::size_t k = 0; k < memory.size(); ++k) {
      const auto& [s, y] = memory[k];
      const double beta = dot(y, q) / dot(s, y);
      for (std::size_t p = 0; p < pairs; ++p) q[p] += (alpha[k] - beta) * s[p];
    }
    for (double& x : q) x = -x;
    return q;
  };

  int stalls = 0;
  for (int iter = 0; iter < opt.max_iters; ++iter) {
    if (norm(cur.grad) <= opt.grad_tol) {
      const bool strict = out.scc.verdict == Concentration::kStrict;
      return finish(strict ? SolverStatus::kConverged : SolverStatus::kDegenerateFamily, iter);
    }
    const double noise = 1e-14 * (1.0 + std::abs(cur.phi));
    std::vector<double> t_next(pairs);
    auto line_search = [&](const std::vector<double>& d) -> std::optional<Evaluation> {
      const double slope = dot(d, g);
      double alpha = memory.empty() ? std::min(opt.initial_step, 1.0 / norm(g)) : 1.0;
      for (int k = 0; k < opt.max_backtracks; ++k, alpha *= opt.shrink) {
        for (std::size_t p = 0; p < pairs; ++p) t_next[p] = t[p] + alpha * d[p];
        gauge(t_next);
        auto trial = try_eval(t_next);
        if (!trial) continue;
        if (trial->phi <= cur.phi + opt.armijo * alpha * slope) return trial;
        // Near the optimum the decrease drowns in rounding; accept a step that
        // keeps Phi flat and the directional derivative inside the approximate
        // Wolfe bracket.
        if (trial->phi <= cur.phi + noise) {
          const double dn = dot(pair_grad(*trial), d);
          if (dn >= 0.9 * slope && dn <= -0.8 * slope) return trial;
        }
      }
      return std::nullopt;
    };
    std::vector<double> d = direction();
    if (!(dot(d, g) < 0.0)) {
      memory.clear();
      d = direction();
    }
    std::optional<Evaluation> next = line_search(d);
    if (!next && !memory.empty()) {
      // Fall back to steepest descent before counting a stall.
      memory.clear();
      next = line_search(direction());
    }
    if (!next) {
      if (++stalls >= opt.stall_limit) return finish(SolverStatus::kNoDescent, iter);
      continue;
    }
    // Steps that only move Phi by rounding count towards the stall limit.
    stalls = cur.phi - next->phi > noise ? 0 : stalls + 1;
    if (stalls >= opt.stall_limit) return finish(SolverStatus::kNoDescent, iter);
    std::vector<double> g_next = pair_grad(*next);
    std::vector<double> s(pairs), y(pairs);
    for (std::size_t p = 0; p < pairs; ++p) {
      s[p] = t_next[p] - t[p];
      y[p] = g_next[p] - g[p];
    }
    const double mean = std::accumulate(s.begin(), s.end(), 0.0) / static_cast<double>(pairs);
    for (double& x : s) x -= mean;
    if (dot(s, y) > 1e-12 * std::sqrt(dot(s, s) * dot(y, y))) {
      memory.emplace_back(std::move(s), std::move(y));
      if (memory.size() > static_cast<std::size_t>(opt.memory)) memory.pop_front();
    }
    t = t_next;
    g = std::move(g_next);
    cur = std::move(*next);
    out.trace.push_back({iter + 1, cur.phi, norm(cur.grad)});
  }
  if (norm(cur.grad) <= opt.grad_tol) {
    const bool strict = out.scc.verdict == Concentration::kStrict;
    return finish(strict ? SolverStatus::kConverged : SolverStatus::kDegenerateFamily, opt.max_iters);
  }
  return finish(SolverStatus::kMaxIters, opt.max_iters);
}

RecoveryReport recover_and_compare(const ConvexBody& k, const SolverOptions& options) {
  RecoveryReport r{solve_extremum(ExtremumProblem(cone_volume_measure(k), options))};
  const ConvexBody& l = r.solve.body;
  const double c = std::pow(k.volume() / l.volume(), 1.0 / k.dim());
  r.normalized_hausdorff = hausdorff_distance(l.scaled(c), k) / k.circumradius();
  r.input_is_cylinder = detect_cylinder(k).has_value();
  constexpr double kMatch = 1e-5;
  if (r.input_is_cylinder) {
    if (classify_equality(l, k, kMatch) != EqualityCase::kNone) r.outcome = RecoveryOutcome::kRelativeCylinders;
  } else if (r.normalized_hausdorff < kMatch) {
    r.outcome = RecoveryOutcome::kEqual;
  }
  return r;
}

}  // namespace logmink
