#include "robustmo/solver.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "robustmo/errors.hpp"

namespace robustmo {

void SolveConfig::validate() const {
  if (!(gamma > 0.0 && gamma < 1.0)) throw ArgumentError("gamma must lie in (0, 1)");
  if (!(p_norm_tol > 0.0)) throw ArgumentError("direction-norm tolerance must be positive");
  if (!(subproblem_tol > 0.0)) throw ArgumentError("subproblem tolerance must be positive");
  if (max_iters < 0) throw ArgumentError("iteration limit must be nonnegative");
  if (min_step_exponent < 0) throw ArgumentError("step floor exponent must be nonnegative");
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::StationaryPoint: return "StationaryPoint";
    case SolveStatus::MaxIters: return "MaxIters";
    case SolveStatus::StepFloor: return "StepFloor";
    case SolveStatus::Error: return "Error";
  }
  return "Unknown";
}

int SolveTrace::iterations() const {
  int accepted = 0;
  for (const auto& rec : records) accepted += rec.tau.has_value() ? 1 : 0;
  return accepted;
}

double merit(const PolyhedralCone& cone, const std::vector<ImagePoint>& image) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& pt : image) best = std::max(best, cone.gerstewitz(pt.value));
  return best;
}

std::optional<double> armijo_step(const UncertainProblem& prob, const Vec& x, const Beta& beta,
                                  const Vec& p, const std::vector<Vec>& image_at_beta,
                                  const std::vector<Vec>& model, double gamma,
                                  int min_step_exponent, const MeritGuard* guard) {
  if (beta.size() != image_at_beta.size() || beta.size() != model.size()) {
    throw ArgumentError("line search needs one image value and one model per selected scenario");
  }
  const PolyhedralCone& cone = prob.cone();
  double tau = 1.0;
  for (int e = 0; e <= min_step_exponent; ++e, tau *= 0.5) {
    const Vec trial = x + tau * p;
    bool ok = true;
    for (std::size_t j = 0; j < beta.size() && ok; ++j) {
      Vec f;
      try {
        f = prob.objective(trial, beta[j]);
      } catch (const EvaluationError&) {
        ok = false;
        break;
      }
      ok = cone.contains(image_at_beta[j] + gamma * tau * model[j] - f);
    }
    if (ok && guard) {
      try {
        ok = merit(cone, evaluate_image(prob, trial)) <= guard->merit + gamma * tau * guard->phi;
      } catch (const EvaluationError&) {
        ok = false;
      }
    }
    if (ok) return tau;
  }
  return std::nullopt;
}

namespace {

std::vector<Mat> all_jacobians(const UncertainProblem& prob, const Vec& x) {
  std::vector<Mat> out;
  out.reserve(prob.num_scenarios());
  for (std::size_t i = 0; i < prob.num_scenarios(); ++i) out.push_back(prob.jacobian(x, i));
  return out;
}

}  // namespace

SolveTrace solve(const UncertainProblem& prob, const Vec& x0, const SolveConfig& config) {
  config.validate();
  if (x0.size() != prob.n()) throw ArgumentError("initial point has wrong dimension");

  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };

  SolveTrace trace;
  trace.problem = prob.name();
  const PolyhedralCone& cone = prob.cone();
  DualSolverOptions dual_opts;
  dual_opts.tol = config.subproblem_tol;

  try {
    HessianStore store = init_store(prob, x0, config.hessian_init);
    Vec x = x0;
    std::vector<ImagePoint> image = evaluate_image(prob, x);
    std::vector<Mat> jac = all_jacobians(prob, x);

    for (int k = 0;; ++k) {
      const ScenarioImage si = max_elements(image, cone);
      DirectionResult dir = solve_direction(cone, si, jac, store, dual_opts);

      IterationRecord rec;
      rec.k = k;
      rec.x = x;
      rec.omega = si.omega();
      rec.partition_size = dir.partition_size;
      rec.beta = dir.beta;
      rec.p = dir.p;
      rec.p_norm = dir.p.norm();
      rec.phi = dir.phi;
      rec.merit = merit(cone, image);
      rec.regularized = dir.regularized;

      if (rec.p_norm <= config.p_norm_tol) {
        trace.status = SolveStatus::StationaryPoint;
      } else if (k >= config.max_iters) {
        trace.status = SolveStatus::MaxIters;
      }
      if (rec.p_norm <= config.p_norm_tol || k >= config.max_iters) {
        rec.wall_time = elapsed();
        trace.records.push_back(std::move(rec));
        break;
      }

      std::vector<Vec> at_beta;
      for (std::size_t i : dir.beta) {
        at_beta.push_back(si.value_of(i));
        rec.model.push_back(jac[i].transpose() * dir.p + 0.5 * store.quadratic_forms(i, dir.p));
      }
      const MeritGuard guard{rec.merit, rec.phi};
      const auto tau = armijo_step(prob, x, dir.beta, dir.p, at_beta, rec.model, config.gamma,
                                   config.min_step_exponent,
                                   config.merit_guard ? &guard : nullptr);
      if (!tau) {
        trace.status = SolveStatus::StepFloor;
        trace.message = "no step length above 2^-" + std::to_string(config.min_step_exponent) +
                        " satisfies the line-search inequality";
        rec.model.clear();
        rec.wall_time = elapsed();
        trace.records.push_back(std::move(rec));
        break;
      }
      rec.tau = *tau;
      rec.wall_time = elapsed();
      trace.records.push_back(std::move(rec));

      const Vec x_next = x + *tau * dir.p;
      std::vector<ImagePoint> image_next = evaluate_image(prob, x_next);
      std::vector<Mat> jac_next = all_jacobians(prob, x_next);
      const Vec s = x_next - x;
      if (s.norm() > 0.0) {
        for (std::size_t i = 0; i < prob.num_scenarios(); ++i) {
          std::vector<Vec> y;
          for (int l = 0; l < prob.m(); ++l) y.push_back(jac_next[i].col(l) - jac[i].col(l));
          store.bfgs_update(i, s, y, &cone);
        }
      }
      x = x_next;
      image = std::move(image_next);
      jac = std::move(jac_next);
    }
  } catch (const ArgumentError&) {
    throw;
  } catch (const Error& err) {
    trace.status = SolveStatus::Error;
    trace.message = err.what();
  }
  trace.wall_time = elapsed();
  return trace;
}

}  // namespace robustmo
