#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "robustmo/direction.hpp"
#include "robustmo/hessian_store.hpp"
#include "robustmo/problem.hpp"
#include "robustmo/set_ops.hpp"

namespace robustmo {

struct SolveConfig {
  double gamma = 0.1;
  double p_norm_tol = 1e-4;
  int max_iters = 1000;
  int min_step_exponent = 30;  ///< step lengths below 2^-min_step_exponent are rejected
  double subproblem_tol = 1e-8;
  HessianInit hessian_init = HessianInit::Identity;
  std::uint64_t seed = 0;
  /// Also require merit(x + tau p) <= merit(x) + gamma tau phi(x) in the line
  /// search. The per-scenario test bounds only the selected scenarios, so
  /// without it the merit can rise; with it, nearly tied scenarios can stall
  /// the search at the step floor.
  bool merit_guard = false;

  /// Throws ArgumentError unless 0 < gamma < 1 and tolerances are positive.
  void validate() const;
};

enum class SolveStatus { StationaryPoint, MaxIters, StepFloor, Error };

const char* to_string(SolveStatus status);

/// One record per visited iterate x_k. The last record of a trace is the
/// terminal iterate; its step fields are empty.
struct IterationRecord {
  int k = 0;
  Vec x;
  std::size_t omega = 0;
  std::size_t partition_size = 0;
  Beta beta;
  Vec p;
  double p_norm = 0.0;
  double phi = 0.0;
  double merit = 0.0;  ///< max over F_U(x_k) of the Gerstewitz value
  double wall_time = 0.0;  ///< seconds since the start of the solve
  bool regularized = false;
  /// Accepted step length; empty on the terminal record.
  std::optional<double> tau;
  /// Per selected j: grad F(x_k, xi_{beta_j})^T p + 1/2 (p^T B p)_l, the
  /// vector model used in the line search.
  std::vector<Vec> model;
};

struct SolveTrace {
  std::string problem;
  SolveStatus status = SolveStatus::Error;
  std::string message;
  std::vector<IterationRecord> records;
  double wall_time = 0.0;

  /// Number of accepted steps.
  int iterations() const;
  const IterationRecord& terminal() const { return records.back(); }
};

/// Largest tau in {1, 1/2, 1/4, ...} with
///   F(x + tau p, xi_{beta_j}) <= F(x, xi_{beta_j}) + gamma tau model_j
/// in the cone order for every j. Trial points whose evaluation fails are
/// rejected like any other point violating the inequality. With a guard,
/// the trial must also satisfy merit <= guard.merit + gamma tau guard.phi.
/// Returns nullopt once tau would drop below 2^-min_step_exponent.
struct MeritGuard {
  double merit = 0.0;
  double phi = 0.0;
};

std::optional<double> armijo_step(const UncertainProblem& prob, const Vec& x, const Beta& beta,
                                  const Vec& p, const std::vector<Vec>& image_at_beta,
                                  const std::vector<Vec>& model, double gamma,
                                  int min_step_exponent, const MeritGuard* guard = nullptr);

/// Merit functional: max over the image of the Gerstewitz value.
double merit(const PolyhedralCone& cone, const std::vector<ImagePoint>& image);

/// Runs the quasi-Newton loop from x0. Never throws for numerical or
/// evaluation failures during the iteration; those end the trace with
/// status Error. Argument errors (bad x0, bad config) still throw.
SolveTrace solve(const UncertainProblem& prob, const Vec& x0, const SolveConfig& config = {});

}  // namespace robustmo
