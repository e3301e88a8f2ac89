#pragma once

#include <cstddef>
#include <vector>

#include "robustmo/cone_order.hpp"
#include "robustmo/errors.hpp"
#include "robustmo/hessian_store.hpp"
#include "robustmo/problem.hpp"
#include "robustmo/set_ops.hpp"

namespace robustmo {

/// f(p) = c^T p + 1/2 p^T Q p.
struct QuadraticPiece {
  Vec c;
  Mat Q;

  double operator()(const Vec& p) const { return c.dot(p) + 0.5 * p.dot(Q * p); }
};

/// min_p max_k f_k(p) for a fixed tuple beta. Scalarizing the vector model
/// J_j^T p + 1/2 (p^T B_j^(l) p)_l with the cone's max-of-ratios form yields
/// one piece per (j, cone row r):
///   c = J_j a_r / (a_r^T e),  Q = sum_l a_{r,l} B_j^(l) / (a_r^T e).
struct SubproblemInstance {
  int n = 0;
  std::vector<QuadraticPiece> pieces;

  double max_value(const Vec& p) const;
};

/// `jacobians[j]` is n x m, `blocks[j][l]` is n x n.
SubproblemInstance build_instance(const PolyhedralCone& cone, const std::vector<Mat>& jacobians,
                                  const std::vector<std::vector<Mat>>& blocks);

struct FixedBetaResult {
  Vec p;
  double value = 0.0;  ///< max_k f_k(p)
  Vec lambda;          ///< dual weights on the simplex, one per piece
  double dual_value = 0.0;
  double gap = 0.0;  ///< value - dual_value >= 0
  int iterations = 0;
  bool regularized = false;  ///< some Q_k was not PD and got shifted
};

/// Raised when the dual ascent hits its iteration cap.
class NonConvergenceError : public NumericalError {
 public:
  NonConvergenceError(const std::string& what, FixedBetaResult best)
      : NumericalError(what), best_(std::move(best)) {}
  const FixedBetaResult& best() const { return best_; }

 private:
  FixedBetaResult best_;
};

struct DualSolverOptions {
  double tol = 1e-8;
  int max_iters = 10000;
};

/// Solves the fixed-beta min-max problem through its concave dual
///   g(lambda) = min_p sum_k lambda_k f_k(p),  lambda in the simplex,
/// whose minimizer is p(lambda) = -Q(lambda)^{-1} c(lambda) and whose
/// gradient is (f_k(p(lambda)))_k. Projected-gradient ascent with step
/// halving, plus an active-set Newton polish on the KKT system, runs until
/// the duality gap max_k f_k(p) - g(lambda) is at most tol * max(1, |g|).
FixedBetaResult solve_fixed_beta(const SubproblemInstance& inst,
                                 const DualSolverOptions& opts = {});

struct DirectionResult {
  Beta beta;
  Vec p;
  double phi = 0.0;
  std::size_t partition_size = 0;
  FixedBetaResult detail;
  bool regularized = false;  ///< any beta needed a PD shift
};

/// Step 2: minimizes over every beta in the partition set of `image`,
/// breaking ties (within 1e-12 relative) toward the lexicographically
/// smallest beta. `jacobians[i]` is the Jacobian for scenario i at x.
DirectionResult solve_direction(const PolyhedralCone& cone, const ScenarioImage& image,
                                const std::vector<Mat>& jacobians, const HessianStore& store,
                                const DualSolverOptions& opts = {},
                                std::size_t partition_cap = kPartitionCap);

/// Evaluates the image and Jacobians at x, then calls solve_direction.
DirectionResult solve_step2(const UncertainProblem& prob, const Vec& x, const HessianStore& store,
                            const DualSolverOptions& opts = {});

/// phi(x) <= 0; values >= -stat_tol are read as stationary.
double stationarity_value(const UncertainProblem& prob, const Vec& x, const HessianStore& store,
                          const DualSolverOptions& opts = {});

}  // namespace robustmo
