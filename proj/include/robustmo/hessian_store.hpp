#pragma once

#include <cstddef>
#include <vector>

#include "robustmo/cone_order.hpp"
#include "robustmo/problem.hpp"

namespace robustmo {

enum class HessianInit { Identity, FiniteDifference };

enum class BlockStatus {
  Applied,
  Skipped,   ///< curvature condition s^T y > c_tol ||s|| ||y|| failed
  Reverted,  ///< applied, then undone because the scenario lost K-positive definiteness
};

/// One BFGS update of a symmetric positive definite block in place:
///   B <- B - B s s^T B / (s^T B s) + y y^T / (s^T y),
/// followed by resymmetrization. Skips (leaving B untouched) when the
/// curvature safeguard fails. Throws NumericalError if s^T B s <= 0.
BlockStatus bfgs_update_block(Mat& B, const Vec& s, const Vec& y, double curvature_tol);

/// Symmetric matrix with every eigenvalue below `floor` raised to `floor`.
Mat floor_eigenvalues(const Mat& symmetric, double floor);

/// Per-scenario, per-component Hessian approximations B^(i,l), each n x n.
class HessianStore {
 public:
  static constexpr double kDefaultCurvatureTol = 1e-8;

  /// Every block initialized to the identity.
  HessianStore(std::size_t scenarios, int m, int n, double curvature_tol = kDefaultCurvatureTol);

  std::size_t num_scenarios() const { return scenarios_; }
  int m() const { return m_; }
  int n() const { return n_; }
  double curvature_tol() const { return curvature_tol_; }

  const Mat& block(std::size_t scenario, int component) const;
  void set_block(std::size_t scenario, int component, Mat value);

  /// Quadratic forms (p^T B^(i,1) p, ..., p^T B^(i,m) p).
  Vec quadratic_forms(std::size_t scenario, const Vec& p) const;

  /// Applies the update to all m blocks of one scenario with
  /// y_per_component[l] = grad f_l(x_{k+1}, xi_i) - grad f_l(x_k, xi_i).
  ///
  /// With a cone whose rows have negative entries, the blockwise updates can
  /// destroy K-positive definiteness even though every block stays positive
  /// definite; in that case the scenario's updates are undone and every
  /// applied block reports Reverted.
  std::vector<BlockStatus> bfgs_update(std::size_t scenario, const Vec& s,
                                       const std::vector<Vec>& y_per_component,
                                       const PolyhedralCone* cone = nullptr);

  /// Every cone-row aggregate sum_l a_{r,l} B^(i,l) is positive definite
  /// (sufficient for K-positive definiteness of the stacked forms).
  bool cone_positive_definite(std::size_t scenario, const PolyhedralCone& cone) const;

 private:
  std::size_t index(std::size_t scenario, int component) const;

  std::size_t scenarios_;
  int m_;
  int n_;
  double curvature_tol_;
  std::vector<Mat> blocks_;
};

/// Finite-difference Hessian of component l of F(., xi_i), symmetrized.
Mat finite_difference_hessian(const UncertainProblem& prob, const Vec& x, std::size_t scenario,
                              int component);

/// Identity blocks, or finite-difference Hessians floored at 1e-6.
HessianStore init_store(const UncertainProblem& prob, const Vec& x0, HessianInit mode,
                        double curvature_tol = HessianStore::kDefaultCurvatureTol);

}  // namespace robustmo
