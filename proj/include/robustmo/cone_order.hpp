#pragma once

#include <Eigen/Dense>

namespace robustmo {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Polyhedral ordering cone K = {z : A z >= 0} with a strictly interior
/// point e (A e > 0). The rows of A are elements of the dual cone.
///
/// The cone induces the partial order z <= y  <=>  y - z in K and the strict
/// order z < y  <=>  y - z in int K. Membership tests accept a slack of
/// `tol` per row. Immutable after construction.
class PolyhedralCone {
 public:
  static constexpr double kDefaultTol = 1e-10;

  /// Throws ConstructionError if A e > 0 fails in some row or if K is not
  /// pointed (rank A < m).
  PolyhedralCone(Mat rows, Vec interior_point, double tol = kDefaultTol);

  /// Nonnegative orthant R^m_+ with e = (1, ..., 1).
  static PolyhedralCone Orthant(int m, double tol = kDefaultTol);

  int dim() const { return static_cast<int>(rows_.cols()); }
  int num_rows() const { return static_cast<int>(rows_.rows()); }
  const Mat& rows() const { return rows_; }
  const Vec& interior_point() const { return e_; }
  double tol() const { return tol_; }

  /// a_i^T e for every row, strictly positive.
  const Vec& row_scales() const { return row_scale_; }

  /// True when every row is nonnegative, so blockwise positive definiteness
  /// of stacked quadratic forms implies K-positive definiteness.
  bool has_nonnegative_rows() const { return nonnegative_rows_; }

  /// z in K, i.e. a_i^T z >= -tol for all rows.
  bool contains(const Vec& z) const;

  /// z in int K, i.e. a_i^T z > tol for all rows.
  bool contains_interior(const Vec& z) const;

  /// Gerstewitz scalarization min{t : t e in z + K} = max_i a_i^T z / a_i^T e.
  double gerstewitz(const Vec& z) const;

  /// Lipschitz constant of gerstewitz() w.r.t. the Euclidean norm,
  /// max_i ||a_i|| / a_i^T e.
  double lipschitz_constant() const;

 private:
  void check_dim(const Vec& z) const;

  Mat rows_;
  Vec e_;
  Vec row_scale_;
  double tol_;
  bool nonnegative_rows_;
};

}  // namespace robustmo
