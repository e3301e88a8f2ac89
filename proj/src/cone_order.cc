#include "robustmo/cone_order.hpp"

#include <string>

#include "robustmo/errors.hpp"

namespace robustmo {

PolyhedralCone::PolyhedralCone(Mat rows, Vec interior_point, double tol)
    : rows_(std::move(rows)), e_(std::move(interior_point)), tol_(tol) {
  const auto m = rows_.cols();
  if (m == 0 || rows_.rows() == 0) {
    throw ConstructionError("cone needs at least one row and one column");
  }
  if (e_.size() != m) {
    throw ConstructionError("interior point has dimension " + std::to_string(e_.size()) +
                            ", cone rows have " + std::to_string(m));
  }
  if (!(tol_ >= 0.0)) {
    throw ConstructionError("membership tolerance must be nonnegative");
  }
  if (rows_.rows() < m) {
    throw ConstructionError("cone with fewer rows than dimensions contains a line");
  }
  row_scale_ = rows_ * e_;
  for (Eigen::Index i = 0; i < row_scale_.size(); ++i) {
    if (!(row_scale_[i] > 0.0)) {
      throw ConstructionError("interior point violates a_" + std::to_string(i) + "^T e > 0");
    }
  }
  // {z : Az >= 0} ∩ {z : -Az >= 0} = ker A, so pointedness is rank A = m.
  Eigen::FullPivLU<Mat> lu(rows_);
  lu.setThreshold(1e-12);
  if (lu.rank() < m) {
    throw ConstructionError("cone is not pointed (rank of rows < dimension)");
  }
  nonnegative_rows_ = (rows_.array() >= 0.0).all();
}

PolyhedralCone PolyhedralCone::Orthant(int m, double tol) {
  return PolyhedralCone(Mat::Identity(m, m), Vec::Ones(m), tol);
}

void PolyhedralCone::check_dim(const Vec& z) const {
  if (z.size() != rows_.cols()) {
    throw ArgumentError("vector of dimension " + std::to_string(z.size()) +
                        " tested against cone of dimension " + std::to_string(rows_.cols()));
  }
}

bool PolyhedralCone::contains(const Vec& z) const {
  check_dim(z);
  return ((rows_ * z).array() >= -tol_).all();
}

bool PolyhedralCone::contains_interior(const Vec& z) const {
  check_dim(z);
  return ((rows_ * z).array() > tol_).all();
}

double PolyhedralCone::gerstewitz(const Vec& z) const {
  check_dim(z);
  return ((rows_ * z).array() / row_scale_.array()).maxCoeff();
}

double PolyhedralCone::lipschitz_constant() const {
  return (rows_.rowwise().norm().array() / row_scale_.array()).maxCoeff();
}

}  // namespace robustmo
