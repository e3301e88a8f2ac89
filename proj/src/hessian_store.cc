#include "robustmo/hessian_store.hpp"

#include <string>

#include "robustmo/errors.hpp"

namespace robustmo {

BlockStatus bfgs_update_block(Mat& B, const Vec& s, const Vec& y, double curvature_tol) {
  const double sy = s.dot(y);
  if (!(sy > curvature_tol * s.norm() * y.norm())) return BlockStatus::Skipped;
  const Vec Bs = B * s;
  const double sBs = s.dot(Bs);
  if (!(sBs > 0.0)) {
    throw NumericalError("s^T B s = " + std::to_string(sBs) + " for a block that should be PD");
  }
  B.noalias() -= (Bs * Bs.transpose()) / sBs;
  B.noalias() += (y * y.transpose()) / sy;
  B = 0.5 * (B + B.transpose()).eval();
  return BlockStatus::Applied;
}

Mat floor_eigenvalues(const Mat& symmetric, double floor) {
  Eigen::SelfAdjointEigenSolver<Mat> eig(0.5 * (symmetric + symmetric.transpose()));
  if (eig.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
  const Vec lambda = eig.eigenvalues().cwiseMax(floor);
  Mat out = eig.eigenvectors() * lambda.asDiagonal() * eig.eigenvectors().transpose();
  return 0.5 * (out + out.transpose());
}

HessianStore::HessianStore(std::size_t scenarios, int m, int n, double curvature_tol)
    : scenarios_(scenarios), m_(m), n_(n), curvature_tol_(curvature_tol) {
  if (scenarios == 0 || m <= 0 || n <= 0) throw ArgumentError("empty Hessian store");
  if (!(curvature_tol > 0.0)) throw ArgumentError("curvature tolerance must be positive");
  blocks_.assign(scenarios * static_cast<std::size_t>(m), Mat::Identity(n, n));
}

std::size_t HessianStore::index(std::size_t scenario, int component) const {
  if (scenario >= scenarios_ || component < 0 || component >= m_) {
    throw ArgumentError("Hessian block index out of range");
  }
  return scenario * static_cast<std::size_t>(m_) + static_cast<std::size_t>(component);
}

const Mat& HessianStore::block(std::size_t scenario, int component) const {
  return blocks_[index(scenario, component)];
}

void HessianStore::set_block(std::size_t scenario, int component, Mat value) {
  if (value.rows() != n_ || value.cols() != n_) throw ArgumentError("block has wrong shape");
  blocks_[index(scenario, component)] = std::move(value);
}

Vec HessianStore::quadratic_forms(std::size_t scenario, const Vec& p) const {
  Vec q(m_);
  for (int l = 0; l < m_; ++l) q[l] = p.dot(block(scenario, l) * p);
  return q;
}

bool HessianStore::cone_positive_definite(std::size_t scenario, const PolyhedralCone& cone) const {
  if (cone.dim() != m_) throw ArgumentError("cone dimension does not match store");
  for (int r = 0; r < cone.num_rows(); ++r) {
    Mat agg = Mat::Zero(n_, n_);
    for (int l = 0; l < m_; ++l) agg += cone.rows()(r, l) * block(scenario, l);
    Eigen::LLT<Mat> llt(agg);
    if (llt.info() != Eigen::Success) return false;
  }
  return true;
}

std::vector<BlockStatus> HessianStore::bfgs_update(std::size_t scenario, const Vec& s,
                                                   const std::vector<Vec>& y_per_component,
                                                   const PolyhedralCone* cone) {
  if (static_cast<int>(y_per_component.size()) != m_) {
    throw ArgumentError("need one y vector per objective component");
  }
  if (s.size() != n_) throw ArgumentError("step has wrong dimension");
  if (!(s.norm() > 0.0)) throw ArgumentError("BFGS update needs a nonzero step");

  std::vector<Mat> saved;
  const bool guard = cone != nullptr && !cone->has_nonnegative_rows();
  if (guard) {
    for (int l = 0; l < m_; ++l) saved.push_back(block(scenario, l));
  }

  std::vector<BlockStatus> status(static_cast<std::size_t>(m_));
  bool any_applied = false;
  for (int l = 0; l < m_; ++l) {
    const Vec& y = y_per_component[static_cast<std::size_t>(l)];
    if (y.size() != n_) throw ArgumentError("y vector has wrong dimension");
    status[static_cast<std::size_t>(l)] =
        bfgs_update_block(blocks_[index(scenario, l)], s, y, curvature_tol_);
    any_applied |= status[static_cast<std::size_t>(l)] == BlockStatus::Applied;
  }

  if (guard && any_applied && !cone_positive_definite(scenario, *cone)) {
    for (int l = 0; l < m_; ++l) {
      blocks_[index(scenario, l)] = std::move(saved[static_cast<std::size_t>(l)]);
      auto& st = status[static_cast<std::size_t>(l)];
      if (st == BlockStatus::Applied) st = BlockStatus::Reverted;
    }
  }
  return status;
}

Mat finite_difference_hessian(const UncertainProblem& prob, const Vec& x, std::size_t scenario,
                              int component) {
  const auto gradient = [&](const Vec& z) -> Vec {
    return prob.jacobian(z, scenario).col(component);
  };
  const Mat H = finite_difference_jacobian(gradient, x, scenario);
  return 0.5 * (H + H.transpose());
}

HessianStore init_store(const UncertainProblem& prob, const Vec& x0, HessianInit mode,
                        double curvature_tol) {
  if (x0.size() != prob.n()) throw ArgumentError("initial point has wrong dimension");
  HessianStore store(prob.num_scenarios(), prob.m(), prob.n(), curvature_tol);
  if (mode == HessianInit::Identity) return store;
  for (std::size_t i = 0; i < prob.num_scenarios(); ++i) {
    for (int l = 0; l < prob.m(); ++l) {
      store.set_block(i, l, floor_eigenvalues(finite_difference_hessian(prob, x0, i, l), 1e-6));
    }
  }
  return store;
}

}  // namespace robustmo
