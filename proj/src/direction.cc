#include "robustmo/direction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace robustmo {
namespace {

constexpr double kDuplicateTol = 1e-14;
constexpr double kRoundingFactor = 64.0;

struct DualPoint {
  Vec lambda;
  Vec p;
  Vec f;  // piece values at p
  double dual = 0.0;
  double primal = 0.0;  // max_k f_k(p)
  double gap = std::numeric_limits<double>::infinity();
};

Vec project_to_simplex(const Vec& v) {
  const auto k = v.size();
  std::vector<double> u(v.data(), v.data() + k);
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumsum = 0.0, theta = 0.0;
  for (Eigen::Index j = 0; j < k; ++j) {
    cumsum += u[static_cast<std::size_t>(j)];
    const double t = (cumsum - 1.0) / static_cast<double>(j + 1);
    if (u[static_cast<std::size_t>(j)] - t > 0.0) theta = t;
  }
  return (v.array() - theta).cwiseMax(0.0);
}

class DualProblem {
 public:
  explicit DualProblem(const std::vector<QuadraticPiece>& pieces, int n)
      : pieces_(pieces), n_(n) {}

  std::size_t size() const { return pieces_.size(); }

  bool evaluate(const Vec& lambda, DualPoint& out) const {
    Mat Q = Mat::Zero(n_, n_);
    Vec c = Vec::Zero(n_);
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
      const double w = lambda[static_cast<Eigen::Index>(k)];
      if (w == 0.0) continue;
      Q += w * pieces_[k].Q;
      c += w * pieces_[k].c;
    }
    Eigen::LLT<Mat> llt(Q);
    if (llt.info() != Eigen::Success) return false;
    out.lambda = lambda;
    out.p = -llt.solve(c);
    if (!out.p.allFinite()) return false;
    out.f.resize(static_cast<Eigen::Index>(pieces_.size()));
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
      out.f[static_cast<Eigen::Index>(k)] = pieces_[k](out.p);
    }
    out.dual = lambda.dot(out.f);
    out.primal = out.f.maxCoeff();
    out.gap = std::max(0.0, out.primal - out.dual);
    return true;
  }

  // Newton's method on the KKT system of min t s.t. f_k(p) <= t for k in S,
  // treating every constraint in S as active.
  bool newton_on_active_set(const std::vector<std::size_t>& S, const DualPoint& start,
                            Vec& lambda_out) const {
    const auto s = static_cast<Eigen::Index>(S.size());
    const Eigen::Index dim = n_ + 1 + s;
    Vec p = start.p;
    double t = -std::numeric_limits<double>::infinity();
    Vec mu(s);
    for (Eigen::Index a = 0; a < s; ++a) {
      mu[a] = start.lambda[static_cast<Eigen::Index>(S[static_cast<std::size_t>(a)])];
      t = std::max(t, start.f[static_cast<Eigen::Index>(S[static_cast<std::size_t>(a)])]);
    }
    const double total = mu.sum();
    if (!(total > 1e-12)) mu.setConstant(1.0 / static_cast<double>(s));
    else mu /= total;

    const double scale = std::max(1.0, std::abs(start.primal));
    Mat J(dim, dim);
    Vec R(dim);
    for (int iter = 0; iter < 50; ++iter) {
      J.setZero();
      R.setZero();
      Mat Qmu = Mat::Zero(n_, n_);
      for (Eigen::Index a = 0; a < s; ++a) {
        const QuadraticPiece& pc = pieces_[S[static_cast<std::size_t>(a)]];
        const Vec grad = pc.c + pc.Q * p;
        Qmu += mu[a] * pc.Q;
        R.head(n_) += mu[a] * grad;
        R[n_ + 1 + a] = pc(p) - t;
        J.block(0, n_ + 1 + a, n_, 1) = grad;
        J.block(n_ + 1 + a, 0, 1, n_) = grad.transpose();
        J(n_ + 1 + a, n_) = -1.0;
        J(n_, n_ + 1 + a) = 1.0;
      }
      R[n_] = mu.sum() - 1.0;
      J.topLeftCorner(n_, n_) = Qmu;
      if (!R.allFinite()) return false;
      if (R.lpNorm<Eigen::Infinity>() <= 1e-14 * scale) break;
      Eigen::FullPivLU<Mat> lu(J);
      if (!lu.isInvertible()) return false;
      const Vec dz = lu.solve(-R);
      if (!dz.allFinite()) return false;
      p += dz.head(n_);
      t += dz[n_];
      mu += dz.tail(s);
    }
    if (R.lpNorm<Eigen::Infinity>() > 1e-10 * scale) return false;
    lambda_out = Vec::Zero(static_cast<Eigen::Index>(pieces_.size()));
    for (Eigen::Index a = 0; a < s; ++a) {
      lambda_out[static_cast<Eigen::Index>(S[static_cast<std::size_t>(a)])] = mu[a];
    }
    return true;
  }

  // Active-set polish from the current dual point. Replaces `current` when
  // the polished point has a smaller gap.
  bool polish(DualPoint& current) const {
    const double scale = std::max(1.0, std::abs(current.primal));
    std::vector<std::size_t> S;
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
      const auto kk = static_cast<Eigen::Index>(k);
      if (current.lambda[kk] > 1e-10 || current.f[kk] >= current.primal - 1e-6 * scale) {
        S.push_back(k);
      }
    }
    // at most n+1 pieces are active at a nondegenerate optimum
    std::sort(S.begin(), S.end(), [&](std::size_t a, std::size_t b) {
      return current.f[static_cast<Eigen::Index>(a)] > current.f[static_cast<Eigen::Index>(b)];
    });
    if (S.size() > static_cast<std::size_t>(n_ + 1)) S.resize(static_cast<std::size_t>(n_ + 1));

    while (!S.empty()) {
      Vec lambda;
      if (!newton_on_active_set(S, current, lambda)) return false;
      Eigen::Index worst = 0;
      double most_negative = 0.0;
      for (std::size_t a = 0; a < S.size(); ++a) {
        const double mu = lambda[static_cast<Eigen::Index>(S[a])];
        if (mu < most_negative) {
          most_negative = mu;
          worst = static_cast<Eigen::Index>(a);
        }
      }
      if (most_negative < -1e-12) {
        S.erase(S.begin() + worst);
        continue;
      }
      lambda = lambda.cwiseMax(0.0);
      lambda /= lambda.sum();
      DualPoint candidate;
      if (evaluate(lambda, candidate) && candidate.gap < current.gap) {
        current = std::move(candidate);
        return true;
      }
      return false;
    }
    return false;
  }

 private:
  const std::vector<QuadraticPiece>& pieces_;
  int n_;
};

// Primal-dual interior-point method on the epigraph form
//   min t  s.t.  f_k(p) <= t,
// run on a rescaled copy (p = sigma q, values divided by `fscale`) so the
// tolerances below are scale free. Returns simplex weights and the primal p.
struct InteriorPointResult {
  Vec lambda;
  Vec p;
};

// Every p with f_k(p) <= 0 has |p| <= 2 |c_k| / lambda_min(Q_k), and the
// optimum is such a point (f_k(0) = 0), so the tightest bound is a first scale.
double optimum_radius_bound(const std::vector<QuadraticPiece>& pieces) {
  double sigma = std::numeric_limits<double>::infinity();
  for (const auto& piece : pieces) {
    Eigen::SelfAdjointEigenSolver<Mat> eig(piece.Q, Eigen::EigenvaluesOnly);
    const double lam_min = eig.eigenvalues().minCoeff();
    if (lam_min > 0.0) sigma = std::min(sigma, piece.c.norm() / lam_min);
  }
  return sigma > 0.0 && std::isfinite(sigma) ? sigma : 1.0;
}

InteriorPointResult interior_point(const std::vector<QuadraticPiece>& pieces, int n,
                                   double sigma, bool feasible_path) {
  const auto K = static_cast<Eigen::Index>(pieces.size());
  std::vector<Vec> c(pieces.size());
  std::vector<Mat> Q(pieces.size());
  double fscale = 0.0;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    c[k] = sigma * pieces[k].c;
    Q[k] = sigma * sigma * pieces[k].Q;
    fscale = std::max(fscale, c[k].norm() + Q[k].norm());
  }
  if (!(fscale > 0.0) || !std::isfinite(fscale)) fscale = 1.0;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    c[k] /= fscale;
    Q[k] /= fscale;
  }

  // Slack form f_k(q) + s_k - t = 0, s >= 0, with Mehrotra predictor-corrector
  // steps. Eliminating s and lambda leaves an (n+1) symmetric system.
  const Eigen::Index dim = n + 1;
  Vec q = Vec::Zero(n);
  double t = feasible_path ? 1.0 : 0.0;
  Vec s = Vec::Ones(K);
  Vec lambda = Vec::Constant(K, 1.0 / static_cast<double>(K));
  Vec f(K), rp(K), w(K), dl(K), ds(K);
  std::vector<Vec> g(pieces.size());
  Vec best_lambda = lambda;
  Vec best_q = q;
  double best_err = std::numeric_limits<double>::infinity();

  for (int iter = 0; iter < 200; ++iter) {
    Mat H = Mat::Zero(n, n);
    Vec rq = Vec::Zero(n);
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      const auto kk = static_cast<Eigen::Index>(k);
      g[k] = c[k] + Q[k] * q;
      f[kk] = c[k].dot(q) + 0.5 * q.dot(Q[k] * q);
      rp[kk] = f[kk] + s[kk] - t;
      H += lambda[kk] * Q[k];
      rq += lambda[kk] * g[k];
    }
    const double rt = 1.0 - lambda.sum();
    const double mu = lambda.dot(s) / static_cast<double>(K);
    const double err = std::max({mu, rq.norm(), std::abs(rt), rp.norm()});
    if (err < best_err) {
      best_err = err;
      best_lambda = lambda;
      best_q = q;
    }
    if (err <= 1e-15) break;

    Mat M = Mat::Zero(dim, dim);
    M.topLeftCorner(n, n) = H;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      const auto kk = static_cast<Eigen::Index>(k);
      const double d = lambda[kk] / s[kk];
      M.topLeftCorner(n, n) += d * g[k] * g[k].transpose();
      M.block(0, n, n, 1) -= d * g[k];
      M(n, n) += d;
    }
    M.block(n, 0, 1, n) = M.block(0, n, n, 1).transpose();
    const Eigen::LDLT<Mat> ldlt(M);
    if (ldlt.info() != Eigen::Success) break;

    // rc is the complementarity target minus lambda_k s_k.
    const auto step = [&](const Vec& rc, Vec& dz) {
      Vec rhs = Vec::Zero(dim);
      rhs.head(n) = -rq;
      rhs[n] = -rt;
      for (std::size_t k = 0; k < pieces.size(); ++k) {
        const auto kk = static_cast<Eigen::Index>(k);
        w[kk] = (rc[kk] + lambda[kk] * rp[kk]) / s[kk];
        rhs.head(n) -= w[kk] * g[k];
        rhs[n] += w[kk];
      }
      dz = ldlt.solve(rhs);
      for (std::size_t k = 0; k < pieces.size(); ++k) {
        const auto kk = static_cast<Eigen::Index>(k);
        const double gd = g[k].dot(dz.head(n)) - dz[n];
        dl[kk] = w[kk] + lambda[kk] / s[kk] * gd;
        ds[kk] = -rp[kk] - gd;
      }
    };
    const auto max_step = [](const Vec& v, const Vec& dv) {
      double a = 1.0;
      for (Eigen::Index k = 0; k < v.size(); ++k) {
        if (dv[k] < 0.0) a = std::min(a, -v[k] / dv[k]);
      }
      return a;
    };

    Vec dz;
    step(-lambda.cwiseProduct(s), dz);
    if (!dz.allFinite()) break;
    const double ap = max_step(s, ds);
    const double ad = max_step(lambda, dl);
    const double mu_aff =
        (s + ap * ds).dot(lambda + ad * dl) / static_cast<double>(K);
    const double centering = std::pow(mu_aff / mu, 3);
    const Vec rc = Vec::Constant(K, centering * mu) - lambda.cwiseProduct(s) -
                   ds.cwiseProduct(dl);
    step(rc, dz);
    if (!dz.allFinite()) break;
    double a_p = std::min(1.0, 0.995 * max_step(s, ds));
    const double a_d = std::min(1.0, 0.995 * max_step(lambda, dl));
    if (feasible_path) {
      // Keep s = t - f(q) exact; curvature the linearized step ignores then
      // shortens the step instead of showing up as infeasibility.
      Vec s_new(K);
      bool feasible = false;
      for (int bt = 0; bt < 60 && !feasible; ++bt, a_p *= 0.5) {
        const Vec q_new = q + a_p * dz.head(n);
        const double t_new = t + a_p * dz[n];
        feasible = true;
        for (std::size_t k = 0; k < pieces.size(); ++k) {
          const auto kk = static_cast<Eigen::Index>(k);
          s_new[kk] = t_new - (c[k].dot(q_new) + 0.5 * q_new.dot(Q[k] * q_new));
          if (!(s_new[kk] > 0.0)) feasible = false;
        }
        if (feasible) {
          q = q_new;
          t = t_new;
        }
      }
      if (!feasible) break;
      s = s_new;
    } else {
      q += a_p * dz.head(n);
      t += a_p * dz[n];
      s += a_p * ds;
    }
    lambda += a_d * dl;
  }
  lambda = best_lambda;
  q = best_q;

  InteriorPointResult out;
  out.lambda = lambda.cwiseMax(0.0);
  const double total = out.lambda.sum();
  if (total > 0.0) out.lambda /= total;
  else out.lambda.setConstant(1.0 / static_cast<double>(K));
  out.p = sigma * q;
  return out;
}

}  // namespace

double SubproblemInstance::max_value(const Vec& p) const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& piece : pieces) best = std::max(best, piece(p));
  return best;
}

SubproblemInstance build_instance(const PolyhedralCone& cone, const std::vector<Mat>& jacobians,
                                  const std::vector<std::vector<Mat>>& blocks) {
  if (jacobians.empty() || jacobians.size() != blocks.size()) {
    throw ArgumentError("need one Jacobian and one block list per selected scenario");
  }
  SubproblemInstance inst;
  inst.n = static_cast<int>(jacobians.front().rows());
  const Mat& A = cone.rows();
  const Vec& scale = cone.row_scales();
  for (std::size_t j = 0; j < jacobians.size(); ++j) {
    const Mat& J = jacobians[j];
    if (J.rows() != inst.n || J.cols() != cone.dim()) throw ArgumentError("Jacobian shape");
    if (static_cast<int>(blocks[j].size()) != cone.dim()) throw ArgumentError("block count");
    for (int r = 0; r < cone.num_rows(); ++r) {
      QuadraticPiece piece;
      piece.c = J * A.row(r).transpose() / scale[r];
      piece.Q = Mat::Zero(inst.n, inst.n);
      for (int l = 0; l < cone.dim(); ++l) piece.Q += A(r, l) * blocks[j][static_cast<std::size_t>(l)];
      piece.Q /= scale[r];
      inst.pieces.push_back(std::move(piece));
    }
  }
  return inst;
}

FixedBetaResult solve_fixed_beta(const SubproblemInstance& inst, const DualSolverOptions& opts) {
  if (inst.pieces.empty()) throw ArgumentError("subproblem has no pieces");
  const int n = inst.n;

  // Identical pieces (e.g. scenarios that differ by a constant shift) make
  // the dual degenerate; solve over distinct pieces and map back.
  std::vector<QuadraticPiece> unique;
  std::vector<std::size_t> owner(inst.pieces.size());
  for (std::size_t k = 0; k < inst.pieces.size(); ++k) {
    const auto& pk = inst.pieces[k];
    if (pk.c.size() != n || pk.Q.rows() != n || pk.Q.cols() != n) {
      throw ArgumentError("piece has inconsistent dimension");
    }
    std::size_t found = unique.size();
    for (std::size_t u = 0; u < unique.size(); ++u) {
      if ((unique[u].c - pk.c).norm() <= kDuplicateTol * (1.0 + unique[u].c.norm()) &&
          (unique[u].Q - pk.Q).norm() <= kDuplicateTol * (1.0 + unique[u].Q.norm())) {
        found = u;
        break;
      }
    }
    if (found == unique.size()) unique.push_back(pk);
    owner[k] = found;
  }

  FixedBetaResult result;
  for (auto& piece : unique) {
    piece.Q = 0.5 * (piece.Q + piece.Q.transpose()).eval();
    Eigen::LLT<Mat> llt(piece.Q);
    if (llt.info() == Eigen::Success) continue;
    Eigen::SelfAdjointEigenSolver<Mat> eig(piece.Q, Eigen::EigenvaluesOnly);
    const double lam_min = eig.eigenvalues().minCoeff();
    const double mu = std::max(0.0, -lam_min) +
                      1e-8 * std::max(1.0, piece.Q.trace() / static_cast<double>(n));
    piece.Q += mu * Mat::Identity(n, n);
    result.regularized = true;
  }

  DualProblem dual(unique, n);
  const auto K = static_cast<Eigen::Index>(unique.size());
  DualPoint current;
  if (!dual.evaluate(Vec::Constant(K, 1.0 / static_cast<double>(K)), current)) {
    throw NumericalError("aggregated Hessian is numerically singular");
  }

  // p(lambda) is badly conditioned when Q(lambda) is, so the certificate pairs
  // the best primal point seen with the best dual value seen.
  Vec best_p = Vec::Zero(n);
  double best_primal = 0.0;  // every piece vanishes at p = 0
  Vec best_lambda = current.lambda;
  double best_dual = current.dual;
  const auto offer_primal = [&](const Vec& p) {
    if (!p.allFinite()) return;
    double value = -std::numeric_limits<double>::infinity();
    for (const auto& piece : unique) value = std::max(value, piece(p));
    if (value < best_primal) {
      best_primal = value;
      best_p = p;
    }
  };
  const auto offer = [&](const DualPoint& pt) {
    offer_primal(pt.p);
    if (pt.dual > best_dual) {
      best_dual = pt.dual;
      best_lambda = pt.lambda;
    }
  };
  // Below the rounding error of evaluating the pieces at best_p a gap is not
  // resolvable, so that error is a floor for the test.
  std::vector<double> c_norm, q_norm;
  for (const auto& piece : unique) {
    c_norm.push_back(piece.c.norm());
    q_norm.push_back(piece.Q.norm());
  }
  const auto certified = [&] {
    const double r = best_p.norm();
    double magnitude = 0.0;
    for (std::size_t k = 0; k < unique.size(); ++k) {
      magnitude = std::max(magnitude, c_norm[k] * r + 0.5 * q_norm[k] * r * r);
    }
    const double floor = kRoundingFactor * std::numeric_limits<double>::epsilon() * magnitude;
    return best_primal - best_dual <=
           std::max(opts.tol * std::max(1.0, std::abs(best_dual)), floor);
  };
  offer(current);

  if (!certified()) {
    // Interior-point warm start for the ascent below; on well-posed instances
    // it already meets the gap test. Later passes rescale to the previous solution, which resolves optima
    // that are tiny against the crude radius bound. The infeasible start is
    // usually faster; the feasible path survives extreme curvature.
    for (const bool feasible_path : {false, true}) {
      double sigma = optimum_radius_bound(unique);
      for (int pass = 0; pass < 4 && !certified(); ++pass) {
        const InteriorPointResult ip = interior_point(unique, n, sigma, feasible_path);
        offer_primal(ip.p);
        DualPoint warm;
        if (dual.evaluate(ip.lambda, warm)) {
          offer(warm);
          if (warm.dual > current.dual) current = std::move(warm);
        }
        if (!(ip.p.norm() > 0.0)) break;
        sigma = ip.p.norm();
      }
    }
  }

  double step = 1.0;
  int iter = 0;
  for (; iter < opts.max_iters && !certified(); ++iter) {
    if (iter % 10 == 0 || current.gap < 1e-4 * std::max(1.0, std::abs(current.dual))) {
      if (dual.polish(current)) {
        offer(current);
        if (certified()) break;
      }
    }
    bool moved = false;
    for (int halving = 0; halving < 60; ++halving) {
      const Vec trial_lambda = project_to_simplex(current.lambda + step * current.f);
      const Vec d = trial_lambda - current.lambda;
      if (d.lpNorm<Eigen::Infinity>() == 0.0) break;
      DualPoint trial;
      if (dual.evaluate(trial_lambda, trial) &&
          trial.dual >= current.dual + current.f.dot(d) - d.squaredNorm() / (2.0 * step)) {
        current = std::move(trial);
        offer(current);
        step *= 2.0;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) {
      // projected gradient is stationary up to rounding: last chance via polish
      if (dual.polish(current)) offer(current);
      ++iter;
      break;
    }
  }

  result.p = best_p;
  result.value = best_primal;
  result.dual_value = best_dual;
  result.gap = std::max(0.0, best_primal - best_dual);
  result.iterations = iter;
  result.lambda = Vec::Zero(static_cast<Eigen::Index>(inst.pieces.size()));
  std::vector<bool> assigned(unique.size(), false);
  for (std::size_t k = 0; k < inst.pieces.size(); ++k) {
    if (!assigned[owner[k]]) {
      result.lambda[static_cast<Eigen::Index>(k)] = best_lambda[static_cast<Eigen::Index>(owner[k])];
      assigned[owner[k]] = true;
    }
  }
  if (!certified()) {
    throw NonConvergenceError("dual ascent stopped with gap " + std::to_string(result.gap) +
                                  " after " + std::to_string(iter) + " iterations",
                              result);
  }
  return result;
}

DirectionResult solve_direction(const PolyhedralCone& cone, const ScenarioImage& image,
                                const std::vector<Mat>& jacobians, const HessianStore& store,
                                const DualSolverOptions& opts, std::size_t partition_cap) {
  const PartitionSet ps = partition_set(image, partition_cap);
  DirectionResult best;
  best.partition_size = ps.tuples.size();
  bool have = false;
  for (const Beta& beta : ps.tuples) {
    std::vector<Mat> J;
    std::vector<std::vector<Mat>> B;
    for (std::size_t i : beta) {
      J.push_back(jacobians.at(i));
      std::vector<Mat> blocks;
      for (int l = 0; l < store.m(); ++l) blocks.push_back(store.block(i, l));
      B.push_back(std::move(blocks));
    }
    FixedBetaResult r = solve_fixed_beta(build_instance(cone, J, B), opts);
    best.regularized |= r.regularized;
    const double margin = 1e-12 * (1.0 + std::abs(best.phi));
    if (!have || r.value < best.phi - margin) {
      best.beta = beta;
      best.p = r.p;
      best.phi = r.value;
      best.detail = std::move(r);
      have = true;
    }
  }
  // p = 0 attains 0, so the optimum is never positive
  best.phi = std::min(best.phi, 0.0);
  return best;
}

DirectionResult solve_step2(const UncertainProblem& prob, const Vec& x, const HessianStore& store,
                            const DualSolverOptions& opts) {
  const ScenarioImage image = scenario_image(prob, x);
  std::vector<Mat> jacobians;
  jacobians.reserve(prob.num_scenarios());
  for (std::size_t i = 0; i < prob.num_scenarios(); ++i) jacobians.push_back(prob.jacobian(x, i));
  return solve_direction(prob.cone(), image, jacobians, store, opts);
}

double stationarity_value(const UncertainProblem& prob, const Vec& x, const HessianStore& store,
                          const DualSolverOptions& opts) {
  return solve_step2(prob, x, store, opts).phi;
}

}  // namespace robustmo
