#include "robustmo/oracle.hpp"

#include <cmath>
#include <limits>

#include "robustmo/errors.hpp"

namespace robustmo::oracle {

std::size_t GridSpec::points_per_axis(Eigen::Index d) const {
  if (!(step[d] > 0.0)) throw ArgumentError("grid step must be positive");
  if (hi[d] < lo[d]) throw ArgumentError("grid upper bound below lower bound");
  return static_cast<std::size_t>(std::floor((hi[d] - lo[d]) / step[d] + 0.5)) + 1;
}

std::size_t GridSpec::total_points() const {
  if (lo.size() != hi.size() || lo.size() != step.size()) {
    throw ArgumentError("grid bounds and steps must have equal dimension");
  }
  std::size_t total = 1;
  for (Eigen::Index d = 0; d < lo.size(); ++d) {
    const std::size_t k = points_per_axis(d);
    if (total > kMaxGridPoints / k + 1) return kMaxGridPoints + 1;
    total *= k;
  }
  return total;
}

CertificationReport certify_robust_weak_efficiency(const UncertainProblem& prob, const Vec& xbar,
                                                   const GridSpec& grid) {
  if (prob.n() > 3) {
    throw CapacityError("grid certification supports n <= 3, problem has n = " +
                        std::to_string(prob.n()));
  }
  if (xbar.size() != prob.n() || grid.lo.size() != prob.n()) {
    throw ArgumentError("point or grid dimension does not match problem");
  }
  const std::size_t total = grid.total_points();
  if (total > kMaxGridPoints) throw CapacityError("grid exceeds 10^7 points");

  const PolyhedralCone& cone = prob.cone();
  const std::size_t p = prob.num_scenarios();
  std::vector<Vec> ref(p);
  for (std::size_t i = 0; i < p; ++i) ref[i] = prob.objective(xbar, i);

  CertificationReport rep;
  const auto n = prob.n();
  Vec x(n);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (Eigen::Index d = n - 1; d >= 0; --d) {
      const std::size_t k = grid.points_per_axis(d);
      x[d] = std::min(grid.lo[d] + static_cast<double>(rest % k) * grid.step[d], grid.hi[d]);
      rest /= k;
    }
    ++rep.points_checked;
    bool all_below = true;
    for (std::size_t i = 0; i < p && all_below; ++i) {
      Vec fx;
      try {
        fx = prob.objective(x, i);
      } catch (const EvaluationError&) {
        all_below = false;
        break;
      }
      bool below_some = false;
      for (std::size_t t = 0; t < p && !below_some; ++t) {
        below_some = cone.contains_interior(ref[t] - fx);
      }
      all_below = below_some;
    }
    if (all_below) {
      rep.counterexample = x;
      return rep;
    }
  }
  rep.certified = true;
  return rep;
}

double minmax_radius_bound(const SubproblemInstance& inst) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& piece : inst.pieces) {
    Eigen::SelfAdjointEigenSolver<Mat> eig(piece.Q, Eigen::EigenvaluesOnly);
    const double lam = eig.eigenvalues().minCoeff();
    if (lam > 0.0) best = std::min(best, 2.0 * piece.c.norm() / lam);
  }
  return best;
}

double minmax_grid_value(const SubproblemInstance& inst, double radius, int resolution,
                         int levels) {
  const int n = inst.n;
  if (n > 3) throw CapacityError("grid search supports n <= 3");
  if (!(radius >= 0.0) || resolution < 2 || levels < 1) {
    throw ArgumentError("invalid grid search parameters");
  }
  const auto max_value = [&](const Vec& p) {
    double v = -std::numeric_limits<double>::infinity();
    for (const auto& piece : inst.pieces) v = std::max(v, piece.c.dot(p) + 0.5 * p.dot(piece.Q * p));
    return v;
  };

  Vec best_p = Vec::Zero(n);
  double best = max_value(best_p);
  if (radius == 0.0) return best;

  std::size_t total = 1;
  for (int d = 0; d < n; ++d) total *= static_cast<std::size_t>(resolution);

  Vec center = Vec::Zero(n);
  double half = radius;
  Vec p(n);
  for (int level = 0; level < levels; ++level) {
    const double h = 2.0 * half / (resolution - 1);
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::size_t rest = flat;
      for (int d = n - 1; d >= 0; --d) {
        p[d] = center[d] - half + h * static_cast<double>(rest % static_cast<std::size_t>(resolution));
        rest /= static_cast<std::size_t>(resolution);
      }
      if (p.norm() > radius) continue;
      const double v = max_value(p);
      if (v < best) {
        best = v;
        best_p = p;
      }
    }
    center = best_p;
    half /= 4.0;
  }
  return best;
}

}  // namespace robustmo::oracle
