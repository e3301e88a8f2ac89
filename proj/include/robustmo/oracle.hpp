#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "robustmo/direction.hpp"
#include "robustmo/problem.hpp"

namespace robustmo::oracle {

/// Brute-force certifiers. They rely only on cone membership and plain loops,
/// never on set_ops or the direction solver they are used to check.

inline constexpr std::size_t kMaxGridPoints = 10'000'000;

/// Axis-aligned grid: lo[d], lo[d] + step[d], ..., up to hi[d] (inclusive
/// within half a step).
struct GridSpec {
  Vec lo;
  Vec hi;
  Vec step;

  std::size_t points_per_axis(Eigen::Index d) const;
  std::size_t total_points() const;
};

struct CertificationReport {
  bool certified = false;  ///< no counterexample on this grid
  std::optional<Vec> counterexample;
  std::size_t points_checked = 0;
};

/// Searches the grid for x with F_U(x) inside F_U(xbar) - int K, i.e. every
/// F(x, xi_i) strictly below some point of F_U(xbar). Requires n <= 3;
/// throws CapacityError for larger n or grids above kMaxGridPoints.
CertificationReport certify_robust_weak_efficiency(const UncertainProblem& prob, const Vec& xbar,
                                                   const GridSpec& grid);

/// Minimum of max_k f_k(p) over grid points of the ball of given radius,
/// refined by repeatedly re-centering a `resolution`^n grid on the best
/// point and shrinking it. Requires n <= 3.
double minmax_grid_value(const SubproblemInstance& inst, double radius, int resolution = 41,
                         int levels = 12);

/// Radius of a ball certain to contain the min-max minimizer:
/// min_k 2 ||c_k|| / lambda_min(Q_k).
double minmax_radius_bound(const SubproblemInstance& inst);

}  // namespace robustmo::oracle
