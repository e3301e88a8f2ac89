#pragma once

// Independent reference implementations shared by the unit tests and the
// acceptance binary.

#include <cmath>
#include <random>
#include <vector>

#include "robustmo/cone_order.hpp"
#include "robustmo/problem.hpp"

namespace robustmo::testing {

inline PolyhedralCone example_cone() {
  Mat rows(2, 2);
  rows << 3, -1, -1, 3;
  return PolyhedralCone(rows, Vec::Ones(2));
}

/// min{t : t e - z in K} by bisection on feasibility, using only contains().
inline double gerstewitz_bisection(const PolyhedralCone& cone, const Vec& z) {
  const PolyhedralCone exact(cone.rows(), cone.interior_point(), 0.0);
  const Vec& e = cone.interior_point();
  double lo = -1.0, hi = 1.0;
  while (exact.contains(lo * e - z)) lo *= 2;
  while (!exact.contains(hi * e - z)) hi *= 2;
  for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    (exact.contains(mid * e - z) ? hi : lo) = mid;
  }
  return hi;
}

/// Max(C, K) by the definition: z is maximal unless some y != z in C has
/// y - z in K.
inline std::vector<std::size_t> brute_force_max(const std::vector<Vec>& C,
                                                const PolyhedralCone& cone,
                                                double value_tol = 1e-9) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < C.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < C.size() && !dominated; ++j) {
      if ((C[j] - C[i]).lpNorm<Eigen::Infinity>() <= value_tol) continue;
      dominated = cone.contains(C[j] - C[i]);
    }
    if (!dominated) out.push_back(i);
  }
  return out;
}

/// z in C - K, i.e. some c in C with c - z in K.
inline bool in_set_minus_cone(const std::vector<Vec>& C, const Vec& z,
                              const PolyhedralCone& cone) {
  for (const auto& c : C)
    if (cone.contains(c - z)) return true;
  return false;
}

/// Random nonnegative combination of the cone's extreme rays (2-D only):
/// the rays of {z : A z >= 0} are the null vectors of each row, oriented
/// to satisfy the other row.
inline Vec random_cone_element(const PolyhedralCone& cone, std::mt19937_64& rng,
                               bool interior = false) {
  const Mat& A = cone.rows();
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vec out = Vec::Zero(2);
  for (int r = 0; r < 2; ++r) {
    Vec ray(2);
    ray << -A(r, 1), A(r, 0);
    if (A.row(1 - r).dot(ray) < 0) ray = -ray;
    out += u(rng) * ray;
  }
  if (interior) out += (0.01 + u(rng)) * cone.interior_point();
  return out;
}

inline Vec random_vec(int n, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = g(rng);
  return v;
}

/// Single-scenario problem F(x) = (1/2 (x-c)^T H (x-c)) with H SPD, m = 1.
inline UncertainProblem quadratic_problem(const Mat& H, const Vec& c) {
  UncertainProblem::Spec s;
  s.name = "quad";
  s.n = static_cast<int>(c.size());
  s.m = 1;
  s.scenarios = {Vec::Zero(1)};
  s.objective = [H, c](const Vec& x, const Vec&) {
    Vec out(1);
    out[0] = 0.5 * (x - c).dot(H * (x - c));
    return out;
  };
  s.jacobian = [H, c](const Vec& x, const Vec&) -> Mat { return H * (x - c); };
  return UncertainProblem(std::move(s), PolyhedralCone::Orthant(1));
}

}  // namespace robustmo::testing
