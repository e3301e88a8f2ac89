#include "robustmo/registry.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "robustmo/errors.hpp"

namespace robustmo {
namespace {

using std::cos;
using std::exp;
using std::sin;
constexpr double kPi = std::numbers::pi;

Vec v(std::initializer_list<double> xs) {
  Vec out(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) out[i++] = x;
  return out;
}

Vec fill(int n, double value) { return Vec::Constant(n, value); }

std::vector<Vec> scalar_scenarios(const std::vector<double>& values) {
  std::vector<Vec> out;
  for (double x : values) out.push_back(v({x}));
  return out;
}

// 0.1, 0.2, ..., last computed from integers to avoid accumulated drift
std::vector<Vec> tenths(int last_tenth) {
  std::vector<double> values;
  for (int k = 1; k <= last_tenth; ++k) values.push_back(k / 10.0);
  return scalar_scenarios(values);
}

struct Entry {
  UncertainProblem::Spec spec;
  PolyhedralCone cone;
};

using Builder = std::function<Entry()>;

// ---- illustrative examples --------------------------------------------------

Entry ex1() {
  UncertainProblem::Spec s;
  s.name = "EX1";
  s.source = "illustrative";
  s.n = 1;
  s.m = 2;
  s.scenarios = tenths(4);
  s.objective = [](const Vec& x, const Vec& xi) {
    const double c = (10 * xi[0] - 3) / 2;
    const double t = x[0];
    return v({2 * t * t + exp(t / 10) + c, 5 * t * cos(t) - c * sin(t) * sin(t)});
  };
  s.jacobian = [](const Vec& x, const Vec& xi) {
    const double c = (10 * xi[0] - 3) / 2;
    const double t = x[0];
    Mat J(1, 2);
    J << 4 * t + exp(t / 10) / 10, 5 * cos(t) - 5 * t * sin(t) - c * sin(2 * t);
    return J;
  };
  s.box = Box{v({-4.7}), v({4.7})};
  Mat rows(2, 2);
  rows << 3, -1, -1, 3;
  return {std::move(s), PolyhedralCone(rows, Vec::Ones(2))};
}

Entry ex2() {
  UncertainProblem::Spec s;
  s.name = "EX2";
  s.source = "illustrative";
  s.n = 2;
  s.m = 2;
  s.scenarios = tenths(45);
  s.objective = [](const Vec& x, const Vec& xi) {
    const double th = 2 * kPi * (10 * xi[0] - 1) / 60;
    const double r2 = x.squaredNorm();
    return v({r2 + 0.5 * sin(th) * cos(th) * cos(th) + 2 * exp(x[0] + x[1]),
              2 * r2 + 0.5 * cos(th) * cos(th)});
  };
  s.jacobian = [](const Vec& x, const Vec&) {
    const double ex = 2 * exp(x[0] + x[1]);
    Mat J(2, 2);
    J << 2 * x[0] + ex, 4 * x[0],  //
        2 * x[1] + ex, 4 * x[1];
    return J;
  };
  s.box = Box{v({-1.5, -1.0}), v({1.5, 0.5})};
  return {std::move(s), PolyhedralCone::Orthant(2)};
}

Entry ex3() {
  UncertainProblem::Spec s;
  s.name = "EX3";
  s.source = "illustrative";
  s.n = 2;
  s.m = 3;
  s.scenarios = tenths(50);
  s.objective = [](const Vec& x, const Vec& xi) {
    const double z = xi[0];
    const double th = 2 * kPi * (10 * z - 1) / 50;
    return v({x[0] * x[0] + 0.5 * sin(th) - 0.1 * z * x[0],
              2 * x[0] * x[0] + 0.5 * cos(th) + 0.2 * z * x[1],
              x.squaredNorm() + 10 * z});
  };
  s.jacobian = [](const Vec& x, const Vec& xi) {
    const double z = xi[0];
    Mat J(2, 3);
    J << 2 * x[0] - 0.1 * z, 4 * x[0], 2 * x[0],  //
        0.0, 0.2 * z, 2 * x[1];
    return J;
  };
  // no sampling domain is published for this example
  s.box = Box{v({-2.0, -2.0}), v({2.0, 2.0})};
  return {std::move(s), PolyhedralCone::Orthant(3)};
}

Entry ex4() {
  UncertainProblem::Spec s;
  s.name = "EX4";
  s.source = "location";
  s.n = 2;
  s.m = 3;
  ScenarioGrid grid;
  grid.axes = {linspace(-1, 1, 10), linspace(-1, 1, 10)};
  s.scenarios = grid.product();
  static const Mat sites = (Mat(2, 3) << 0, 8, 0, 0, 0, 8).finished();
  s.objective = [](const Vec& x, const Vec& xi) {
    Vec f(3);
    for (int k = 0; k < 3; ++k) f[k] = 0.5 * (x - sites.col(k) - xi).squaredNorm();
    return f;
  };
  s.jacobian = [](const Vec& x, const Vec& xi) {
    Mat J(2, 3);
    for (int k = 0; k < 3; ++k) J.col(k) = x - sites.col(k) - xi;
    return J;
  };
  s.box = Box{v({-50.0, -50.0}), v({50.0, 50.0})};
  return {std::move(s), PolyhedralCone::Orthant(3)};
}

// ---- test set ---------------------------------------------------------------

UncertainProblem::Spec test_spec(const char* name, const char* source, int n, int m, Vec x_lb,
                                 Vec x_ub, Vec xi_lb, Vec xi_ub, std::size_t count) {
  UncertainProblem::Spec s;
  s.name = name;
  s.source = source;
  s.n = n;
  s.m = m;
  s.scenarios = ScenarioGrid::Uniform(xi_lb, xi_ub, count);
  s.box = Box{std::move(x_lb), std::move(x_ub)};
  return s;
}

Entry p1() {
  auto s = test_spec("P1", "MOP1", 1, 2, v({-1}), v({0.5}), v({-2}), v({2}), 40);
  s.objective = [](const Vec& x, const Vec& xi) {
    const double t = x[0], z = xi[0];
    return v({t * t + 2 * std::pow(z * t + 1, 2) + 2 * std::pow(z * t - 1, 2) + t * t * t,
              std::pow(t - 2 * z, 2) + z * z * z * t + z * t * t * t});
  };
  s.jacobian = [](const Vec& x, const Vec& xi) {
    const double t = x[0], z = xi[0];
    Mat J(1, 2);
    J << 2 * t + 8 * z * z * t + 3 * t * t, 2 * (t - 2 * z) + z * z * z + 3 * z * t * t;
    return J;
  };
  return {std::move(s), PolyhedralCone::Orthant(2)};
}

Entry p2() {
  auto s = test_spec("P2", "New1", 1, 2, v({-1}), v({-0.7}), v({1}), v({9}), 35);
  auto shift = [](double z) {
    return (10 + exp(sin(2 * kPi * z / 50)) - sin(4 * kPi * z / 50)) / 140;
  };
  s.objective = [shift](const Vec& x, const Vec& xi) {
    const double t = x[0], z = xi[0];
    return v({t + shift(z) + z * t, cos(3 * t) + 1 / (1 + exp(2 * t)) + shift(z)});
  };
  s.jacobian = [](const Vec& x, const Vec& xi) {
    const double t = x[0], z = xi[0];
    const double e2 = exp(2 * t);
    Mat J(1, 2);
    J << 1 + z, -3 * sin(3 * t) - 2 * e2 / ((1 + e2) * (1 + e2));
    return J;
  };
  return {std::move(s), PolyhedralCone::Orthant(2)};
}

Entry p3() {
  auto s = test_spec("P3", "BK1", 2, 2, v({-3, -3}), v({5, 5}), v({-2, -2}), v({2, 2}), 40);
  s.objective = [](const Vec& x, const Vec& xi) {
    const double a = x[0], b = x[1], z1 = xi[0], z2 = xi[1];
    return v({z1 * a * a + z2 * b * b + z2 * std::pow(b - 5, 2) + std::pow(z1 * a - 2, 2) +
                  std::pow(z2 * b - 2, 2),
              z1 * a * a + z2 * b * b + std::pow(z1 * a - 5, 2)});
  };
  s.jacobian = [](const Vec& x, const Vec& xi) {
    const double a = x[0], b = x[1], z1 = xi[0], z2 = xi[1];
    Mat J(2, 2);
    J << 2 * z1 * a + 2 * z1 * (z1 * a - 2), 2 * z1 * a + 2 * z1 * (z1 * a - 5),  //
        2 * z2 * b + 2 * z2 * (b - 5) + 2 * z2 * (z2 * b - 2), 2 * z2 * b;
    return J;
  };
  return {std::move(s), PolyhedralCone::Orthant(2)};
}

Entry p4() {
  auto s = test_spec("P4", "LRS1", 2, 2, v({-5, -5}), v({50, 50}), v({0.8, 1}), v({1, 1.2}), 40);
  s.objective = [](const Vec& x, const Vec& xi) {
    const double a = x[0], b = x[1], z1 = xi[0], z2 = xi[1];
    return v({a * a + z2 * b * b + z1 * a * a + 8 * z2 * b,
              z1 * std::pow(a + 1, 2) + b * b + z1 * a * a + z2 * b * b});
  };
  s.jacobian = [](const Vec& x, const Vec& xi) {
    const double a = x[0], b = x[1], z1 = xi[0], z2 = xi[1];
    Mat J(2, 2);
    J << 2 * a + 2 * z1 * a, 2 * z1 * (a + 1) + 2 * z1 * a,  //
        2 * z2 * b + 8 * z2, 2 * b + 2 * z2 * b;
    return J;
  };
  return {std::move(s), PolyhedralCone::Orthant(2)};
}

Entry p5() {
  auto s = test_spec("P5", "SP1", 2, 2, v({-1, -1}), v({5, 5}), v({1, 1}), v({2, 2}), 25);
  s.objective = [](const Vec& x, const Vec& xi) {
    const double a = x[0], b = x[1], z1 = xi[0], z2 = xi[1];
    return v({std::pow(z1 * a * a - 1, 2) + z2 * std::pow(a - b, 2),
              std::pow(z2 * b - 3, 2) + z1 * std::pow(a - b, 2)});
  };
  s.jacobian = [](const Vec& x, const Vec& xi) {
    const double a = x[0], b = x[1], z1 = xi[0], z2 = xi[1];
    Mat J(2, 2);
    J << 4 * z1 * a * (z1 * a * a - 1) + 2 * z2 * (a - b), 2 * z1 * (a - b),  //
        -2 * z2 * (a - b), 2 * z2 * (z2 * b - 3) - 2 * z1 * (a - b);
    return J;
  };
  return {std::move(s), PolyhedralCone::Orthant(2)};
}

Entry p6() {
  auto s = test_spec("P6", "VU1", 2, 2, v({-3, -3}), v({3, 3}), v({1, 0.5}), v({1.5, 1}), 30);
  s.objective = [](const Vec& x, const Vec& xi) {
    const double a = x[0], b = x[1], z1 = xi[0], z2 = xi[1];
    return v({z1 / (a * a + z2 * b * b + 1) + z1 * z1 * a * a + std::pow(z2 * b - 1, 2),
              (z1 * a * a + 3 * b * b + 1) / z2 + 2 * z1 * a + 2 * z2 * b});
  };
  s.jacobian = [](const Vec& x, const Vec& xi) {
    const double a = x[0], b = x[1], z1 = xi[0], z2 = xi[1];
    const double d = a * a + z2 * b * b + 1;
    Mat J(2, 2);
    J << -2 * z1 * a / (d * d) + 2 * z1 * z1 * a, 2 * z1 * a / z2 + 2 * z1,  //
        -2 * z1 * z2 * b / (d * d) + 2 * z2 * (z2 * b - 1), 6 * b / z2 + 2 * z2;
    return J;
  };
  return {std::move(s), PolyhedralCone::Orthant(2)};
}

Entry p7() {
  auto s = test_spec("P7", "New2", 2, 2, v({-1, -1}), v({0, 0}), v({1.2, 0.6}), v({1.5, 1}), 20);
  s.objective = [](const Vec& x, const Vec& xi) {
    const double a = x[0], b = x[1], z1 = xi[0], z2 = xi[1];
    return v({z2 + a * a + std::pow(z1 * a - 2, 2) + std::pow(z2 * b - 2, 2),
              z2 + z1 * z1 + z1 * a * a + z2 * b * b + std::pow(z1 * a - 2, 3)});
  };
  s.jacobian = [](const Vec& x, const Vec& xi) {
    const double a = x[0], b = x[1], z1 = xi[0], z2 = xi[1];
    Mat J(2, 2);
    J << 2 * a + 2 * z1 * (z1 * a - 2), 2 * z1 * a + 3 * z1 * std::pow(z1 * a - 2, 2),  //
        2 * z2 * (z2 * b - 2), 2 * z2 * b;
    return J;
  };
  return {std::move(s), PolyhedralCone::Orthant(2)};
}

Entry p8() {
  auto s = test_spec("P8", "Lovison1", 2, 2, v({-3, -3}), v({5, 5}), v({-1.5, -1.5}), v({0, 0}),
                     40);
  s.objective = [](const Vec& x, const Vec& xi) {
    const double a = x[0], b = x[1], z1 = xi[0], z2 = xi[1];
    return v({-1.05 * z1 * a * a - 0.98 * z2 * b * b + std::pow(z1 * a - 2, 2) +
                  std::pow(z2 * b + 2, 2),
              -0.99 * z1 * std::pow(a - 3, 2) - 1.03 * z2 * std::pow(b - 2.5, 2) + 5 * z1 * a * a +
                  z2 * b * b});
  };
  s.jacobian = [](const Vec& x, const Vec& xi) {
    const double a = x[0], b = x[1], z1 = xi[0], z2 = xi[1];
    Mat J(2, 2);
    J << -2.1 * z1 * a + 2 * z1 * (z1 * a - 2), -1.98 * z1 * (a - 3) + 10 * z1 * a,  //
        -1.96 * z2 * b + 2 * z2 * (z2 * b + 2), -2.06 * z2 * (b - 2.5) + 2 * z2 * b;
    return J;
  };
  return {std::move(s), PolyhedralCone::Orthant(2)};
}

Entry p9() {
  auto s = test_spec("P9", "GKZ9", 3, 2, fill(3, -1e5), fill(3, 1e5), fill(3, -2), fill(3, 2), 40);
  s.objective = [](const Vec& x, const Vec& xi) {
    const double c3 = cos(x[2]);
    return v({2 * x[0] * x[0] + (xi[0] - 3) / 2 + 4 * x[1] * (xi[1] - 3) / 2,
              x[0] * x[0] / 4 * cos(x[1]) - c3 * c3 * c3 * (xi[0] - 3) / 2 + xi[2]});
  };
  s.jacobian = [](const Vec& x, const Vec& xi) {
    const double c3 = cos(x[2]);
    Mat J(3, 2);
    J << 4 * x[0], x[0] / 2 * cos(x[1]),                  //
        2 * (xi[1] - 3), -x[0] * x[0] / 4 * sin(x[1]),  //
        0.0, 3 * c3 * c3 * sin(x[2]) * (xi[0] - 3) / 2;
    return J;
  };
  return {std::move(s), PolyhedralCone::Orthant(2)};
}

Entry p10() {
  auto s = test_spec("P10", "DD1", 5, 2, fill(5, -20), fill(5, 20), v({0.008}), v({0.012}), 25);
  s.objective = [](const Vec& x, const Vec& xi) {
    const double z = xi[0];
    return v({x.squaredNorm() + z * z, (3 + z) * x[0] + 2 * x[1] - x[2] / 3 +
                                           std::pow(x[3] - x[4], 3) + z * x[0] * x[0]});
  };
  s.jacobian = [](const Vec& x, const Vec& xi) {
    const double z = xi[0];
    const double d = 3 * std::pow(x[3] - x[4], 2);
    Mat J(5, 2);
    J.col(0) = 2 * x;
    J.col(1) << 3 + z + 2 * z * x[0], 2, -1.0 / 3, d, -d;
    return J;
  };
  return {std::move(s), PolyhedralCone::Orthant(2)};
}

Entry p11() {
  auto s = test_spec("P11", "Jin1", 20, 2, fill(20, -9), fill(20, -7), fill(20, -2), fill(20, 1),
                     20);
  s.objective = [](const Vec& x, const Vec& xi) {
    const double n = static_cast<double>(x.size());
    const Vec sx = xi.cwiseProduct(x);
    return v({sx.squaredNorm() / n, ((x - 2 * xi).squaredNorm() + xi.squaredNorm()) / n});
  };
  s.jacobian = [](const Vec& x, const Vec& xi) {
    const double n = static_cast<double>(x.size());
    Mat J(x.size(), 2);
    J.col(0) = 2 * xi.cwiseProduct(xi).cwiseProduct(x) / n;
    J.col(1) = 2 * (x - 2 * xi) / n;
    return J;
  };
  return {std::move(s), PolyhedralCone::Orthant(2)};
}

Entry p12() {
  auto s = test_spec("P12", "MOP7", 2, 3, v({-400, -400}), v({400, 400}), v({-2, -2}), v({1, 1}),
                     30);
  s.objective = [](const Vec& x, const Vec& xi) {
    const double a = x[0], b = x[1], z1 = xi[0], z2 = xi[1];
    const double u = z1 * a + z2 * b - 3, w = -z1 * a + z2 * b + 2;
    const double p = z1 * a + 2 * z2 * b - 1, q = -z1 * a + 2 * z2 * b;
    return v({std::pow(z1 * a - 2, 2) / 2 + std::pow(z2 * b + 1, 2) / 13 + 3 * z1 + a * a + b * b +
                  z1 * z2,
              u * u / 36 + w * w / 8 - 17 * z2 + a + b + z2,
              p * p / 175 + q * q / 17 - 13 * z1 * z2 + z2 * a * a - 9 * b});
  };
  s.jacobian = [](const Vec& x, const Vec& xi) {
    const double a = x[0], b = x[1], z1 = xi[0], z2 = xi[1];
    const double u = z1 * a + z2 * b - 3, w = -z1 * a + z2 * b + 2;
    const double p = z1 * a + 2 * z2 * b - 1, q = -z1 * a + 2 * z2 * b;
    Mat J(2, 3);
    J << z1 * (z1 * a - 2) + 2 * a, u * z1 / 18 - w * z1 / 4 + 1,
        2 * p * z1 / 175 - 2 * q * z1 / 17 + 2 * z2 * a,  //
        2 * z2 * (z2 * b + 1) / 13 + 2 * b, u * z2 / 18 + w * z2 / 4 + 1,
        4 * p * z2 / 175 + 4 * q * z2 / 17 - 9;
    return J;
  };
  return {std::move(s), PolyhedralCone::Orthant(3)};
}

Entry p13() {
  auto s = test_spec("P13", "GKZ6", 2, 3, v({1, 1}), v({1.5, 1.5}), v({1, 1}), v({1.5, 2}), 30);
  s.objective = [](const Vec& x, const Vec& xi) {
    const double a = x[0], b = x[1], z1 = xi[0], z2 = xi[1];
    return v({a + (b - 1.5) + 0.25 * sin(4 * kPi * (z1 - 1) / 7) + z2 / 100 + a * a,
              2 * std::pow(a - 1, 2) + 2 * b * b + 0.25 * cos(4 * kPi * (z2 - 1) / 7) +
                  2 * z1 / 100 + b * b,
              z1 * a * a + b * b + z1 * z2});
  };
  s.jacobian = [](const Vec& x, const Vec& xi) {
    const double a = x[0], b = x[1], z1 = xi[0];
    Mat J(2, 3);
    J << 1 + 2 * a, 4 * (a - 1), 2 * z1 * a,  //
        1.0, 6 * b, 2 * b;
    return J;
  };
  return {std::move(s), PolyhedralCone::Orthant(3)};
}

Entry p14() {
  auto s = test_spec("P14", "VFM1", 2, 3, v({-2, -2}), v({2, 2}), v({1, 0.5, -0.5}),
                     v({1.5, 1, 2.5}), 20);
  s.objective = [](const Vec& x, const Vec& xi) {
    const double a = x[0], b = x[1], z1 = xi[0], z2 = xi[1], z3 = xi[2];
    return v({z1 * z1 * a * a + z2 * std::pow(b - 1, 2) + z3 + z1 * a * a + b * b,
              a * a + std::pow(z1 * b - 1, 2) + std::pow(a, 4) + z2 * b * b + 1,
              z1 * std::pow(a - 1, 2) + z2 * b * b + z3 + 5 * z1 * a + b + 3});
  };
  s.jacobian = [](const Vec& x, const Vec& xi) {
    const double a = x[0], b = x[1], z1 = xi[0], z2 = xi[1];
    Mat J(2, 3);
    J << 2 * z1 * z1 * a + 2 * z1 * a, 2 * a + 4 * a * a * a, 2 * z1 * (a - 1) + 5 * z1,  //
        2 * z2 * (b - 1) + 2 * b, 2 * z1 * (z1 * b - 1) + 2 * z2 * b, 2 * z2 * b + 1;
    return J;
  };
  return {std::move(s), PolyhedralCone::Orthant(3)};
}

Entry p15() {
  auto s = test_spec("P15", "MHHM2", 2, 3, v({-4, -4}), v({4, 4}), v({-2.5, -2.5, -0.5}),
                     v({2.5, 2.5, 2.5}), 40);
  s.objective = [](const Vec& x, const Vec& xi) {
    const double a = x[0], b = x[1], z1 = xi[0], z2 = xi[1], z3 = xi[2];
    return v({std::pow(z1 * a - 1, 2) + std::pow(z2 * b - 1, 2) + z1 * a * a + b * b,
              std::pow(z2 * a - 1.5, 2) + std::pow(z1 * b - 1, 2) + std::pow(a, 4) + z2 * b * b,
              z2 * std::pow(a - 1, 2) + z1 * std::pow(z2 * b - 1, 2) + z3 + 5 * z1 * a + b});
  };
  s.jacobian = [](const Vec& x, const Vec& xi) {
    const double a = x[0], b = x[1], z1 = xi[0], z2 = xi[1];
    Mat J(2, 3);
    J << 2 * z1 * (z1 * a - 1) + 2 * z1 * a, 2 * z2 * (z2 * a - 1.5) + 4 * a * a * a,
        2 * z2 * (a - 1) + 5 * z1,  //
        2 * z2 * (z2 * b - 1) + 2 * b, 2 * z1 * (z1 * b - 1) + 2 * z2 * b,
        2 * z1 * z2 * (z2 * b - 1) + 1;
    return J;
  };
  return {std::move(s), PolyhedralCone::Orthant(3)};
}

Entry p16() {
  auto s = test_spec("P16", "ZDT1", 10, 3, fill(10, 0.2), fill(10, 0.8), fill(10, -1), fill(10, 1),
                     10);
  s.objective = [](const Vec& x, const Vec& xi) {
    const double f1 = xi.dot(x) + xi.squaredNorm();
    const double f2 = 1 + 9 * xi.cwiseProduct(xi).dot(x);
    return v({f1, f2, 1 - std::sqrt(f1 / f2)});
  };
  s.jacobian = [](const Vec& x, const Vec& xi) {
    const double f1 = xi.dot(x) + xi.squaredNorm();
    const double f2 = 1 + 9 * xi.cwiseProduct(xi).dot(x);
    const Vec g1 = xi;
    const Vec g2 = 9 * xi.cwiseProduct(xi);
    const double ratio = f1 / f2;
    Mat J(x.size(), 3);
    J.col(0) = g1;
    J.col(1) = g2;
    J.col(2) = -(g1 * f2 - f1 * g2) / (f2 * f2) / (2 * std::sqrt(ratio));
    return J;
  };
  return {std::move(s), PolyhedralCone::Orthant(3)};
}

Entry p17() {
  auto s = test_spec("P17", "ZDT2", 10, 3, fill(10, 0.2), fill(10, 0.6), fill(10, -0.8),
                     fill(10, 0.7), 10);
  s.objective = [](const Vec& x, const Vec& xi) {
    const double f1 = xi.dot(x);
    const double f2 = 5 + 10 * xi.dot(x.cwiseProduct(x));
    return v({f1, f2, 2 - (f1 / f2) * (f1 / f2)});
  };
  s.jacobian = [](const Vec& x, const Vec& xi) {
    const double f1 = xi.dot(x);
    const double f2 = 5 + 10 * xi.dot(x.cwiseProduct(x));
    const Vec g1 = xi;
    const Vec g2 = 20 * xi.cwiseProduct(x);
    Mat J(x.size(), 3);
    J.col(0) = g1;
    J.col(1) = g2;
    J.col(2) = -2 * (f1 / f2) * (g1 * f2 - f1 * g2) / (f2 * f2);
    return J;
  };
  return {std::move(s), PolyhedralCone::Orthant(3)};
}

Entry p18() {
  auto s = test_spec("P18", "FDS", 10, 3, fill(10, -2), fill(10, 2), fill(10, -1), fill(10, 2), 10);
  s.objective = [](const Vec& x, const Vec& xi) {
    const auto n = x.size();
    const double nd = static_cast<double>(n);
    double f1 = 0, f3 = 0;
    for (Eigen::Index k = 0; k < n; ++k) {
      const double i = static_cast<double>(k + 1);
      f1 += i * std::pow(xi[k] * x[k] - i, 4);
      f3 += i * (nd - i + 1) * exp(-xi[k] * x[k]);
    }
    return v({f1 / nd, exp(x.sum() / nd), f3 / (nd * (nd + 1))});
  };
  s.jacobian = [](const Vec& x, const Vec& xi) {
    const auto n = x.size();
    const double nd = static_cast<double>(n);
    Mat J(n, 3);
    const double f2 = exp(x.sum() / nd);
    for (Eigen::Index k = 0; k < n; ++k) {
      const double i = static_cast<double>(k + 1);
      J(k, 0) = 4 * i * std::pow(xi[k] * x[k] - i, 3) * xi[k] / nd;
      J(k, 1) = f2 / nd;
      J(k, 2) = -i * (nd - i + 1) * xi[k] * exp(-xi[k] * x[k]) / (nd * (nd + 1));
    }
    return J;
  };
  return {std::move(s), PolyhedralCone::Orthant(3)};
}

const std::vector<std::pair<std::string, Builder>>& catalog() {
  static const std::vector<std::pair<std::string, Builder>> entries = {
      {"EX1", ex1}, {"EX2", ex2}, {"EX3", ex3}, {"EX4", ex4},    {"P1", p1},   {"P2", p2},
      {"P3", p3},   {"P4", p4},   {"P5", p5},   {"P6", p6},      {"P7", p7},   {"P8", p8},
      {"P9", p9},   {"P10", p10}, {"P11", p11}, {"P12", p12},    {"P13", p13}, {"P14", p14},
      {"P15", p15}, {"P16", p16}, {"P17", p17}, {"P18", p18},
  };
  return entries;
}

}  // namespace

UncertainProblem registry_get(const std::string& name) {
  for (const auto& [key, build] : catalog()) {
    if (key == name) {
      Entry e = build();
      return UncertainProblem(std::move(e.spec), std::move(e.cone));
    }
  }
  std::string known;
  for (const auto& [key, build] : catalog()) known += (known.empty() ? "" : ", ") + key;
  throw LookupError("unknown problem '" + name + "'; available: " + known);
}

std::vector<std::string> registry_names() {
  std::vector<std::string> names;
  for (const auto& [key, build] : catalog()) names.push_back(key);
  return names;
}

}  // namespace robustmo
