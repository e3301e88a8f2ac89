#include <gtest/gtest.h>

#include <cmath>

#include "robustmo/errors.hpp"
#include "robustmo/registry.hpp"
#include "robustmo/solver.hpp"
#include "test_support.hpp"

namespace robustmo {
namespace {

Vec v1(double a) { return Vec::Constant(1, a); }

UncertainProblem scalar(std::function<double(double)> f, std::function<double(double)> df) {
  UncertainProblem::Spec s;
  s.name = "scalar";
  s.n = 1;
  s.m = 1;
  s.scenarios = {Vec::Zero(1)};
  s.objective = [f](const Vec& x, const Vec&) { return v1(f(x[0])); };
  s.jacobian = [df](const Vec& x, const Vec&) -> Mat { return Mat::Constant(1, 1, df(x[0])); };
  return UncertainProblem(std::move(s), PolyhedralCone::Orthant(1));
}

TEST(Armijo, FullStepOnQuadratic) {
  // F = x^2 at x = 1, B = 2, p = -1: model -2 + 1 = -1; tau = 1 gives 0 <= 0.9
  const auto p = scalar([](double x) { return x * x; }, [](double x) { return 2 * x; });
  const auto tau = armijo_step(p, v1(1), {0}, v1(-1), {v1(1)}, {v1(-1)}, 0.1, 30);
  ASSERT_TRUE(tau.has_value());
  EXPECT_EQ(*tau, 1.0);
}

TEST(Armijo, LinearModelIsExact) {
  const auto p = scalar([](double x) { return 3 * x + 1; }, [](double) { return 3.0; });
  const auto tau = armijo_step(p, v1(0), {0}, v1(-2), {v1(1)}, {v1(-6)}, 0.5, 30);
  ASSERT_TRUE(tau.has_value());
  EXPECT_EQ(*tau, 1.0);
}

TEST(Armijo, QuarticNeedsTwoHalvings) {
  // F = x^4 at x = 1, p = -4, model 4(-4) + 1/2 * 16 = -8:
  // tau = 1: 81 > 0.2; tau = 1/2: 1 > 0.6; tau = 1/4: 0 <= 0.8
  const auto p = scalar([](double x) { return std::pow(x, 4); },
                        [](double x) { return 4 * std::pow(x, 3); });
  const auto tau = armijo_step(p, v1(1), {0}, v1(-4), {v1(1)}, {v1(-8)}, 0.1, 30);
  ASSERT_TRUE(tau.has_value());
  EXPECT_EQ(*tau, 0.25);
}

TEST(Armijo, AscentDirectionHitsFloor) {
  const auto p = scalar([](double x) { return x * x; }, [](double x) { return 2 * x; });
  EXPECT_FALSE(armijo_step(p, v1(1), {0}, v1(1), {v1(1)}, {v1(-1)}, 0.1, 10).has_value());
}

TEST(Armijo, EvaluationFailureRejectsTrial) {
  const auto p = scalar([](double x) { return x > 1.5 ? std::nan("") : -x; },
                        [](double) { return -1.0; });
  // tau = 1 lands at x = 2 (NaN), tau = 1/2 at x = 1.5 is fine
  const auto tau = armijo_step(p, v1(1), {0}, v1(1), {v1(-1)}, {v1(-1)}, 0.1, 30);
  ASSERT_TRUE(tau.has_value());
  EXPECT_EQ(*tau, 0.5);
}

// Scenario 0 is the unique maximum at x = 0; scenario 1 sits 1e-6 below it
// and rises steeply along the descent direction of scenario 0.
UncertainProblem near_tie() {
  UncertainProblem::Spec s;
  s.name = "near_tie";
  s.n = 1;
  s.m = 1;
  s.scenarios = {v1(0), v1(1)};
  s.objective = [](const Vec& x, const Vec& xi) {
    return xi[0] == 0 ? v1((x[0] - 1) * (x[0] - 1) + 1) : v1(2 - 1e-6 + 10 * x[0]);
  };
  s.jacobian = [](const Vec& x, const Vec& xi) -> Mat {
    return Mat::Constant(1, 1, xi[0] == 0 ? 2 * (x[0] - 1) : 10.0);
  };
  return UncertainProblem(std::move(s), PolyhedralCone::Orthant(1));
}

TEST(Armijo, MeritGuardShortensStep) {
  // p = 2 from B = 1, model -4 + 2 = -2 = phi, merit 2 at x = 0
  const auto p = near_tie();
  const auto literal = armijo_step(p, v1(0), {0}, v1(2), {v1(2)}, {v1(-2)}, 0.1, 30);
  ASSERT_TRUE(literal.has_value());
  EXPECT_EQ(*literal, 0.5);

  // scenario 1 needs 20 tau <= 1e-6 - 0.2 tau, first met at 2^-25
  const MeritGuard guard{2.0, -2.0};
  const auto guarded = armijo_step(p, v1(0), {0}, v1(2), {v1(2)}, {v1(-2)}, 0.1, 30, &guard);
  ASSERT_TRUE(guarded.has_value());
  EXPECT_EQ(*guarded, std::ldexp(1.0, -25));
  EXPECT_FALSE(armijo_step(p, v1(0), {0}, v1(2), {v1(2)}, {v1(-2)}, 0.1, 20, &guard));
}

TEST(Solver, MeritGuardKeepsMeritDescent) {
  const auto p = near_tie();
  SolveConfig config;
  config.max_iters = 20;
  for (const bool guard : {false, true}) {
    config.merit_guard = guard;
    const auto trace = solve(p, v1(0), config);
    ASSERT_GE(trace.records.size(), 2u);
    const auto& r0 = trace.records[0];
    const double bound = r0.merit + config.gamma * *r0.tau * r0.phi;
    if (guard) {
      EXPECT_LE(trace.records[1].merit, bound + 1e-10);
    } else {
      EXPECT_GT(trace.records[1].merit, bound);
    }
  }
}

TEST(Solver, StationaryStartStopsImmediately) {
  const Mat H = (Mat(2, 2) << 2, 0, 0, 1).finished();
  const Vec c = (Vec(2) << 1, 2).finished();
  const auto trace = solve(testing::quadratic_problem(H, c), c);
  EXPECT_EQ(trace.status, SolveStatus::StationaryPoint);
  EXPECT_EQ(trace.iterations(), 0);
  ASSERT_EQ(trace.records.size(), 1u);
  EXPECT_FALSE(trace.terminal().tau.has_value());
}

TEST(Solver, ConvexQuadraticConverges) {
  const Mat H = (Mat(2, 2) << 3, 1, 1, 2).finished();
  const Vec c = (Vec(2) << -1, 0.5).finished();
  const auto prob = testing::quadratic_problem(H, c);
  const auto trace = solve(prob, (Vec(2) << 4, -3).finished());
  EXPECT_EQ(trace.status, SolveStatus::StationaryPoint);
  EXPECT_LE((trace.terminal().x - c).norm(), 1e-3);

  SolveConfig exact;
  exact.hessian_init = HessianInit::FiniteDifference;
  const auto newton = solve(prob, (Vec(2) << 4, -3).finished(), exact);
  EXPECT_EQ(newton.status, SolveStatus::StationaryPoint);
  EXPECT_EQ(newton.iterations(), 1);
  EXPECT_LE((newton.terminal().x - c).norm(), 1e-4);
}

TEST(Solver, Figure1Start) {
  const auto prob = registry_get("EX1");
  const auto trace = solve(prob, v1(-2.8372));
  EXPECT_EQ(trace.status, SolveStatus::StationaryPoint);
  EXPECT_GE(trace.iterations(), 1);
  for (std::size_t k = 1; k < trace.records.size(); ++k) {
    EXPECT_LT(trace.records[k].merit, trace.records[k - 1].merit);
  }
}

TEST(Solver, TraceRecordsAreConsistent) {
  const auto prob = registry_get("EX2");
  const auto trace = solve(prob, (Vec(2) << 1.2, 0.3).finished());
  ASSERT_FALSE(trace.records.empty());
  for (std::size_t k = 0; k + 1 < trace.records.size(); ++k) {
    const auto& r = trace.records[k];
    ASSERT_TRUE(r.tau.has_value());
    EXPECT_EQ(r.k, static_cast<int>(k));
    EXPECT_LE((trace.records[k + 1].x - (r.x + *r.tau * r.p)).norm(), 1e-15);
    EXPECT_EQ(r.model.size(), r.beta.size());
    EXPECT_EQ(r.beta.size(), r.omega);
    EXPECT_LT(r.phi, 0.0);
    EXPECT_NEAR(r.p_norm, r.p.norm(), 1e-15);
  }
}

TEST(Solver, MaxItersAndConfigErrors) {
  SolveConfig cfg;
  cfg.max_iters = 0;
  const auto trace = solve(registry_get("EX1"), v1(-2.8372), cfg);
  EXPECT_EQ(trace.status, SolveStatus::MaxIters);
  EXPECT_EQ(trace.iterations(), 0);

  SolveConfig bad;
  bad.gamma = 1.0;
  EXPECT_THROW(solve(registry_get("EX1"), v1(0), bad), ArgumentError);
  EXPECT_THROW(solve(registry_get("EX1"), Vec::Zero(2)), ArgumentError);
}

TEST(Solver, EvaluationFailureEndsWithError) {
  const auto p = scalar([](double x) { return std::log(x); }, [](double x) { return 1 / x; });
  const auto trace = solve(p, v1(-1));
  EXPECT_EQ(trace.status, SolveStatus::Error);
  EXPECT_FALSE(trace.message.empty());
}

TEST(Solver, MeritFunctional) {
  const auto K = testing::example_cone();
  std::vector<ImagePoint> image{{0, (Vec(2) << 1, 0).finished()}, {1, (Vec(2) << 0, 0).finished()}};
  EXPECT_DOUBLE_EQ(merit(K, image), 1.5);
}

}  // namespace
}  // namespace robustmo
