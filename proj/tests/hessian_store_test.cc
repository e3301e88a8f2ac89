#include <gtest/gtest.h>

#include <random>

#include "robustmo/errors.hpp"
#include "robustmo/hessian_store.hpp"
#include "test_support.hpp"

namespace robustmo {
namespace {

Vec v2(double a, double b) { return (Vec(2) << a, b).finished(); }

Mat random_spd(int n, std::mt19937_64& rng) {
  Mat A(n, n);
  for (int i = 0; i < n; ++i) A.col(i) = testing::random_vec(n, rng);
  return A * A.transpose() + 0.1 * Mat::Identity(n, n);
}

TEST(Bfgs, IdentityInit) {
  HessianStore store(3, 2, 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (int l = 0; l < 2; ++l) EXPECT_EQ(store.block(i, l), Mat::Identity(2, 2));
}

TEST(Bfgs, SecantAlreadySatisfied) {
  std::mt19937_64 rng(1);
  Mat B = random_spd(3, rng);
  const Mat before = B;
  const Vec s = testing::random_vec(3, rng);
  EXPECT_EQ(bfgs_update_block(B, s, before * s, 1e-8), BlockStatus::Applied);
  EXPECT_LE((B - before).lpNorm<Eigen::Infinity>(), 1e-12 * before.norm());
}

TEST(Bfgs, HandComputedUpdate) {
  Mat B = Mat::Identity(2, 2);
  EXPECT_EQ(bfgs_update_block(B, v2(1, 0), v2(2, 0), 1e-8), BlockStatus::Applied);
  EXPECT_EQ(B, (Mat(2, 2) << 2, 0, 0, 1).finished());
  EXPECT_EQ(B * v2(1, 0), v2(2, 0));
}

TEST(Bfgs, CurvatureSafeguardSkips) {
  Mat B = Mat::Identity(2, 2);
  EXPECT_EQ(bfgs_update_block(B, v2(1, 0), v2(-1, 0), 1e-8), BlockStatus::Skipped);
  EXPECT_EQ(B, Mat::Identity(2, 2));
  // orthogonal pair: s^T y = 0 fails the strict inequality
  EXPECT_EQ(bfgs_update_block(B, v2(1, 0), v2(0, 1), 1e-8), BlockStatus::Skipped);
}

TEST(Bfgs, RandomUpdatesKeepSecantSymmetryAndPd) {
  std::mt19937_64 rng(2);
  const double ctol = 1e-8;
  int applied = 0, skipped = 0;
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + t % 5;
    Mat B = random_spd(n, rng);
    const Mat before = B;
    const Vec s = testing::random_vec(n, rng);
    const Vec y = testing::random_vec(n, rng);
    const bool should_apply = s.dot(y) > ctol * s.norm() * y.norm();
    const auto st = bfgs_update_block(B, s, y, ctol);
    if (!should_apply) {
      EXPECT_EQ(st, BlockStatus::Skipped);
      EXPECT_EQ(B, before);
      ++skipped;
      continue;
    }
    ASSERT_EQ(st, BlockStatus::Applied);
    ++applied;
    EXPECT_LE((B * s - y).norm(), 1e-8 * y.norm());
    EXPECT_LE((B - B.transpose()).lpNorm<Eigen::Infinity>(), 1e-12);
    EXPECT_EQ(Eigen::LLT<Mat>(B).info(), Eigen::Success);
  }
  EXPECT_GT(applied, 100);
  EXPECT_GT(skipped, 100);
}

TEST(Bfgs, InvariantToJointScalingOfPair) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    Mat B1 = random_spd(3, rng);
    Mat B2 = B1;
    const Vec s = testing::random_vec(3, rng);
    Vec y = testing::random_vec(3, rng);
    if (s.dot(y) <= 0) y = -y;
    bfgs_update_block(B1, s, y, 1e-8);
    bfgs_update_block(B2, 7.5 * s, 7.5 * y, 1e-8);
    EXPECT_LE((B1 - B2).lpNorm<Eigen::Infinity>(), 1e-10 * B1.norm());
  }
}

TEST(Bfgs, FloorEigenvalues) {
  const Mat M = (Mat(2, 2) << 1, 0, 0, -1).finished();
  const Mat F = floor_eigenvalues(M, 1e-6);
  EXPECT_NEAR(F(0, 0), 1.0, 1e-14);
  EXPECT_NEAR(F(1, 1), 1e-6, 1e-14);
  EXPECT_NEAR(F(0, 1), 0.0, 1e-14);
}

TEST(Bfgs, FiniteDifferenceInit) {
  const auto p = testing::quadratic_problem(Mat::Constant(1, 1, 2.0), Vec::Zero(1));
  const auto store = init_store(p, Vec::Ones(1), HessianInit::FiniteDifference);
  EXPECT_NEAR(store.block(0, 0)(0, 0), 2.0, 1e-4);

  const Mat H = (Mat(2, 2) << 1, 0, 0, -1).finished();
  const auto indefinite = testing::quadratic_problem(H, Vec::Zero(2));
  const auto floored = init_store(indefinite, Vec::Ones(2), HessianInit::FiniteDifference);
  EXPECT_NEAR(floored.block(0, 0)(0, 0), 1.0, 1e-6);
  EXPECT_NEAR(floored.block(0, 0)(1, 1), 1e-6, 1e-8);
}

TEST(Bfgs, StoreUpdatesOneScenario) {
  HessianStore store(2, 2, 2);
  const auto st = store.bfgs_update(1, v2(1, 0), {v2(2, 0), v2(-1, 0)});
  EXPECT_EQ(st[0], BlockStatus::Applied);
  EXPECT_EQ(st[1], BlockStatus::Skipped);
  EXPECT_EQ(store.block(1, 0), (Mat(2, 2) << 2, 0, 0, 1).finished());
  EXPECT_EQ(store.block(1, 1), Mat::Identity(2, 2));
  EXPECT_EQ(store.block(0, 0), Mat::Identity(2, 2));
  EXPECT_EQ(store.quadratic_forms(1, v2(1, 1)), v2(3, 2));
  EXPECT_THROW(store.bfgs_update(0, Vec::Zero(2), {v2(1, 0), v2(1, 0)}), ArgumentError);
  EXPECT_THROW(store.block(2, 0), ArgumentError);
}

TEST(Bfgs, ConeGuardRevertsLossOfConePositivity) {
  // Rows (3,-1) and (-1,3): the aggregate 3 B1 - B2 must stay PD.
  const auto K = testing::example_cone();
  HessianStore store(1, 2, 1);
  ASSERT_TRUE(store.cone_positive_definite(0, K));
  Vec s = Vec::Ones(1), y1 = Vec::Constant(1, 0.1), y2 = Vec::Constant(1, 10.0);
  // blockwise: B1 -> 0.1, B2 -> 10; 3 * 0.1 - 10 < 0
  const auto st = store.bfgs_update(0, s, {y1, y2}, &K);
  EXPECT_EQ(st[0], BlockStatus::Reverted);
  EXPECT_EQ(st[1], BlockStatus::Reverted);
  EXPECT_EQ(store.block(0, 0)(0, 0), 1.0);
  EXPECT_EQ(store.block(0, 1)(0, 0), 1.0);

  // mild update keeps both aggregates PD and is kept
  const auto ok = store.bfgs_update(0, s, {Vec::Constant(1, 1.2), Vec::Constant(1, 1.5)}, &K);
  EXPECT_EQ(ok[0], BlockStatus::Applied);
  EXPECT_NEAR(store.block(0, 1)(0, 0), 1.5, 1e-15);
  EXPECT_TRUE(store.cone_positive_definite(0, K));

  // without the cone the drastic update is applied blockwise
  HessianStore plain(1, 2, 1);
  plain.bfgs_update(0, s, {y1, y2});
  EXPECT_NEAR(plain.block(0, 1)(0, 0), 10.0, 1e-12);
}

}  // namespace
}  // namespace robustmo
