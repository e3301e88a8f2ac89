#include <gtest/gtest.h>

#include <random>

#include "robustmo/cone_order.hpp"
#include "robustmo/errors.hpp"
#include "test_support.hpp"

namespace robustmo {
namespace {

using testing::example_cone;

Vec v2(double a, double b) {
  Vec z(2);
  z << a, b;
  return z;
}

TEST(Cone, OrthantMembership) {
  const auto K = PolyhedralCone::Orthant(2);
  EXPECT_TRUE(K.contains(v2(1, 2)));
  EXPECT_FALSE(K.contains(v2(1, -0.1)));
  EXPECT_TRUE(K.contains_interior(v2(1, 1)));
  EXPECT_FALSE(K.contains_interior(v2(1, 0)));
  EXPECT_TRUE(K.contains(v2(1, 0)));
  EXPECT_TRUE(K.has_nonnegative_rows());
}

TEST(Cone, ExampleConeMembership) {
  const auto K = example_cone();
  EXPECT_TRUE(K.contains(v2(1, 2)));
  EXPECT_TRUE(K.contains_interior(v2(1, 1)));
  EXPECT_FALSE(K.contains(v2(1, 0)));  // row 2: -1 < 0
  EXPECT_TRUE(K.contains(v2(3, 1)));   // boundary of row 2
  EXPECT_FALSE(K.contains_interior(v2(3, 1)));
  EXPECT_FALSE(K.has_nonnegative_rows());
}

TEST(Cone, GerstewitzExamples) {
  const auto O = PolyhedralCone::Orthant(2);
  const auto K = example_cone();
  EXPECT_DOUBLE_EQ(O.gerstewitz(Vec::Zero(2)), 0.0);
  EXPECT_DOUBLE_EQ(K.gerstewitz(Vec::Zero(2)), 0.0);
  EXPECT_DOUBLE_EQ(O.gerstewitz(v2(3, -1)), 3.0);
  EXPECT_DOUBLE_EQ(K.gerstewitz(v2(1, 0)), 1.5);
}

TEST(Cone, LipschitzConstant) {
  EXPECT_DOUBLE_EQ(PolyhedralCone::Orthant(2).lipschitz_constant(), 1.0);
  EXPECT_DOUBLE_EQ(example_cone().lipschitz_constant(), std::sqrt(10.0) / 2.0);
}

TEST(Cone, ConstructionErrors) {
  Mat one_row(1, 2);
  one_row << 1, 1;
  EXPECT_THROW(PolyhedralCone(one_row, Vec::Ones(2)), ConstructionError);

  Mat rows(2, 2);
  rows << 1, 0, 0, 1;
  EXPECT_THROW(PolyhedralCone(rows, v2(1, -1)), ConstructionError);  // A e > 0 fails
  EXPECT_THROW(PolyhedralCone(rows, Vec::Ones(3)), ConstructionError);
  EXPECT_THROW(PolyhedralCone(rows, Vec::Ones(2), -1.0), ConstructionError);

  Mat degenerate(3, 2);  // rank 1: contains the line {(t, -t)}
  degenerate << 1, 1, 2, 2, 3, 3;
  EXPECT_THROW(PolyhedralCone(degenerate, Vec::Ones(2)), ConstructionError);
}

TEST(Cone, DimensionMismatchIsArgumentError) {
  const auto K = PolyhedralCone::Orthant(2);
  EXPECT_THROW(K.contains(Vec::Ones(3)), ArgumentError);
  EXPECT_THROW(K.gerstewitz(Vec::Ones(1)), ArgumentError);
}

TEST(Cone, NonSquarePointedCone) {
  Mat rows(3, 2);
  rows << 1, 0, 0, 1, 1, 1;
  const PolyhedralCone K(rows, Vec::Ones(2));
  EXPECT_EQ(K.num_rows(), 3);
  EXPECT_TRUE(K.contains(v2(0, 0)));
  EXPECT_DOUBLE_EQ(K.gerstewitz(v2(2, 0)), 2.0);
}

class ConeProperties : public ::testing::TestWithParam<int> {
 protected:
  PolyhedralCone cone() const {
    return GetParam() == 0 ? PolyhedralCone::Orthant(2) : example_cone();
  }
};

TEST_P(ConeProperties, ClosedFormMatchesBisection) {
  const auto K = cone();
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Vec z = testing::random_vec(2, rng, 3.0);
    EXPECT_NEAR(K.gerstewitz(z), testing::gerstewitz_bisection(K, z), 1e-8);
  }
}

TEST_P(ConeProperties, SublinearAndMonotone) {
  const auto K = cone();
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  const double L = K.lipschitz_constant();
  for (int t = 0; t < 200; ++t) {
    const Vec y = testing::random_vec(2, rng, 2.0);
    const Vec z = testing::random_vec(2, rng, 2.0);
    const double a = u(rng);
    EXPECT_LE(K.gerstewitz(y + z), K.gerstewitz(y) + K.gerstewitz(z) + 1e-9);
    EXPECT_NEAR(K.gerstewitz(a * z), a * K.gerstewitz(z), 1e-9);
    const Vec k = testing::random_cone_element(K, rng);
    EXPECT_TRUE(K.contains(k));
    EXPECT_LE(K.gerstewitz(z), K.gerstewitz(z + k) + 1e-9);
    const Vec ki = testing::random_cone_element(K, rng, true);
    EXPECT_LT(K.gerstewitz(z), K.gerstewitz(z + ki));
    EXPECT_LE(std::abs(K.gerstewitz(y) - K.gerstewitz(z)), L * (y - z).norm() + 1e-9);
  }
}

TEST_P(ConeProperties, Representability) {
  const auto K = cone();
  std::mt19937_64 rng(13);
  for (int t = 0; t < 500; ++t) {
    const Vec z = testing::random_vec(2, rng);
    const double th = K.gerstewitz(z);
    EXPECT_EQ(th <= 0, K.contains(-z) || std::abs(th) <= K.tol());
    EXPECT_EQ(th < 0, K.contains_interior(-z) || std::abs(th) <= K.tol());
  }
  // -z on the boundary of K: theta is 0, so <= 0 holds and < 0 does not
  const Mat& A = K.rows();
  Vec ray(2);
  ray << -A(0, 1), A(0, 0);
  if (A.row(1).dot(ray) < 0) ray = -ray;
  EXPECT_NEAR(K.gerstewitz(-ray), 0.0, 1e-15);
  EXPECT_TRUE(K.contains(ray));
  EXPECT_FALSE(K.contains_interior(ray));
}

INSTANTIATE_TEST_SUITE_P(BothCones, ConeProperties, ::testing::Values(0, 1));

}  // namespace
}  // namespace robustmo
