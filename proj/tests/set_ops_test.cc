#include <gtest/gtest.h>

#include <random>

#include "robustmo/errors.hpp"
#include "robustmo/set_ops.hpp"
#include "test_support.hpp"

namespace robustmo {
namespace {

std::vector<ImagePoint> image_of(const std::vector<Vec>& C) {
  std::vector<ImagePoint> out;
  for (std::size_t i = 0; i < C.size(); ++i) out.push_back({i, C[i]});
  return out;
}

Vec v2(double a, double b) { return (Vec(2) << a, b).finished(); }

using Ids = std::vector<std::size_t>;

TEST(MaxElements, DirectDominance) {
  const auto K = PolyhedralCone::Orthant(2);
  const auto si = max_elements(image_of({v2(0, 0), v2(1, 1)}), K);
  EXPECT_EQ(si.maximal_ids, Ids({1}));
  EXPECT_EQ(si.omega(), 1u);
}

TEST(MaxElements, IncomparablePair) {
  const auto si = max_elements(image_of({v2(1, 0), v2(0, 1)}), PolyhedralCone::Orthant(2));
  EXPECT_EQ(si.maximal_ids, Ids({0, 1}));
  EXPECT_EQ(si.omega(), 2u);
  EXPECT_EQ(si.weak_maximal_ids, Ids({0, 1}));
}

TEST(MaxElements, OneDominatesAll) {
  const auto si = max_elements(image_of({v2(1, 0), v2(0, 1), v2(0.5, 0.5), v2(2, 2)}),
                               PolyhedralCone::Orthant(2));
  EXPECT_EQ(si.maximal_ids, Ids({3}));
  EXPECT_EQ(si.omega(), 1u);
}

TEST(MaxElements, BoundaryDominanceSeparatesWeak) {
  const auto K = PolyhedralCone::Orthant(2);
  const auto C = image_of({v2(0, 0), v2(1, 0)});
  EXPECT_EQ(weak_max_elements(C, K), Ids({0, 1}));
  const auto si = max_elements(C, K);
  EXPECT_EQ(si.maximal_ids, Ids({1}));
  EXPECT_EQ(si.weak_maximal_ids, Ids({0, 1}));
  EXPECT_EQ(weak_max_elements(image_of({v2(0, 0), v2(1, 1)}), K), Ids({1}));
}

TEST(MaxElements, EqualValuesShareAGroup) {
  const auto si = max_elements(
      image_of({v2(1, 0), v2(0, 1), v2(1, 0), v2(0, 1 + 1e-12), v2(-1, -1)}),
      PolyhedralCone::Orthant(2));
  EXPECT_EQ(si.maximal_ids, Ids({0, 1, 2, 3}));
  ASSERT_EQ(si.omega(), 2u);
  EXPECT_EQ(si.value_groups[0], Ids({0, 2}));
  EXPECT_EQ(si.value_groups[1], Ids({1, 3}));
  EXPECT_EQ(si.maximal_value(1), v2(0, 1));
  EXPECT_EQ(si.value_of(3), v2(0, 1 + 1e-12));
}

TEST(MaxElements, UnsortedInputIsReordered) {
  std::vector<ImagePoint> pts{{1, v2(0, 0)}, {0, v2(1, 1)}};
  const auto si = max_elements(pts, PolyhedralCone::Orthant(2));
  EXPECT_EQ(si.points[0].scenario, 0u);
  EXPECT_EQ(si.maximal_ids, Ids({0}));
}

TEST(MaxElements, ExampleConeDiffersFromOrthant) {
  // (1,0) - (0,0) is in R^2_+ but not in the example cone.
  const auto C = image_of({v2(0, 0), v2(1, 0)});
  EXPECT_EQ(max_elements(C, testing::example_cone()).maximal_ids, Ids({0, 1}));
}

TEST(MaxElements, MatchesBruteForceOracle) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> size(1, 12);
  std::uniform_int_distribution<int> coarse(-3, 3);
  for (int cone_id = 0; cone_id < 2; ++cone_id) {
    const auto K = cone_id == 0 ? PolyhedralCone::Orthant(2) : testing::example_cone();
    for (int t = 0; t < 300; ++t) {
      std::vector<Vec> C;
      const int k = size(rng);
      for (int i = 0; i < k; ++i) {
        // integer coordinates make ties and boundary cases common
        C.push_back(t % 2 ? v2(coarse(rng), coarse(rng)) : testing::random_vec(2, rng));
      }
      const auto si = max_elements(image_of(C), K);
      EXPECT_EQ(si.maximal_ids, testing::brute_force_max(C, K));
      for (auto id : si.maximal_ids) {
        EXPECT_TRUE(std::binary_search(si.weak_maximal_ids.begin(), si.weak_maximal_ids.end(), id));
      }
      std::size_t grouped = 0;
      for (const auto& g : si.value_groups) {
        ASSERT_FALSE(g.empty());
        grouped += g.size();
      }
      EXPECT_EQ(grouped, si.maximal_ids.size());
    }
  }
}

TEST(MaxElements, SetMinusConeIdentity) {
  // C - K = Max(C, K) - K on random finite sets
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> coarse(-3, 3);
  const auto K = testing::example_cone();
  for (int t = 0; t < 100; ++t) {
    std::vector<Vec> C;
    for (int i = 0; i < 8; ++i) C.push_back(v2(coarse(rng), coarse(rng)));
    const auto si = max_elements(image_of(C), K);
    std::vector<Vec> M;
    for (auto id : si.maximal_ids) M.push_back(C[id]);
    for (int q = 0; q < 20; ++q) {
      const Vec z = testing::random_vec(2, rng, 3.0);
      EXPECT_EQ(testing::in_set_minus_cone(C, z, K), testing::in_set_minus_cone(M, z, K));
    }
  }
}

ScenarioImage with_groups(std::vector<std::vector<std::size_t>> groups) {
  ScenarioImage si;
  si.value_groups = std::move(groups);
  return si;
}

TEST(PartitionSet, Products) {
  EXPECT_EQ(partition_set(with_groups({{2}})).tuples, std::vector<Beta>({{2}}));
  EXPECT_EQ(partition_set(with_groups({{1, 3}, {2}})).tuples, std::vector<Beta>({{1, 2}, {3, 2}}));
  const auto four = partition_set(with_groups({{1, 2}, {3, 4}}));
  EXPECT_EQ(four.tuples, std::vector<Beta>({{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
}

TEST(PartitionSet, CapacityLimit) {
  std::vector<std::vector<std::size_t>> groups(13, {0, 1});  // 8192 tuples
  EXPECT_THROW(partition_set(with_groups(groups)), CapacityError);
  EXPECT_NO_THROW(partition_set(with_groups(groups), 8192));
}

UncertainProblem constant_problem() {
  UncertainProblem::Spec s;
  s.name = "const";
  s.n = 1;
  s.m = 2;
  s.scenarios = {Vec::Zero(1), Vec::Ones(1)};
  s.objective = [](const Vec& x, const Vec&) { return (Vec(2) << x[0], -x[0]).finished(); };
  return UncertainProblem(std::move(s), PolyhedralCone::Orthant(2));
}

TEST(Regularity, ConstantInScenarioIsRegular) {
  const auto rep = check_regularity(constant_problem(), Vec::Zero(1), 0.1, 50, 1);
  EXPECT_TRUE(rep.max_equals_weak_max);
  EXPECT_EQ(rep.omega_at_x, 1u);
  EXPECT_TRUE(rep.omega_constant);
  EXPECT_TRUE(rep.regular());
  EXPECT_EQ(rep.samples, 50u);
}

TEST(Regularity, BoundaryDominatedPointIsNotRegular) {
  UncertainProblem::Spec s;
  s.name = "boundary";
  s.n = 1;
  s.m = 2;
  s.scenarios = {Vec::Zero(1), Vec::Ones(1)};
  // scenario 0 gives (x, 0), scenario 1 gives (x + 1, 0): WMax has both
  s.objective = [](const Vec& x, const Vec& xi) {
    return (Vec(2) << x[0] + xi[0], 0.0).finished();
  };
  const UncertainProblem p(std::move(s), PolyhedralCone::Orthant(2));
  const auto rep = check_regularity(p, Vec::Zero(1), 1e-6, 10, 1);
  EXPECT_FALSE(rep.max_equals_weak_max);
  EXPECT_FALSE(rep.regular());
}

}  // namespace
}  // namespace robustmo
