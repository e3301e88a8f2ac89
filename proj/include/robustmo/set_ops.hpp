#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "robustmo/cone_order.hpp"
#include "robustmo/problem.hpp"

namespace robustmo {

/// Tolerance (infinity norm) under which two image points count as one value.
inline constexpr double kValueTol = 1e-9;

/// Default limit on the number of partition-set tuples.
inline constexpr std::size_t kPartitionCap = 4096;

/// F_U(x) with its maximal-element structure.
struct ScenarioImage {
  std::vector<ImagePoint> points;
  /// Sorted scenario indices whose image is maximal.
  std::vector<std::size_t> maximal_ids;
  /// Sorted scenario indices whose image is weakly maximal.
  std::vector<std::size_t> weak_maximal_ids;
  /// One group of scenario indices per distinct maximal value, ordered by the
  /// smallest index in each group; every group is sorted.
  std::vector<std::vector<std::size_t>> value_groups;

  std::size_t omega() const { return value_groups.size(); }

  /// Value of the j-th distinct maximal element.
  const Vec& maximal_value(std::size_t j) const;

  /// Image value of scenario i (points are stored in scenario order).
  const Vec& value_of(std::size_t scenario) const;
};

/// Selects one scenario per distinct maximal value.
using Beta = std::vector<std::size_t>;

struct PartitionSet {
  std::vector<Beta> tuples;
};

/// Max(F_U(x), K) by pairwise comparison. A point is maximal when no point
/// with a different value (beyond value_tol) dominates it in the cone order.
/// Also fills weak_maximal_ids.
ScenarioImage max_elements(std::vector<ImagePoint> image, const PolyhedralCone& cone,
                           double value_tol = kValueTol);

/// Indices of WMax(F_U(x), K): no other point lies in z + int K.
std::vector<std::size_t> weak_max_elements(const std::vector<ImagePoint>& image,
                                           const PolyhedralCone& cone);

/// Cartesian product of the value groups in lexicographic order. Throws
/// CapacityError if the product exceeds `cap` tuples.
PartitionSet partition_set(const ScenarioImage& si, std::size_t cap = kPartitionCap);

/// Convenience: evaluate the image at x and compute its maximal structure.
ScenarioImage scenario_image(const UncertainProblem& prob, const Vec& x,
                             double value_tol = kValueTol);

struct RegularityReport {
  bool max_equals_weak_max = false;
  std::size_t omega_at_x = 0;
  std::size_t omega_min = 0;
  std::size_t omega_max = 0;
  std::size_t samples = 0;
  /// omega_min == omega_max == omega_at_x over the sampled ball.
  bool omega_constant = false;
  bool regular() const { return max_equals_weak_max && omega_constant; }
};

/// Sampling diagnostic for regularity: compares Max and WMax at x and samples
/// omega at uniform points of the ball of given radius. Not a certificate.
RegularityReport check_regularity(const UncertainProblem& prob, const Vec& x, double radius,
                                  std::size_t samples, std::uint64_t seed = 0);

}  // namespace robustmo
