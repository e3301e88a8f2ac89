#include "robustmo/set_ops.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "robustmo/errors.hpp"

namespace robustmo {

const Vec& ScenarioImage::maximal_value(std::size_t j) const {
  return value_of(value_groups.at(j).front());
}

const Vec& ScenarioImage::value_of(std::size_t scenario) const {
  const ImagePoint& pt = points.at(scenario);
  if (pt.scenario != scenario) throw ArgumentError("image points are not in scenario order");
  return pt.value;
}

std::vector<std::size_t> weak_max_elements(const std::vector<ImagePoint>& image,
                                           const PolyhedralCone& cone) {
  std::vector<std::size_t> out;
  for (const auto& z : image) {
    bool dominated = false;
    for (const auto& y : image) {
      if (cone.contains_interior(y.value - z.value)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(z.scenario);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ScenarioImage max_elements(std::vector<ImagePoint> image, const PolyhedralCone& cone,
                           double value_tol) {
  if (image.empty()) throw ArgumentError("image must be nonempty");
  std::sort(image.begin(), image.end(),
            [](const ImagePoint& a, const ImagePoint& b) { return a.scenario < b.scenario; });

  ScenarioImage si;
  const std::size_t count = image.size();
  std::vector<std::size_t> maximal_pos;
  for (std::size_t a = 0; a < count; ++a) {
    const Vec& z = image[a].value;
    bool dominated = false;
    for (std::size_t b = 0; b < count && !dominated; ++b) {
      if (b == a) continue;
      const Vec diff = image[b].value - z;
      if (diff.lpNorm<Eigen::Infinity>() <= value_tol) continue;  // same value
      dominated = cone.contains(diff);
    }
    if (!dominated) maximal_pos.push_back(a);
  }

  std::vector<std::size_t> group_rep;  // position of each group's first member
  for (std::size_t a : maximal_pos) {
    si.maximal_ids.push_back(image[a].scenario);
    bool placed = false;
    for (std::size_t g = 0; g < group_rep.size(); ++g) {
      if ((image[group_rep[g]].value - image[a].value).lpNorm<Eigen::Infinity>() <= value_tol) {
        si.value_groups[g].push_back(image[a].scenario);
        placed = true;
        break;
      }
    }
    if (!placed) {
      group_rep.push_back(a);
      si.value_groups.push_back({image[a].scenario});
    }
  }

  si.weak_maximal_ids = weak_max_elements(image, cone);
  si.points = std::move(image);
  return si;
}

PartitionSet partition_set(const ScenarioImage& si, std::size_t cap) {
  if (si.omega() == 0) throw ArgumentError("partition set needs at least one maximal value");
  std::size_t total = 1;
  for (const auto& group : si.value_groups) {
    if (group.empty()) throw ArgumentError("empty value group");
    if (total > cap / group.size() + 1) {
      throw CapacityError("partition set exceeds " + std::to_string(cap) + " tuples");
    }
    total *= group.size();
  }
  if (total > cap) {
    throw CapacityError("partition set has " + std::to_string(total) + " tuples, cap is " +
                        std::to_string(cap));
  }

  PartitionSet ps;
  ps.tuples.reserve(total);
  const std::size_t omega = si.omega();
  std::vector<std::size_t> cursor(omega, 0);
  for (std::size_t t = 0; t < total; ++t) {
    Beta beta(omega);
    for (std::size_t j = 0; j < omega; ++j) beta[j] = si.value_groups[j][cursor[j]];
    ps.tuples.push_back(std::move(beta));
    // odometer, last position fastest
    for (std::size_t j = omega; j-- > 0;) {
      if (++cursor[j] < si.value_groups[j].size()) break;
      cursor[j] = 0;
    }
  }
  return ps;
}

ScenarioImage scenario_image(const UncertainProblem& prob, const Vec& x, double value_tol) {
  return max_elements(evaluate_image(prob, x), prob.cone(), value_tol);
}

RegularityReport check_regularity(const UncertainProblem& prob, const Vec& x, double radius,
                                  std::size_t samples, std::uint64_t seed) {
  if (!(radius > 0.0)) throw ArgumentError("radius must be positive");
  if (samples == 0) throw ArgumentError("need at least one sample");

  RegularityReport rep;
  const ScenarioImage at_x = scenario_image(prob, x);
  rep.max_equals_weak_max = at_x.maximal_ids == at_x.weak_maximal_ids;
  rep.omega_at_x = rep.omega_min = rep.omega_max = at_x.omega();
  rep.samples = samples;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const auto n = x.size();
  for (std::size_t s = 0; s < samples; ++s) {
    Vec dir(n);
    for (Eigen::Index i = 0; i < n; ++i) dir[i] = gauss(rng);
    const double norm = dir.norm();
    if (norm == 0.0) continue;
    const double rho = radius * std::pow(unif(rng), 1.0 / static_cast<double>(n));
    const std::size_t w = scenario_image(prob, x + (rho / norm) * dir).omega();
    rep.omega_min = std::min(rep.omega_min, w);
    rep.omega_max = std::max(rep.omega_max, w);
  }
  rep.omega_constant = rep.omega_min == rep.omega_max;
  return rep;
}

}  // namespace robustmo
