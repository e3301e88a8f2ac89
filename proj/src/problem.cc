#include "robustmo/problem.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "robustmo/errors.hpp"

namespace robustmo {

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  if (count > 1) out.back() = hi;
  return out;
}

std::size_t ScenarioGrid::cardinality() const {
  if (axes.empty()) return 0;
  std::size_t total = 1;
  for (const auto& axis : axes) total *= axis.size();
  return total;
}

std::vector<Vec> ScenarioGrid::product() const {
  const std::size_t total = cardinality();
  std::vector<Vec> out;
  out.reserve(total);
  const auto r = static_cast<Eigen::Index>(axes.size());
  for (std::size_t flat = 0; flat < total; ++flat) {
    Vec xi(r);
    std::size_t rest = flat;
    for (Eigen::Index d = r - 1; d >= 0; --d) {
      const auto& axis = axes[static_cast<std::size_t>(d)];
      xi[d] = axis[rest % axis.size()];
      rest /= axis.size();
    }
    out.push_back(std::move(xi));
  }
  return out;
}

std::vector<Vec> ScenarioGrid::Uniform(const Vec& lb, const Vec& ub, std::size_t count) {
  if (lb.size() != ub.size() || lb.size() == 0) {
    throw ArgumentError("scenario bounds must be nonempty and of equal dimension");
  }
  if (count == 0) throw ArgumentError("scenario count must be positive");
  const auto r = static_cast<std::size_t>(lb.size());

  // smallest k with k^r >= count
  std::size_t k = 1;
  auto reaches = [&](std::size_t base) {
    std::uint64_t acc = 1;
    for (std::size_t d = 0; d < r; ++d) {
      acc *= base;
      if (acc >= count) return true;
    }
    return acc >= count;
  };
  while (!reaches(k)) ++k;

  std::vector<std::vector<double>> axes(r);
  for (std::size_t d = 0; d < r; ++d) {
    axes[d] = linspace(lb[static_cast<Eigen::Index>(d)], ub[static_cast<Eigen::Index>(d)], k);
  }

  // total = k^r may exceed 64 bits only for absurd r; saturate.
  long double total = std::pow(static_cast<long double>(k), static_cast<long double>(r));
  std::vector<Vec> out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    auto flat = static_cast<std::uint64_t>(std::floor(total * t / count));
    Vec xi(static_cast<Eigen::Index>(r));
    for (std::size_t d = r; d-- > 0;) {
      xi[static_cast<Eigen::Index>(d)] = axes[d][flat % k];
      flat /= k;
    }
    out.push_back(std::move(xi));
  }
  return out;
}

UncertainProblem::UncertainProblem(Spec spec, PolyhedralCone cone)
    : spec_(std::move(spec)), cone_(std::move(cone)) {
  if (spec_.n <= 0 || spec_.m <= 0) throw ConstructionError("problem dimensions must be positive");
  if (spec_.scenarios.empty()) throw ConstructionError("uncertainty set must be nonempty");
  const auto r = spec_.scenarios.front().size();
  for (const auto& xi : spec_.scenarios) {
    if (xi.size() != r) throw ConstructionError("scenario vectors must share one dimension");
  }
  if (!spec_.objective) throw ConstructionError("problem has no objective");
  if (cone_.dim() != spec_.m) {
    throw ConstructionError("cone dimension " + std::to_string(cone_.dim()) +
                            " does not match objective dimension " + std::to_string(spec_.m));
  }
  if (spec_.box) {
    if (spec_.box->lb.size() != spec_.n || spec_.box->ub.size() != spec_.n) {
      throw ConstructionError("sampling box has wrong dimension");
    }
    if ((spec_.box->lb.array() > spec_.box->ub.array()).any()) {
      throw ConstructionError("sampling box has lb > ub");
    }
  }
}

void UncertainProblem::check_x(const Vec& x) const {
  if (x.size() != spec_.n) {
    throw ArgumentError("point has dimension " + std::to_string(x.size()) + ", problem expects " +
                        std::to_string(spec_.n));
  }
}

Vec UncertainProblem::objective(const Vec& x, std::size_t scenario) const {
  check_x(x);
  if (scenario >= spec_.scenarios.size()) throw ArgumentError("scenario index out of range");
  Vec f = spec_.objective(x, spec_.scenarios[scenario]);
  if (f.size() != spec_.m) throw EvaluationError("objective returned wrong dimension", scenario);
  if (!f.allFinite()) throw EvaluationError("non-finite objective value", scenario);
  return f;
}

Mat UncertainProblem::jacobian(const Vec& x, std::size_t scenario) const {
  if (!spec_.jacobian) return finite_difference_jacobian(*this, x, scenario);
  check_x(x);
  if (scenario >= spec_.scenarios.size()) throw ArgumentError("scenario index out of range");
  Mat J = spec_.jacobian(x, spec_.scenarios[scenario]);
  if (J.rows() != spec_.n || J.cols() != spec_.m) {
    throw EvaluationError("jacobian returned wrong shape", scenario);
  }
  if (!J.allFinite()) throw EvaluationError("non-finite jacobian entry", scenario);
  return J;
}

UncertainProblem UncertainProblem::with_scenarios(std::vector<Vec> scenarios) const {
  Spec s = spec_;
  s.scenarios = std::move(scenarios);
  return UncertainProblem(std::move(s), cone_);
}

UncertainProblem UncertainProblem::with_cone(PolyhedralCone cone) const {
  return UncertainProblem(spec_, std::move(cone));
}

UncertainProblem UncertainProblem::with_box(std::optional<Box> box) const {
  Spec s = spec_;
  s.box = std::move(box);
  return UncertainProblem(std::move(s), cone_);
}

UncertainProblem UncertainProblem::renamed(std::string name) const {
  Spec s = spec_;
  s.name = std::move(name);
  return UncertainProblem(std::move(s), cone_);
}

std::vector<ImagePoint> evaluate_image(const UncertainProblem& prob, const Vec& x) {
  std::vector<ImagePoint> image;
  image.reserve(prob.num_scenarios());
  for (std::size_t i = 0; i < prob.num_scenarios(); ++i) {
    image.push_back({i, prob.objective(x, i)});
  }
  return image;
}

Mat finite_difference_jacobian(const std::function<Vec(const Vec&)>& f, const Vec& x,
                               std::size_t scenario) {
  const auto n = x.size();
  Mat J;
  Vec probe = x;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double h = 1e-6 * std::max(1.0, std::abs(x[i]));
    probe[i] = x[i] + h;
    const Vec fp = f(probe);
    probe[i] = x[i] - h;
    const Vec fm = f(probe);
    probe[i] = x[i];
    if (!fp.allFinite() || !fm.allFinite()) {
      throw EvaluationError("non-finite value in finite-difference probe", scenario);
    }
    if (i == 0) J.resize(n, fp.size());
    // (x+h)-(x-h) is the exact spacing in floating point
    J.row(i) = ((fp - fm) / ((x[i] + h) - (x[i] - h))).transpose();
  }
  return J;
}

Mat finite_difference_jacobian(const UncertainProblem& prob, const Vec& x, std::size_t scenario) {
  return finite_difference_jacobian(
      [&](const Vec& z) { return prob.objective(z, scenario); }, x, scenario);
}

}  // namespace robustmo
