#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "robustmo/cone_order.hpp"

namespace robustmo {

/// F(x, xi) in R^m.
using ObjectiveFn = std::function<Vec(const Vec& x, const Vec& xi)>;
/// Jacobian of F(., xi) at x as an n x m matrix; column l is grad f_l.
using JacobianFn = std::function<Mat(const Vec& x, const Vec& xi)>;

struct Box {
  Vec lb;
  Vec ub;
};

/// Per-axis value lists whose Cartesian product is the uncertainty set.
struct ScenarioGrid {
  std::vector<std::vector<double>> axes;

  /// Uniformly spaced grid on [lb, ub]: `count` points when r = 1; otherwise
  /// the smallest k with k^r >= count points per axis, reduced to `count`
  /// scenarios by taking evenly strided indices of the lexicographic product.
  static std::vector<Vec> Uniform(const Vec& lb, const Vec& ub, std::size_t count);

  std::size_t cardinality() const;

  /// Full Cartesian product, first axis varying slowest.
  std::vector<Vec> product() const;
};

/// Evenly spaced values lo, ..., hi (count >= 1; count == 1 yields lo).
std::vector<double> linspace(double lo, double hi, std::size_t count);

struct ImagePoint {
  std::size_t scenario;
  Vec value;
};

/// An uncertain multiobjective problem F : R^n x U -> R^m with finite U.
class UncertainProblem {
 public:
  struct Spec {
    std::string name;
    std::string source;  ///< provenance tag of the underlying deterministic problem
    int n = 0;
    int m = 0;
    std::vector<Vec> scenarios;
    ObjectiveFn objective;
    JacobianFn jacobian;  ///< may be empty: finite differences are used instead
    std::optional<Box> box;
  };

  /// Throws ConstructionError on inconsistent dimensions.
  UncertainProblem(Spec spec, PolyhedralCone cone);

  const std::string& name() const { return spec_.name; }
  const std::string& source() const { return spec_.source; }
  int n() const { return spec_.n; }
  int m() const { return spec_.m; }
  /// Dimension of each scenario vector.
  int r() const { return static_cast<int>(spec_.scenarios.front().size()); }
  std::size_t num_scenarios() const { return spec_.scenarios.size(); }
  const std::vector<Vec>& scenarios() const { return spec_.scenarios; }
  const std::optional<Box>& box() const { return spec_.box; }
  const PolyhedralCone& cone() const { return cone_; }
  bool has_analytic_jacobian() const { return static_cast<bool>(spec_.jacobian); }

  /// F(x, xi_i). Throws EvaluationError if any component is non-finite.
  Vec objective(const Vec& x, std::size_t scenario) const;

  /// Analytic Jacobian if registered, central differences otherwise.
  Mat jacobian(const Vec& x, std::size_t scenario) const;

  /// Copy with a different uncertainty set, cone or sampling box.
  UncertainProblem with_scenarios(std::vector<Vec> scenarios) const;
  UncertainProblem with_cone(PolyhedralCone cone) const;
  UncertainProblem with_box(std::optional<Box> box) const;
  UncertainProblem renamed(std::string name) const;

 private:
  void check_x(const Vec& x) const;

  Spec spec_;
  PolyhedralCone cone_;
};

/// The image F_U(x) as (scenario, value) pairs in scenario order.
std::vector<ImagePoint> evaluate_image(const UncertainProblem& prob, const Vec& x);

/// Central differences with h_i = 1e-6 * max(1, |x_i|), one column per
/// objective component.
Mat finite_difference_jacobian(const UncertainProblem& prob, const Vec& x, std::size_t scenario);

/// Same, for an arbitrary vector function (used for Hessians of gradients).
Mat finite_difference_jacobian(const std::function<Vec(const Vec&)>& f, const Vec& x,
                               std::size_t scenario = 0);

}  // namespace robustmo
