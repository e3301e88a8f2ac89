#include "robustmo/problem_file.hpp"

#include <fstream>

#include "robustmo/errors.hpp"
#include "robustmo/registry.hpp"

namespace robustmo {
namespace {

Vec to_vec(const nlohmann::json& arr, const char* what) {
  if (!arr.is_array()) throw ArgumentError(std::string(what) + ": expected an array of numbers");
  Vec v(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) throw ArgumentError(std::string(what) + ": non-numeric entry");
    v[static_cast<Eigen::Index>(i)] = arr[i].get<double>();
  }
  return v;
}

Mat to_rows(const nlohmann::json& arr, const char* what) {
  if (!arr.is_array() || arr.empty()) {
    throw ArgumentError(std::string(what) + ": expected a non-empty list of rows");
  }
  const Vec first = to_vec(arr[0], what);
  Mat out(static_cast<Eigen::Index>(arr.size()), first.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const Vec row = to_vec(arr[i], what);
    if (row.size() != first.size()) throw ArgumentError(std::string(what) + ": ragged rows");
    out.row(static_cast<Eigen::Index>(i)) = row.transpose();
  }
  return out;
}

std::vector<Vec> read_scenarios(const nlohmann::json& doc) {
  if (doc.contains("scenarios")) {
    const auto& list = doc["scenarios"];
    if (!list.is_array() || list.empty()) throw ArgumentError("scenarios: expected a non-empty list");
    std::vector<Vec> out;
    for (const auto& s : list) out.push_back(s.is_number() ? Vec::Constant(1, s.get<double>())
                                                           : to_vec(s, "scenarios"));
    return out;
  }
  const auto& grid = doc["grid"];
  if (grid.contains("axes")) {
    ScenarioGrid g;
    for (const auto& axis : grid["axes"]) {
      const Vec v = to_vec(axis, "grid.axes");
      g.axes.emplace_back(v.data(), v.data() + v.size());
    }
    if (g.axes.empty()) throw ArgumentError("grid.axes: empty");
    return g.product();
  }
  if (!grid.contains("lb") || !grid.contains("ub") || !grid.contains("count")) {
    throw ArgumentError("grid: expected {axes} or {lb, ub, count}");
  }
  const Vec lb = to_vec(grid["lb"], "grid.lb");
  const Vec ub = to_vec(grid["ub"], "grid.ub");
  const auto count = grid["count"].get<long long>();
  if (count < 1) throw ArgumentError("grid.count must be positive");
  if (lb.size() != ub.size() || lb.size() == 0) throw ArgumentError("grid: lb/ub size mismatch");
  return ScenarioGrid::Uniform(lb, ub, static_cast<std::size_t>(count));
}

}  // namespace

UncertainProblem problem_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ArgumentError("problem file: top level must be an object");
  if (!doc.contains("base") || !doc["base"].is_string()) {
    throw ArgumentError("problem file: missing string field 'base'");
  }
  try {
    UncertainProblem prob = registry_get(doc["base"].get<std::string>());
    if (doc.contains("scenarios") || doc.contains("grid")) {
      prob = prob.with_scenarios(read_scenarios(doc));
    }
    if (doc.contains("cone")) {
      const auto& c = doc["cone"];
      const Mat rows = to_rows(c.at("rows"), "cone.rows");
      const Vec e = c.contains("e") ? to_vec(c["e"], "cone.e") : Vec::Ones(rows.cols());
      const double tol = c.value("tol", PolyhedralCone::kDefaultTol);
      prob = prob.with_cone(PolyhedralCone(rows, e, tol));
    }
    if (doc.contains("box")) {
      const auto& b = doc["box"];
      Box box{to_vec(b.at("lb"), "box.lb"), to_vec(b.at("ub"), "box.ub")};
      prob = prob.with_box(box);
    }
    if (doc.contains("name")) {
      prob = prob.renamed(doc["name"].get<std::string>());
    }
    return prob;
  } catch (const nlohmann::json::exception& ex) {
    throw ArgumentError(std::string("problem file: ") + ex.what());
  }
}

UncertainProblem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open problem file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& ex) {
    throw ArgumentError("problem file " + path + ": " + ex.what());
  }
  return problem_from_json(doc);
}

}  // namespace robustmo
