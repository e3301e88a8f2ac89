#pragma once

#include <string>

#include <json.hpp>

#include "robustmo/problem.hpp"

namespace robustmo {

/// Builds a problem from a JSON description. Objectives come from the
/// built-in catalog; the file may override the rest:
///
///   {
///     "base": "EX1",                          // required, catalog name
///     "name": "EX1-wide",                     // optional
///     "scenarios": [[0.1], [0.2]],            // explicit list, or
///     "grid": {"axes": [[...], [...]]},       // Cartesian product, or
///     "grid": {"lb": [..], "ub": [..], "count": 40},
///     "cone": {"rows": [[3, -1], [-1, 3]], "e": [1, 1], "tol": 1e-10},
///     "box": {"lb": [-4.7], "ub": [4.7]}
///   }
///
/// Throws ArgumentError on malformed input, LookupError on an unknown base
/// and ConstructionError when the pieces do not fit together.
UncertainProblem problem_from_json(const nlohmann::json& doc);

UncertainProblem load_problem_file(const std::string& path);

}  // namespace robustmo
