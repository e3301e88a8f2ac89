#pragma once

#include <string>
#include <vector>

#include "robustmo/problem.hpp"

namespace robustmo {

/// Built-in problem catalog: EX1..EX4 and the test set P1..P18.
/// Throws LookupError for unknown names.
UncertainProblem registry_get(const std::string& name);

/// Names in catalog order.
std::vector<std::string> registry_names();

}  // namespace robustmo
