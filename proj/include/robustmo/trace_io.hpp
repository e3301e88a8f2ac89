#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "robustmo/campaign.hpp"
#include "robustmo/problem.hpp"
#include "robustmo/set_ops.hpp"
#include "robustmo/solver.hpp"

namespace robustmo {

/// trace.json: {"problem", "status", "message", "iterations", "wall_time",
/// "records": [{"k", "x", "omega", "partition_size", "beta", "p", "p_norm",
/// "phi", "merit", "tau" (null on the terminal record), "regularized",
/// "wall_time", "model", "image"}]}. "image" holds F_U(x_k) in scenario order.
nlohmann::json trace_to_json(const SolveTrace& trace, const UncertainProblem& prob);

/// Flat per-iteration columns: k, x_1..x_n, omega, partition_size, p_norm,
/// phi, tau, merit, wall_time.
void write_trace_csv(std::ostream& out, const SolveTrace& trace);

/// F_U(x_k) for every iterate: k, scenario, f_1..f_m, role. Role is "black"
/// for the initial point, "red" for the terminal one and "blue" otherwise.
void write_image_csv(std::ostream& out, const SolveTrace& trace, const UncertainProblem& prob);

/// runs.csv: index, status, iterations, wall_time, p_norm, phi, merit,
/// x0_1..x0_n, x_1..x_n.
void write_runs_csv(std::ostream& out, const CampaignResult& result);

/// stats.json: deterministic content only (no wall times).
nlohmann::json stats_to_json(const CampaignResult& result);

/// timing.json: wall-time statistics of the campaign.
nlohmann::json timing_to_json(const CampaignResult& result);

nlohmann::json stats_tuple_to_json(const StatsTuple& s);

nlohmann::json regularity_to_json(const RegularityReport& rep);

}  // namespace robustmo
