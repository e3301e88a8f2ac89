#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "robustmo/problem.hpp"
#include "robustmo/solver.hpp"

namespace robustmo {

/// (min, max, mean, median, mode, sd) of a sample. The standard deviation
/// uses the n-1 denominator (0 for a single value). With `mode_decimals`
/// >= 0 the mode is taken over values rounded to that many decimals;
/// ties resolve to the smallest value.
struct StatsTuple {
  double min = 0, max = 0, mean = 0, median = 0, mode = 0, sd = 0;
};

StatsTuple compute_stats(const std::vector<double>& values, int mode_decimals = -1);

/// Uniform point of the box for run `index`; each index gets its own
/// generator stream seeded from (seed, index).
Vec random_start(const Box& box, std::uint64_t seed, std::size_t index);

struct RunResult {
  std::size_t index = 0;
  Vec x0;
  Vec x_final;
  SolveStatus status = SolveStatus::Error;
  int iterations = 0;
  double wall_time = 0.0;
  double p_norm = 0.0;
  double phi = 0.0;
  double merit = 0.0;
  std::string message;
  SolveTrace trace;  ///< kept only when requested
};

struct CampaignResult {
  std::string problem;
  std::size_t starts = 0;
  std::uint64_t seed = 0;
  std::vector<RunResult> runs;  ///< ordered by run index
  std::map<std::string, std::size_t> status_counts;
  std::size_t errors = 0;
  StatsTuple iterations;  ///< over runs without status Error
  StatsTuple time;
};

/// Worker count from ROBUSTMO_THREADS, else hardware concurrency (>= 1).
unsigned worker_threads_from_env();

/// Solves from `starts` random points of the problem's box. Results do not
/// depend on the number of threads.
CampaignResult run_campaign(const UncertainProblem& prob, std::size_t starts, std::uint64_t seed,
                            const SolveConfig& config, unsigned threads = 1,
                            bool keep_traces = false);

}  // namespace robustmo
