#include "robustmo/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <random>
#include <thread>

#include "robustmo/errors.hpp"

namespace robustmo {

StatsTuple compute_stats(const std::vector<double>& values, int mode_decimals) {
  if (values.empty()) throw ArgumentError("statistics of an empty sample");
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();

  StatsTuple s;
  s.min = sorted.front();
  s.max = sorted.back();
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(n);
  s.median = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.sd = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;

  std::vector<double> keys = sorted;
  if (mode_decimals >= 0) {
    const double f = std::pow(10.0, mode_decimals);
    for (double& k : keys) k = std::round(k * f) / f;
    std::sort(keys.begin(), keys.end());
  }
  std::size_t best_count = 0;
  for (std::size_t a = 0; a < keys.size();) {
    std::size_t b = a;
    while (b < keys.size() && keys[b] == keys[a]) ++b;
    if (b - a > best_count) {
      best_count = b - a;
      s.mode = keys[a];
    }
    a = b;
  }
  return s;
}

Vec random_start(const Box& box, std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Vec x(box.lb.size());
  for (Eigen::Index d = 0; d < x.size(); ++d) {
    x[d] = box.lb[d] + (box.ub[d] - box.lb[d]) * unit(rng);
  }
  return x;
}

unsigned worker_threads_from_env() {
  if (const char* env = std::getenv("ROBUSTMO_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CampaignResult run_campaign(const UncertainProblem& prob, std::size_t starts, std::uint64_t seed,
                            const SolveConfig& config, unsigned threads, bool keep_traces) {
  if (starts == 0) throw ArgumentError("a campaign needs at least one start");
  if (!prob.box()) throw ArgumentError("problem " + prob.name() + " has no sampling box");
  config.validate();

  CampaignResult result;
  result.problem = prob.name();
  result.starts = starts;
  result.seed = seed;
  result.runs.resize(starts);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < starts; i = next++) {
      RunResult& run = result.runs[i];
      run.index = i;
      run.x0 = random_start(*prob.box(), seed, i);
      SolveTrace trace = solve(prob, run.x0, config);
      run.status = trace.status;
      run.iterations = trace.iterations();
      run.wall_time = trace.wall_time;
      run.message = trace.message;
      if (!trace.records.empty()) {
        const auto& last = trace.terminal();
        run.x_final = last.x;
        run.p_norm = last.p_norm;
        run.phi = last.phi;
        run.merit = last.merit;
      }
      if (keep_traces) run.trace = std::move(trace);
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(starts)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<double> iters, times;
  for (const auto& run : result.runs) {
    ++result.status_counts[to_string(run.status)];
    if (run.status == SolveStatus::Error) {
      ++result.errors;
      continue;
    }
    iters.push_back(run.iterations);
    times.push_back(run.wall_time);
  }
  if (!iters.empty()) {
    result.iterations = compute_stats(iters);
    result.time = compute_stats(times, 4);
  }
  return result;
}

}  // namespace robustmo
