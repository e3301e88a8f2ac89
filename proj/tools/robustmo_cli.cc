// robustmo: solve, benchmark and verify uncertain multiobjective problems.
//
// Exit codes: 0 success, 2 usage, 3 capacity, 4 numerical failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "robustmo/campaign.hpp"
#include "robustmo/errors.hpp"
#include "robustmo/oracle.hpp"
#include "robustmo/problem_file.hpp"
#include "robustmo/registry.hpp"
#include "robustmo/set_ops.hpp"
#include "robustmo/solver.hpp"
#include "robustmo/trace_io.hpp"

namespace fs = std::filesystem;
using namespace robustmo;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitNumerical = 4;

struct CommonOptions {
  std::string problem;
  std::string problem_file;
  double gamma = 0.1;
  double tol = 1e-4;
  int max_iters = 1000;
  std::uint64_t seed = 0;
  std::string out = "out";
  std::string hessian_init = "identity";
  bool merit_guard = false;
};

UncertainProblem load_problem(const CommonOptions& o) {
  if (!o.problem_file.empty()) return load_problem_file(o.problem_file);
  if (o.problem.empty()) throw ArgumentError("a problem name or --problem-file is required");
  return registry_get(o.problem);
}

SolveConfig make_config(const CommonOptions& o) {
  SolveConfig c;
  c.gamma = o.gamma;
  c.p_norm_tol = o.tol;
  c.max_iters = o.max_iters;
  c.seed = o.seed;
  c.hessian_init = o.hessian_init == "fd" ? HessianInit::FiniteDifference : HessianInit::Identity;
  c.merit_guard = o.merit_guard;
  c.validate();
  return c;
}

Vec to_x(const std::vector<double>& v, const UncertainProblem& prob) {
  if (static_cast<int>(v.size()) != prob.n()) {
    throw ArgumentError("--x0 has " + std::to_string(v.size()) + " entries, problem needs " +
                        std::to_string(prob.n()));
  }
  return Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size()));
}

void write_json(const fs::path& path, const nlohmann::json& doc) {
  std::ofstream out(path);
  out << std::setw(2) << doc << '\n';
}

std::string fmt_tuple(const StatsTuple& s) {
  std::ostringstream os;
  os << std::setprecision(6) << '(' << s.min << ", " << s.max << ", " << s.mean << ", " << s.median
     << ", " << s.mode << ", " << s.sd << ')';
  return os.str();
}

void add_common(CLI::App* cmd, CommonOptions& o) {
  auto* name = cmd->add_option("problem", o.problem, "Built-in problem name (see `list`)");
  cmd->add_option("--problem-file", o.problem_file, "JSON problem description")
      ->excludes(name)
      ->check(CLI::ExistingFile);
  cmd->add_option("--gamma", o.gamma, "Armijo parameter in (0,1)")->capture_default_str();
  cmd->add_option("--tol", o.tol, "Stop when ||p_k|| <= tol")->capture_default_str();
  cmd->add_option("--max-iters", o.max_iters, "Iteration limit")->capture_default_str();
  cmd->add_option("--seed", o.seed, "PRNG seed")->capture_default_str();
  cmd->add_option("--out", o.out, "Output directory")->capture_default_str();
  cmd->add_option("--hessian-init", o.hessian_init, "Initial Hessian blocks")
      ->check(CLI::IsMember({"identity", "fd"}))
      ->capture_default_str();
  cmd->add_flag("--merit-guard", o.merit_guard,
                "Line search also requires merit descent over the whole image");
}

int run_solve(const CommonOptions& o, const std::vector<double>& x0_in, bool random) {
  const UncertainProblem prob = load_problem(o);
  const SolveConfig config = make_config(o);
  Vec x0;
  if (random || x0_in.empty()) {
    if (!prob.box()) throw ArgumentError("problem has no sampling box; pass --x0");
    x0 = random_start(*prob.box(), o.seed, 0);
  } else {
    x0 = to_x(x0_in, prob);
  }
  const SolveTrace trace = solve(prob, x0, config);

  fs::create_directories(o.out);
  write_json(fs::path(o.out) / "trace.json", trace_to_json(trace, prob));
  std::ofstream csv(fs::path(o.out) / "trace.csv");
  write_trace_csv(csv, trace);
  std::ofstream img(fs::path(o.out) / "image.csv");
  write_image_csv(img, trace, prob);

  const double nan = std::nan("");
  const double p_norm = trace.records.empty() ? nan : trace.terminal().p_norm;
  const double merit = trace.records.empty() ? nan : trace.terminal().merit;
  std::cout << std::setprecision(6) << "status=" << to_string(trace.status)
            << " iterations=" << trace.iterations() << " p_norm=" << p_norm << " merit=" << merit
            << '\n';
  if (!trace.message.empty()) std::cerr << trace.message << '\n';
  return trace.status == SolveStatus::Error ? kExitNumerical : 0;
}

int run_bench(const CommonOptions& o, std::size_t starts, unsigned threads) {
  if (starts < 1) throw ArgumentError("--starts must be at least 1");
  const UncertainProblem prob = load_problem(o);
  const SolveConfig config = make_config(o);
  if (threads == 0) threads = worker_threads_from_env();
  const CampaignResult res = run_campaign(prob, starts, o.seed, config, threads);

  fs::create_directories(o.out);
  std::ofstream runs(fs::path(o.out) / "runs.csv");
  write_runs_csv(runs, res);
  write_json(fs::path(o.out) / "stats.json", stats_to_json(res));
  write_json(fs::path(o.out) / "timing.json", timing_to_json(res));

  std::cout << prob.name() << "  starts=" << starts << "  seed=" << o.seed << '\n';
  std::cout << "  iterations (min, max, mean, median, mode, sd): " << fmt_tuple(res.iterations)
            << '\n';
  std::cout << "  time [s]   (min, max, mean, median, mode, sd): " << fmt_tuple(res.time) << '\n';
  std::cout << "  status:";
  for (const auto& [status, count] : res.status_counts) std::cout << ' ' << status << '=' << count;
  std::cout << '\n';
  if (res.errors > 0) std::cerr << res.errors << " run(s) ended with an error\n";
  return 0;
}

struct VerifyOptions {
  std::vector<double> x;
  std::string trace_file;
  double step = 0.0;
  double half_width = 0.0;
  double radius = 1e-3;
  int samples = 200;
};

Vec terminal_from_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open trace file: " + path);
  try {
    const auto doc = nlohmann::json::parse(in);
    const auto& records = doc.at("records");
    if (records.empty()) throw ArgumentError("trace file " + path + " has no records");
    const auto& x = records.back().at("x");
    Vec out(static_cast<Eigen::Index>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i) out[static_cast<Eigen::Index>(i)] = x[i];
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw ArgumentError("trace file " + path + ": " + ex.what());
  }
}

// Grid over the sampling box (or a cube around xbar when --half-width is
// given). Default steps keep the grid near 10^4 (n=1), 1.6e5 (n=2) or 10^6
// (n=3) points.
oracle::GridSpec make_grid(const UncertainProblem& prob, const Vec& xbar, const VerifyOptions& v) {
  const auto n = static_cast<Eigen::Index>(prob.n());
  oracle::GridSpec g;
  if (v.half_width > 0 || !prob.box()) {
    const double h = v.half_width > 0 ? v.half_width : 1.0;
    g.lo = xbar.array() - h;
    g.hi = xbar.array() + h;
  } else {
    g.lo = prob.box()->lb;
    g.hi = prob.box()->ub;
  }
  if (v.step > 0) {
    g.step = Vec::Constant(n, v.step);
  } else {
    const double per_axis = n == 1 ? 1e4 : (n == 2 ? 400.0 : 100.0);
    g.step = (g.hi - g.lo) / per_axis;
  }
  return g;
}

int run_verify(const CommonOptions& o, const VerifyOptions& v) {
  const UncertainProblem prob = load_problem(o);
  if (prob.n() > 3) {
    throw CapacityError("grid verification supports n <= 3, problem has n = " +
                        std::to_string(prob.n()));
  }
  Vec xbar;
  if (!v.trace_file.empty()) {
    xbar = terminal_from_trace(v.trace_file);
    if (xbar.size() != prob.n()) throw ArgumentError("trace point does not match the problem");
  } else if (!v.x.empty()) {
    xbar = to_x(v.x, prob);
  } else {
    throw ArgumentError("verify needs --x or --trace");
  }
  const auto grid = make_grid(prob, xbar, v);
  const auto cert = oracle::certify_robust_weak_efficiency(prob, xbar, grid);
  const auto reg = check_regularity(prob, xbar, v.radius, static_cast<std::size_t>(v.samples),
                                    o.seed);

  nlohmann::json x_json = nlohmann::json::array();
  for (Eigen::Index i = 0; i < xbar.size(); ++i) x_json.push_back(xbar[i]);
  nlohmann::json report = {{"problem", prob.name()},
                           {"x", x_json},
                           {"certified", cert.certified},
                           {"points_checked", cert.points_checked},
                           {"counterexample", nullptr},
                           {"regularity", regularity_to_json(reg)}};
  if (cert.counterexample) {
    nlohmann::json ce = nlohmann::json::array();
    for (Eigen::Index i = 0; i < cert.counterexample->size(); ++i)
      ce.push_back((*cert.counterexample)[i]);
    report["counterexample"] = ce;
  }
  fs::create_directories(o.out);
  write_json(fs::path(o.out) / "verify.json", report);
  std::cout << std::setw(2) << report << '\n';
  return 0;
}

int run_list() {
  std::cout << std::left << std::setw(6) << "name" << std::setw(12) << "(m,n,r)" << std::setw(11)
            << "scenarios"
            << "source\n";
  for (const auto& name : registry_names()) {
    const auto prob = registry_get(name);
    std::ostringstream dims;
    dims << '(' << prob.m() << ',' << prob.n() << ',' << prob.r() << ')';
    std::cout << std::setw(6) << name << std::setw(12) << dims.str() << std::setw(11)
              << prob.num_scenarios() << prob.source() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-Newton solver for uncertain multiobjective problems"};
  app.require_subcommand(1);

  CommonOptions solve_opts, bench_opts, verify_opts;
  std::vector<double> x0;
  bool random = false;
  auto* solve_cmd = app.add_subcommand("solve", "Run one solve and write trace files");
  add_common(solve_cmd, solve_opts);
  solve_cmd->add_option("--x0", x0, "Initial point, comma separated")->delimiter(',');
  solve_cmd->add_flag("--random", random, "Draw x0 uniformly from the problem box");

  std::size_t starts = 100;
  unsigned threads = 0;
  auto* bench_cmd = app.add_subcommand("bench", "Random-start campaign with statistics");
  add_common(bench_cmd, bench_opts);
  bench_cmd->add_option("--starts", starts, "Number of random starts")->capture_default_str();
  bench_cmd->add_option("--threads", threads, "Worker threads (default: ROBUSTMO_THREADS or cores)");

  VerifyOptions vopts;
  auto* verify_cmd = app.add_subcommand("verify", "Grid certification of robust weak efficiency");
  add_common(verify_cmd, verify_opts);
  auto* x_opt = verify_cmd->add_option("--x", vopts.x, "Point to verify, comma separated")
                    ->delimiter(',');
  verify_cmd->add_option("--trace", vopts.trace_file, "Verify the terminal point of trace.json")
      ->excludes(x_opt);
  verify_cmd->add_option("--step", vopts.step, "Grid step (default: box width / points)");
  verify_cmd->add_option("--half-width", vopts.half_width,
                         "Grid on the cube xbar +- half-width instead of the box");
  verify_cmd->add_option("--radius", vopts.radius, "Regularity sampling radius")
      ->capture_default_str();
  verify_cmd->add_option("--samples", vopts.samples, "Regularity sample count")
      ->capture_default_str();

  auto* list_cmd = app.add_subcommand("list", "Print the built-in problem catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve_cmd) return run_solve(solve_opts, x0, random);
    if (*bench_cmd) return run_bench(bench_opts, starts, threads);
    if (*verify_cmd) return run_verify(verify_opts, vopts);
    if (*list_cmd) return run_list();
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LookupError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConstructionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const robustmo::Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
