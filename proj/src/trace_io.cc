#include "robustmo/trace_io.hpp"

#include <iomanip>
#include <ostream>

namespace robustmo {
namespace {

nlohmann::json vec_json(const Vec& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

void csv_vec(std::ostream& out, const Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) out << ',' << v[i];
}

}  // namespace

nlohmann::json stats_tuple_to_json(const StatsTuple& s) {
  return {{"min", s.min},   {"max", s.max},   {"mean", s.mean},
          {"median", s.median}, {"mode", s.mode}, {"sd", s.sd}};
}

nlohmann::json trace_to_json(const SolveTrace& trace, const UncertainProblem& prob) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& rec : trace.records) {
    nlohmann::json model = nlohmann::json::array();
    for (const auto& mv : rec.model) model.push_back(vec_json(mv));
    nlohmann::json image = nlohmann::json::array();
    for (std::size_t i = 0; i < prob.num_scenarios(); ++i) {
      image.push_back(vec_json(prob.objective(rec.x, i)));
    }
    records.push_back({
        {"k", rec.k},
        {"x", vec_json(rec.x)},
        {"omega", rec.omega},
        {"partition_size", rec.partition_size},
        {"beta", rec.beta},
        {"p", vec_json(rec.p)},
        {"p_norm", rec.p_norm},
        {"phi", rec.phi},
        {"merit", rec.merit},
        {"tau", rec.tau ? nlohmann::json(*rec.tau) : nlohmann::json(nullptr)},
        {"regularized", rec.regularized},
        {"wall_time", rec.wall_time},
        {"model", model},
        {"image", image},
    });
  }
  return {{"problem", trace.problem},     {"status", to_string(trace.status)},
          {"message", trace.message},     {"iterations", trace.iterations()},
          {"wall_time", trace.wall_time}, {"records", records}};
}

void write_trace_csv(std::ostream& out, const SolveTrace& trace) {
  const auto n = trace.records.empty() ? 0 : trace.records.front().x.size();
  out << std::setprecision(17) << "k";
  for (Eigen::Index i = 0; i < n; ++i) out << ",x" << i + 1;
  out << ",omega,partition_size,p_norm,phi,tau,merit,wall_time\n";
  for (const auto& rec : trace.records) {
    out << rec.k;
    csv_vec(out, rec.x);
    out << ',' << rec.omega << ',' << rec.partition_size << ',' << rec.p_norm << ',' << rec.phi
        << ',';
    if (rec.tau) out << *rec.tau;
    out << ',' << rec.merit << ',' << rec.wall_time << '\n';
  }
}

void write_image_csv(std::ostream& out, const SolveTrace& trace, const UncertainProblem& prob) {
  out << std::setprecision(17) << "k,scenario";
  for (int l = 0; l < prob.m(); ++l) out << ",f" << l + 1;
  out << ",role\n";
  const std::size_t last = trace.records.empty() ? 0 : trace.records.size() - 1;
  for (std::size_t r = 0; r < trace.records.size(); ++r) {
    const auto& rec = trace.records[r];
    const char* role = r == last ? "red" : (r == 0 ? "black" : "blue");
    for (std::size_t i = 0; i < prob.num_scenarios(); ++i) {
      out << rec.k << ',' << i;
      csv_vec(out, prob.objective(rec.x, i));
      out << ',' << role << '\n';
    }
  }
}

void write_runs_csv(std::ostream& out, const CampaignResult& result) {
  const auto n = result.runs.empty() ? 0 : result.runs.front().x0.size();
  out << std::setprecision(17) << "index,status,iterations,wall_time,p_norm,phi,merit";
  for (Eigen::Index i = 0; i < n; ++i) out << ",x0_" << i + 1;
  for (Eigen::Index i = 0; i < n; ++i) out << ",x_" << i + 1;
  out << '\n';
  for (const auto& run : result.runs) {
    out << run.index << ',' << to_string(run.status) << ',' << run.iterations << ','
        << run.wall_time << ',' << run.p_norm << ',' << run.phi << ',' << run.merit;
    csv_vec(out, run.x0);
    if (run.x_final.size() == n) {
      csv_vec(out, run.x_final);
    } else {
      for (Eigen::Index i = 0; i < n; ++i) out << ',';
    }
    out << '\n';
  }
}

nlohmann::json stats_to_json(const CampaignResult& result) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [status, count] : result.status_counts) counts[status] = count;
  return {{"problem", result.problem},
          {"starts", result.starts},
          {"seed", result.seed},
          {"errors", result.errors},
          {"status_counts", counts},
          {"iterations", stats_tuple_to_json(result.iterations)}};
}

nlohmann::json timing_to_json(const CampaignResult& result) {
  return {{"problem", result.problem}, {"time", stats_tuple_to_json(result.time)}};
}

nlohmann::json regularity_to_json(const RegularityReport& rep) {
  return {{"max_equals_weak_max", rep.max_equals_weak_max},
          {"omega_at_x", rep.omega_at_x},
          {"omega_min", rep.omega_min},
          {"omega_max", rep.omega_max},
          {"samples", rep.samples},
          {"omega_constant", rep.omega_constant},
          {"regular", rep.regular()}};
}

}  // namespace robustmo
