#include "holonewt/trial_io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace holonewt {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

std::string activation_label(const NetworkTopology& topo) {
  std::string label;
  bool uniform = true;
  for (const auto& a : topo.activations) uniform = uniform && a.id == topo.activations.front().id;
  if (uniform && !topo.activations.empty()) return std::string(to_string(topo.activations.front().id));
  for (std::size_t k = 0; k < topo.activations.size(); ++k) {
    if (k) label += '+';
    label += to_string(topo.activations[k].id);
  }
  return label;
}

void write_trials_csv(std::ostream& out, std::span<const TrialRecord> records, Method method,
                      const std::string& activation) {
  out << kTrialsCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.seed << ',' << to_string(method) << ',' << activation << ',' << to_string(r.outcome)
        << ',' << r.iterations << ',' << format_double(r.final_error) << ',';
    if (r.outcome == Outcome::local_minimum) out << (r.stalled ? "true" : "false");
    out << '\n';
  }
}

std::vector<TrialCsvRow> read_trials_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kTrialsCsvHeader)
    throw std::invalid_argument("trials CSV: missing or unexpected header");
  std::vector<TrialCsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 7) throw std::invalid_argument("trials CSV: expected 7 fields in '" + line + "'");
    TrialCsvRow row;
    row.seed = std::stoull(f[0]);
    row.method = f[1];
    row.activation = f[2];
    row.outcome = parse_outcome(f[3]);
    row.iterations = std::stoull(f[4]);
    row.final_error = std::stod(f[5]);
    row.stalled = f[6];
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json stats_to_json(const TrialStats& s) {
  return {{"n_trials", s.n_trials},
          {"successes", s.successes},
          {"mean_iterations_over_successes", s.mean_iterations_over_successes},
          {"failure_counts",
           {{"local_minimum", s.local_minimum},
            {"blow_up", s.blow_up},
            {"non_finite", s.non_finite},
            {"singular_matrix", s.singular_matrix}}}};
}

TrialStats stats_from_json(const nlohmann::json& j) {
  TrialStats s;
  s.n_trials = j.at("n_trials").get<std::size_t>();
  s.successes = j.at("successes").get<std::size_t>();
  s.mean_iterations_over_successes = j.at("mean_iterations_over_successes").get<double>();
  const auto& f = j.at("failure_counts");
  s.local_minimum = f.at("local_minimum").get<std::size_t>();
  s.blow_up = f.at("blow_up").get<std::size_t>();
  s.non_finite = f.at("non_finite").get<std::size_t>();
  s.singular_matrix = f.at("singular_matrix").get<std::size_t>();
  return s;
}

nlohmann::json record_to_json(const TrialRecord& rec, Method method, const std::string& activation) {
  nlohmann::json j = {{"seed", rec.seed},
                      {"method", std::string(to_string(method))},
                      {"activation", activation},
                      {"outcome", std::string(to_string(rec.outcome))},
                      {"iterations", rec.iterations},
                      {"stalled", rec.stalled}};
  // JSON has no NaN/inf; non-finite errors are written as null.
  if (std::isfinite(rec.final_error))
    j["final_error"] = rec.final_error;
  else
    j["final_error"] = nullptr;
  return j;
}

void write_error_history_csv(std::ostream& out, std::span<const double> history) {
  out << "iteration,error\n";
  for (std::size_t n = 0; n < history.size(); ++n) out << n << ',' << format_double(history[n]) << '\n';
}

std::string summary_table(const TrialStats& s, Method method, const std::string& activation) {
  char buf[512];
  std::string out;
  std::snprintf(buf, sizeof buf, "%-10s %-17s %10s %12s\n", "activation", "method", "successes",
                "mean iters*");
  out += buf;
  std::snprintf(buf, sizeof buf, "%-10s %-17s %6zu/%-3zu %12.1f\n", activation.c_str(),
                std::string(to_string(method)).c_str(), s.successes, s.n_trials,
                s.mean_iterations_over_successes);
  out += buf;
  out += "* over successful trials\n\n";
  std::snprintf(buf, sizeof buf, "%-14s %8s %15s %16s %13s\n", "local minimum", "blow up",
                "undefined float", "singular matrix", "total failed");
  out += buf;
  std::snprintf(buf, sizeof buf, "%-14zu %8zu %15zu %16zu %13zu\n", s.local_minimum, s.blow_up,
                s.non_finite, s.singular_matrix, s.failures());
  out += buf;
  return out;
}

}  // namespace holonewt
