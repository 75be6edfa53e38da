#pragma once

// Trial results CSV:
//   seed,method,activation,outcome,iterations,final_error,stalled
// final_error is printed with 17 significant digits; stalled is "true" or
// "false" for local_minimum rows and empty otherwise.
//
// Stats JSON mirrors TrialStats.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "holonewt/network.hpp"
#include "holonewt/trainer.hpp"

namespace holonewt {

/// Activation label for reports: the shared id when every layer uses the same
/// activation, otherwise the per-layer ids joined with '+'.
std::string activation_label(const NetworkTopology& topo);

inline constexpr const char* kTrialsCsvHeader =
    "seed,method,activation,outcome,iterations,final_error,stalled";

void write_trials_csv(std::ostream& out, std::span<const TrialRecord> records, Method method,
                      const std::string& activation);

struct TrialCsvRow {
  std::uint64_t seed = 0;
  std::string method;
  std::string activation;
  Outcome outcome = Outcome::success;
  std::size_t iterations = 0;
  double final_error = 0.0;
  std::string stalled;
};

/// Parses a CSV produced by write_trials_csv; throws std::invalid_argument on
/// malformed input.
std::vector<TrialCsvRow> read_trials_csv(std::istream& in);

nlohmann::json stats_to_json(const TrialStats& stats);
TrialStats stats_from_json(const nlohmann::json& j);

nlohmann::json record_to_json(const TrialRecord& rec, Method method, const std::string& activation);

/// Error history CSV: iteration,error
void write_error_history_csv(std::ostream& out, std::span<const double> history);

/// Table-style text summary of a batch: successes and mean iterations, then
/// the failure breakdown by category.
std::string summary_table(const TrialStats& stats, Method method, const std::string& activation);

}  // namespace holonewt
