// holonewt: train, run trial batches and verify derivatives from a JSON config.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 numerical failure
// (failed training outcome, derivative check out of tolerance).

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "holonewt/fd_oracle.hpp"
#include "holonewt/kernels.hpp"
#include "holonewt/network_io.hpp"
#include "holonewt/newton_backprop.hpp"
#include "holonewt/run_config.hpp"
#include "holonewt/trainer.hpp"
#include "holonewt/trial_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace holonewt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Manifest {
 public:
  Manifest(const RunConfig& cfg, std::string command)
      : start_(std::chrono::steady_clock::now()) {
    body_ = {{"tool", "holonewt"},
             {"version", HOLONEWT_VERSION},
             {"command", std::move(command)},
             {"kernel_isa", std::string(kernels::to_string(kernels::active().isa))},
             {"config", run_config_to_json(cfg)},
             {"artifacts", json::object()}};
  }

  void set(const std::string& key, json value) { body_[key] = std::move(value); }
  void artifact(const std::string& name, const fs::path& path) {
    body_["artifacts"][name] = path.string();
  }

  void write(const fs::path& out_dir) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    body_["wall_clock_seconds"] = elapsed.count();
    body_["artifacts"]["manifest"] = (out_dir / "manifest.json").string();
    write_json_file(out_dir / "manifest.json", body_);
  }

 private:
  std::chrono::steady_clock::time_point start_;
  json body_;
};

void prepare_out_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw UsageError("cannot create output directory '" + dir.string() + "'");
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path.string() + "'");
  return out;
}

std::size_t resolve_jobs(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("HOLONEWT_JOBS"); env && *env) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(env, &used);
      if (used == std::string(env).size() && v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("HOLONEWT_JOBS must be a positive integer, got '") + env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_train(const fs::path& config_path, const fs::path& out_dir, std::optional<std::uint64_t> seed) {
  const RunConfig cfg = load_run_config(config_path);
  const Dataset data = load_dataset(cfg.dataset_path);
  data.validate(cfg.topology);
  prepare_out_dir(out_dir);
  Manifest manifest(cfg, "train");

  TrainConfig tc = cfg.train;
  tc.record_errors = true;
  const std::uint64_t s = seed.value_or(cfg.seed);
  const TrialRecord rec = train(cfg.topology, data, tc, s);
  const std::string act = activation_label(cfg.topology);

  const fs::path ckpt = out_dir / "checkpoint.json";
  write_json_file(ckpt, checkpoint_to_json(cfg.topology, rec.final_weights));
  const fs::path errors = out_dir / "errors.csv";
  {
    auto out = open_out(errors);
    write_error_history_csv(out, rec.error_history);
  }
  const fs::path record = out_dir / "record.json";
  write_json_file(record, record_to_json(rec, tc.method, act));

  manifest.artifact("checkpoint", ckpt);
  manifest.artifact("error_history", errors);
  manifest.artifact("record", record);
  manifest.set("seed", s);
  manifest.write(out_dir);

  std::cout << to_string(rec.outcome) << " after " << rec.iterations << " iterations, E = "
            << rec.final_error << '\n';
  return rec.outcome == Outcome::success ? kExitOk : kExitNumeric;
}

int cmd_trials(const fs::path& config_path, const fs::path& out_dir, std::size_t n,
               std::optional<std::uint64_t> seed, std::optional<std::size_t> jobs_flag) {
  if (n == 0) throw UsageError("--trials must be at least 1");
  const RunConfig cfg = load_run_config(config_path);
  const Dataset data = load_dataset(cfg.dataset_path);
  data.validate(cfg.topology);
  const std::size_t jobs = resolve_jobs(jobs_flag);
  prepare_out_dir(out_dir);
  Manifest manifest(cfg, "trials");

  const std::uint64_t base = seed.value_or(cfg.seed);
  const TrialBatch batch = run_trials(cfg.topology, data, cfg.train, n, base, jobs);
  const std::string act = activation_label(cfg.topology);

  const fs::path csv = out_dir / "trials.csv";
  {
    auto out = open_out(csv);
    write_trials_csv(out, batch.records, cfg.train.method, act);
  }
  const fs::path stats = out_dir / "stats.json";
  write_json_file(stats, stats_to_json(batch.stats));

  manifest.artifact("trials", csv);
  manifest.artifact("stats", stats);
  manifest.set("base_seed", base);
  manifest.set("n_trials", n);
  manifest.set("jobs", jobs);
  manifest.write(out_dir);

  std::cout << summary_table(batch.stats, cfg.train.method, act);
  return kExitOk;
}

int cmd_verify(const fs::path& config_path, std::optional<std::uint64_t> seed, double corrupt_d2,
               const std::optional<fs::path>& dump_path) {
  RunConfig cfg = load_run_config(config_path);
  const Dataset data = load_dataset(cfg.dataset_path);
  data.validate(cfg.topology);
  for (auto& a : cfg.topology.activations) a.d2_scale = corrupt_d2;

  const std::uint64_t s = seed.value_or(cfg.seed);
  const WeightSet w = initial_weights(cfg.topology, cfg.train.init_range, s);
  const VerifyReport report = verify_derivatives(cfg.topology, w, data, cfg.verify_tolerance, s);

  json out = report.to_json();
  out["seed"] = s;
  std::cout << out.dump(2) << '\n';

  if (dump_path) {
    json dump = json::array();
    for (const auto& d : layer_derivatives(cfg.topology, w, data, true)) {
      dump.push_back({{"layer", d.layer},
                      {"h_ww", matrix_to_json(d.hessians->ww)},
                      {"h_wbar_w", matrix_to_json(d.hessians->wbar_w)}});
    }
    write_json_file(*dump_path, dump);
  }
  return report.passed() ? kExitOk : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton and pseudo-Newton backpropagation for complex-valued MLPs"};
  app.set_version_flag("--version", HOLONEWT_VERSION);
  app.require_subcommand(1);

  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;

  auto* train_cmd = app.add_subcommand("train", "Train one network and write its artifacts");
  train_cmd->add_option("--config", config, "Run configuration (JSON)")->required();
  train_cmd->add_option("--out", out, "Output directory")->required();
  train_cmd->add_option("--seed", seed, "Initial-weight seed (default: trial.seed)");

  std::size_t n_trials = 0;
  std::optional<std::size_t> jobs;
  auto* trials_cmd = app.add_subcommand("trials", "Run a seeded batch of trials");
  trials_cmd->add_option("--config", config, "Run configuration (JSON)")->required();
  trials_cmd->add_option("--out", out, "Output directory")->required();
  trials_cmd->add_option("--trials", n_trials, "Number of trials")->required();
  trials_cmd->add_option("--seed", seed, "Base seed; trial k uses seed + k (default: trial.seed)");
  trials_cmd->add_option("--jobs", jobs, "Worker threads (fallback: HOLONEWT_JOBS)")
      ->check(CLI::PositiveNumber);

  double corrupt_d2 = 1.0;
  std::string dump;
  auto* verify_cmd = app.add_subcommand("verify", "Check analytic derivatives against finite differences");
  verify_cmd->add_option("--config", config, "Run configuration (JSON)")->required();
  verify_cmd->add_option("--seed", seed, "Seed for the random weights (default: trial.seed)");
  verify_cmd->add_option("--dump-hessians", dump, "Write the analytic Hessians to this JSON file");
  verify_cmd->add_option("--corrupt-d2", corrupt_d2, "Scale every activation's second derivative")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*train_cmd) return cmd_train(config, out, seed);
    if (*trials_cmd) return cmd_trials(config, out, n_trials, seed, jobs);
    if (*verify_cmd) {
      std::optional<fs::path> dump_path;
      if (!dump.empty()) dump_path = dump;
      return cmd_verify(config, seed, corrupt_d2, dump_path);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}
