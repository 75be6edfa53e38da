#pragma once

// Run configuration file (JSON):
//
//   {
//     "topology": [2, 4, 1],
//     "activations": "taylor3",            // or one id per layer
//     "dataset_path": "../data/xor.json",  // relative to the config file
//     "method": "pseudo_newton",
//     "steplength": {"mode": "one_step_newton", "omega": 0.5, "mu": 1.0},
//     "trial": {"error_target": 0.001, "max_iters": 5000, "blowup_threshold": 1e10,
//               "stall_tolerance": 1e-10, "init_range": 1.0, "singular_pivot_ratio": 0,
//               "seed": 0},
//     "verify": {"tolerance": 1e-5}
//   }
//
// Only topology, activations, dataset_path and method are required.

#include <cstdint>
#include <filesystem>
#include <stdexcept>

#include <json.hpp>

#include "holonewt/network.hpp"
#include "holonewt/trainer.hpp"

namespace holonewt {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  NetworkTopology topology;
  std::filesystem::path dataset_path;
  TrainConfig train;
  std::uint64_t seed = 0;
  double verify_tolerance = 1e-5;
};

/// Parses and validates; dataset_path is resolved against base_dir. Throws
/// ConfigError with a readable message on any problem.
RunConfig parse_run_config(const nlohmann::json& j, const std::filesystem::path& base_dir);
RunConfig load_run_config(const std::filesystem::path& path);

nlohmann::json run_config_to_json(const RunConfig& cfg);

}  // namespace holonewt
