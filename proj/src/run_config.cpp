#include "holonewt/run_config.hpp"

#include <string>

#include "holonewt/network_io.hpp"

namespace holonewt {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("config: missing key '") + key + "'");
  return j.at(key);
}

template <class T>
T get_or(const json& obj, const char* key, T fallback) {
  if (!obj.contains(key)) return fallback;
  return obj.at(key).get<T>();
}

const std::vector<std::string_view> kTopLevel = {"topology", "activations", "dataset_path",
                                                 "method",   "steplength",  "trial",
                                                 "verify"};

}  // namespace

RunConfig parse_run_config(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (auto k : kTopLevel) known = known || key == k;
    if (!known) throw ConfigError("config: unknown key '" + key + "'");
  }

  RunConfig cfg;
  try {
    cfg.topology.widths = require(j, "topology").get<std::vector<std::size_t>>();
    const json& acts = require(j, "activations");
    const std::size_t n_layers = cfg.topology.widths.empty() ? 0 : cfg.topology.widths.size() - 1;
    if (acts.is_string()) {
      cfg.topology.activations.assign(n_layers,
                                      make_activation(parse_activation_id(acts.get<std::string>())));
    } else {
      for (const auto& a : acts)
        cfg.topology.activations.push_back(make_activation(parse_activation_id(a.get<std::string>())));
    }
    cfg.topology.validate();

    const std::filesystem::path dp = require(j, "dataset_path").get<std::string>();
    cfg.dataset_path = dp.is_absolute() ? dp : base_dir / dp;

    cfg.train = TrainConfig::for_method(parse_method(require(j, "method").get<std::string>()));
    if (j.contains("steplength")) {
      const json& s = j.at("steplength");
      if (s.contains("mode")) cfg.train.step.mode = parse_step_mode(s.at("mode").get<std::string>());
      cfg.train.step.omega = get_or(s, "omega", cfg.train.step.omega);
      cfg.train.step.constant_mu = get_or(s, "mu", cfg.train.step.constant_mu);
    }
    if (j.contains("trial")) {
      const json& t = j.at("trial");
      cfg.train.error_target = get_or(t, "error_target", cfg.train.error_target);
      if (t.contains("max_iters")) {
        const auto m = t.at("max_iters").get<std::int64_t>();
        if (m < 1) throw ConfigError("config: trial.max_iters must be >= 1");
        cfg.train.max_iters = static_cast<std::size_t>(m);
      }
      cfg.train.blowup_threshold = get_or(t, "blowup_threshold", cfg.train.blowup_threshold);
      cfg.train.stall_tolerance = get_or(t, "stall_tolerance", cfg.train.stall_tolerance);
      cfg.train.init_range = get_or(t, "init_range", cfg.train.init_range);
      cfg.train.singular_pivot_ratio =
          get_or(t, "singular_pivot_ratio", cfg.train.singular_pivot_ratio);
      cfg.seed = get_or<std::uint64_t>(t, "seed", 0);
    }
    if (j.contains("verify")) cfg.verify_tolerance = get_or(j.at("verify"), "tolerance", 1e-5);
    if (!(cfg.verify_tolerance > 0.0)) throw ConfigError("config: verify.tolerance must be > 0");
    cfg.train.validate();
  } catch (const ConfigError&) {
    throw;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  json j;
  try {
    j = read_json_file(path);
  } catch (const std::runtime_error& e) {
    throw ConfigError(e.what());
  }
  return parse_run_config(j, path.parent_path());
}

json run_config_to_json(const RunConfig& cfg) {
  json acts = json::array();
  for (const auto& a : cfg.topology.activations) acts.push_back(std::string(to_string(a.id)));
  return {{"topology", cfg.topology.widths},
          {"activations", acts},
          {"dataset_path", cfg.dataset_path.string()},
          {"method", std::string(to_string(cfg.train.method))},
          {"steplength",
           {{"mode", std::string(to_string(cfg.train.step.mode))},
            {"omega", cfg.train.step.omega},
            {"mu", cfg.train.step.constant_mu}}},
          {"trial",
           {{"error_target", cfg.train.error_target},
            {"max_iters", cfg.train.iteration_budget()},
            {"blowup_threshold", cfg.train.blowup_threshold},
            {"stall_tolerance", cfg.train.stall_tolerance},
            {"init_range", cfg.train.init_range},
            {"singular_pivot_ratio", cfg.train.singular_pivot_ratio},
            {"seed", cfg.seed}}},
          {"verify", {{"tolerance", cfg.verify_tolerance}}}};
}

}  // namespace holonewt
