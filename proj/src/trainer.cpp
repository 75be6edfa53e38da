#include "holonewt/trainer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "holonewt/grad_backprop.hpp"
#include "holonewt/newton_backprop.hpp"
#include "holonewt/random.hpp"

namespace holonewt {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::gradient_descent: return "gradient_descent";
    case Method::newton: return "newton";
    case Method::pseudo_newton: return "pseudo_newton";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "gradient_descent") return Method::gradient_descent;
  if (name == "newton") return Method::newton;
  if (name == "pseudo_newton") return Method::pseudo_newton;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::success: return "success";
    case Outcome::local_minimum: return "local_minimum";
    case Outcome::blow_up: return "blow_up";
    case Outcome::non_finite: return "non_finite";
    case Outcome::singular_matrix: return "singular_matrix";
  }
  return "unknown";
}

Outcome parse_outcome(std::string_view name) {
  for (Outcome o : {Outcome::success, Outcome::local_minimum, Outcome::blow_up,
                    Outcome::non_finite, Outcome::singular_matrix})
    if (to_string(o) == name) return o;
  throw std::invalid_argument("unknown outcome '" + std::string(name) + "'");
}

std::size_t TrainConfig::iteration_budget() const {
  if (max_iters != 0) return max_iters;
  return method == Method::gradient_descent ? 50000 : 5000;
}

void TrainConfig::validate() const {
  step.validate();
  if (!(error_target > 0.0)) throw std::invalid_argument("error_target must be > 0");
  if (!(blowup_threshold > error_target))
    throw std::invalid_argument("blowup_threshold must exceed error_target");
  if (!(stall_tolerance >= 0.0)) throw std::invalid_argument("stall_tolerance must be >= 0");
  if (!(init_range > 0.0)) throw std::invalid_argument("init_range must be > 0");
  if (!(singular_pivot_ratio >= 0.0 && singular_pivot_ratio < 1.0))
    throw std::invalid_argument("singular_pivot_ratio must be in [0, 1)");
  if (method == Method::gradient_descent && step.mode == StepMode::one_step_newton) {
    throw std::invalid_argument(
        "the one-step Newton steplength applies only to newton and pseudo_newton; "
        "use steplength.mode = constant with gradient_descent");
  }
}

TrainConfig TrainConfig::for_method(Method m) {
  TrainConfig cfg;
  cfg.method = m;
  if (m == Method::gradient_descent) cfg.step.mode = StepMode::constant;
  return cfg;
}

WeightSet initial_weights(const NetworkTopology& topo, double init_range, std::uint64_t seed) {
  UniformSource rng(seed);
  WeightSet w = WeightSet::zeros(topo);
  for (auto& layer : w.layers)
    for (auto& z : layer) z = rng.complex_box(init_range);
  return w;
}

std::optional<Outcome> classify_outcome(std::span<const double> error_history,
                                        const TrainConfig& cfg, bool singular_flag,
                                        bool nonfinite_flag) {
  if (error_history.empty()) throw std::invalid_argument("classify_outcome: empty history");
  const double e = error_history.back();
  if (nonfinite_flag || !std::isfinite(e)) return Outcome::non_finite;
  if (singular_flag) return Outcome::singular_matrix;
  if (e < cfg.error_target) return Outcome::success;
  if (e > cfg.blowup_threshold) return Outcome::blow_up;
  if (error_history.size() - 1 >= cfg.iteration_budget()) return Outcome::local_minimum;
  return std::nullopt;
}

namespace {

bool stalled(std::span<const double> h, double tol) {
  return h.size() >= 2 && std::abs(h[h.size() - 1] - h[h.size() - 2]) <= tol;
}

enum class StepStatus { ok, singular, non_finite };

// One sweep over all layers, output layer first.
StepStatus iterate(const NetworkTopology& topo, const Dataset& data, const TrainConfig& cfg,
                   const ForwardTrace& trace, WeightSet& weights) {
  const bool newton_family = cfg.method != Method::gradient_descent;
  BackwardSweep sweep(topo, trace, data, newton_family);
  while (!sweep.done()) {
    const std::size_t p = sweep.layer();
    const LayerDerivatives d = sweep.next(weights);
    if (!all_finite(d.cograd_conj)) return StepStatus::non_finite;

    CVector dw;
    double mu = cfg.step.constant_mu;
    double omega = 1.0;
    if (!newton_family) {
      dw = gd_update(d.cograd_conj);
    } else {
      const HessianPair& h = *d.hessians;
      if (!all_finite(h.ww) || !all_finite(h.wbar_w)) return StepStatus::non_finite;
      try {
        dw = cfg.method == Method::newton
                 ? newton_update(h, d.cograd_conj, cfg.singular_pivot_ratio)
                 : pseudo_newton_update(h.ww, d.cograd_conj, cfg.singular_pivot_ratio);
      } catch (const SingularMatrix&) {
        return StepStatus::singular;
      } catch (const std::domain_error&) {
        return StepStatus::non_finite;
      }
      if (!all_finite(dw)) return StepStatus::non_finite;
      omega = cfg.step.omega;
      if (cfg.step.mode == StepMode::one_step_newton) {
        if (max_abs(dw) == 0.0) continue;
        try {
          mu = one_step_mu(d.cograd_conj, dw, h.ww, h.wbar_w);
        } catch (const DegenerateStep&) {
          return StepStatus::non_finite;
        }
      }
    }
    if (!std::isfinite(mu) || !all_finite(dw)) return StepStatus::non_finite;
    apply_update(weights, p, dw, mu, omega);
  }
  return StepStatus::ok;
}

}  // namespace

TrialRecord train_from(const NetworkTopology& topo, const Dataset& data, const TrainConfig& cfg,
                       WeightSet weights, std::uint64_t seed) {
  topo.validate();
  data.validate(topo);
  cfg.validate();

  TrialRecord rec;
  rec.seed = seed;
  std::vector<double> history;
  ForwardTrace trace = forward(topo, weights, data);
  history.push_back(error(trace, data));
  if (cfg.record_weights) rec.weight_history.push_back(weights.flatten());

  bool singular = false;
  bool nonfinite = false;
  std::optional<Outcome> outcome;
  while (!(outcome = classify_outcome(history, cfg, singular, nonfinite))) {
    const StepStatus status = iterate(topo, data, cfg, trace, weights);
    if (status == StepStatus::singular) {
      singular = true;
      continue;
    }
    if (status == StepStatus::non_finite) {
      nonfinite = true;
      continue;
    }
    trace = forward(topo, weights, data);
    history.push_back(error(trace, data));
    if (cfg.record_weights) rec.weight_history.push_back(weights.flatten());
  }

  rec.outcome = *outcome;
  rec.iterations = history.size() - 1;
  rec.final_error = history.back();
  rec.stalled = stalled(history, cfg.stall_tolerance);
  rec.final_weights = std::move(weights);
  if (cfg.record_errors) rec.error_history = std::move(history);
  return rec;
}

TrialRecord train(const NetworkTopology& topo, const Dataset& data, const TrainConfig& cfg,
                  std::uint64_t seed) {
  return train_from(topo, data, cfg, initial_weights(topo, cfg.init_range, seed), seed);
}

TrialStats aggregate(std::span<const TrialRecord> records) {
  TrialStats s;
  s.n_trials = records.size();
  double iter_sum = 0.0;
  for (const auto& r : records) {
    switch (r.outcome) {
      case Outcome::success:
        ++s.successes;
        iter_sum += static_cast<double>(r.iterations);
        break;
      case Outcome::local_minimum: ++s.local_minimum; break;
      case Outcome::blow_up: ++s.blow_up; break;
      case Outcome::non_finite: ++s.non_finite; break;
      case Outcome::singular_matrix: ++s.singular_matrix; break;
    }
  }
  if (s.successes > 0) s.mean_iterations_over_successes = iter_sum / static_cast<double>(s.successes);
  return s;
}

TrialBatch run_trials(const NetworkTopology& topo, const Dataset& data, const TrainConfig& cfg,
                      std::size_t n, std::uint64_t base_seed, std::size_t jobs) {
  if (n == 0) throw std::invalid_argument("run_trials: need at least one trial");
  topo.validate();
  data.validate(topo);
  cfg.validate();

  TrialBatch batch;
  batch.records.resize(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next.fetch_add(1); k < n; k = next.fetch_add(1))
      batch.records[k] = train(topo, data, cfg, base_seed + k);
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, n);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  batch.stats = aggregate(batch.records);
  return batch;
}

double r_factor_estimate(std::span<const CVector> weight_history) {
  if (weight_history.size() < 4) throw std::invalid_argument("r_factor_estimate: need >= 4 iterates");
  const CVector& last = weight_history.back();
  const std::size_t final_n = weight_history.size() - 1;
  double best = 0.0;
  for (std::size_t n = std::max<std::size_t>(1, final_n / 2); n < final_n; ++n) {
    const double dist = norm2(subtract(weight_history[n], last));
    best = std::max(best, std::pow(dist, 1.0 / static_cast<double>(n)));
  }
  return best;
}

}  // namespace holonewt
