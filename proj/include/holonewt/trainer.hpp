#pragma once

// Full-batch training loop and seeded trial batches.
//
// One iteration sweeps the layers from the output layer down to layer 1. Each
// layer is updated as soon as its step is known, and the next (lower) layer's
// deltas and Hessians are computed with those updated weights. The forward
// trace is computed once per iteration and not refreshed between layers.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "holonewt/complex_core.hpp"
#include "holonewt/network.hpp"
#include "holonewt/steplength.hpp"

namespace holonewt {

enum class Method { gradient_descent, newton, pseudo_newton };

std::string_view to_string(Method m);
Method parse_method(std::string_view name);

enum class Outcome { success, local_minimum, blow_up, non_finite, singular_matrix };

std::string_view to_string(Outcome o);
Outcome parse_outcome(std::string_view name);

struct TrainConfig {
  Method method = Method::pseudo_newton;
  /// Newton-family methods use step.omega and, in one_step_newton mode, the
  /// one-step steplength. Gradient descent always uses w += mu * dw with
  /// mu = step.constant_mu and no underrelaxation.
  StepConfig step;
  double error_target = 0.001;
  /// 0 selects the method default (50000 for gradient descent, 5000 otherwise).
  std::size_t max_iters = 0;
  double blowup_threshold = 1e10;
  double stall_tolerance = 1e-10;
  /// Real and imaginary parts of the initial weights are uniform on
  /// [-init_range, init_range].
  double init_range = 1.0;
  /// Pivot threshold for the Newton-family solves. Hidden-layer H_ww of a
  /// network without bias terms is rank deficient whenever there are fewer
  /// informative samples than weights (XOR: rank <= 3 for 8 weights), so
  /// the default only flags pivots that are exactly zero.
  double singular_pivot_ratio = 0.0;

  bool record_errors = false;
  bool record_weights = false;

  std::size_t iteration_budget() const;
  /// Throws std::invalid_argument on invalid values or on gradient descent
  /// combined with the one-step Newton steplength.
  void validate() const;

  static TrainConfig for_method(Method m);
};

struct TrialRecord {
  std::uint64_t seed = 0;
  Outcome outcome = Outcome::local_minimum;
  /// Completed weight-update iterations.
  std::size_t iterations = 0;
  double final_error = 0.0;
  /// For local_minimum: whether the last two errors differed by at most the
  /// stall tolerance. Budget exhaustion without a stall is still reported as
  /// local_minimum, with stalled == false.
  bool stalled = false;
  std::vector<double> error_history;
  /// Flattened weights after every iteration, starting with the initial ones.
  std::vector<CVector> weight_history;
  WeightSet final_weights;
};

struct TrialStats {
  std::size_t n_trials = 0;
  std::size_t successes = 0;
  /// Mean iteration count over successful trials only; 0 when none succeeded.
  double mean_iterations_over_successes = 0.0;
  std::size_t local_minimum = 0;
  std::size_t blow_up = 0;
  std::size_t non_finite = 0;
  std::size_t singular_matrix = 0;

  std::size_t failures() const { return local_minimum + blow_up + non_finite + singular_matrix; }
  bool operator==(const TrialStats&) const = default;
};

struct TrialBatch {
  TrialStats stats;
  std::vector<TrialRecord> records;
};

/// Initial weights for a trial; depends only on topology, range and seed.
WeightSet initial_weights(const NetworkTopology& topo, double init_range, std::uint64_t seed);

/// Decides whether training stops after the last entry of error_history.
/// Returns nullopt while training should continue. Precedence:
/// non_finite > singular_matrix > success > blow_up > local_minimum.
std::optional<Outcome> classify_outcome(std::span<const double> error_history,
                                        const TrainConfig& cfg, bool singular_flag,
                                        bool nonfinite_flag);

TrialRecord train(const NetworkTopology& topo, const Dataset& data, const TrainConfig& cfg,
                  std::uint64_t seed);
/// Trains from the given weights instead of seeded random ones.
TrialRecord train_from(const NetworkTopology& topo, const Dataset& data, const TrainConfig& cfg,
                       WeightSet weights, std::uint64_t seed = 0);

TrialStats aggregate(std::span<const TrialRecord> records);

/// Trial k uses seed base_seed + k. Trials run on up to `jobs` threads; the
/// result does not depend on the thread count.
TrialBatch run_trials(const NetworkTopology& topo, const Dataset& data, const TrainConfig& cfg,
                      std::size_t n, std::uint64_t base_seed, std::size_t jobs = 1);

/// Root-convergence factor estimate max_{n in trailing half} |z(n) - z_final|^(1/n),
/// with z(0) the first entry. Requires at least 4 entries.
double r_factor_estimate(std::span<const CVector> weight_history);

}  // namespace holonewt
