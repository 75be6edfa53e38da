#pragma once

// Fully connected holomorphic MLP without bias terms.
//
// Layers are numbered 0..L: layer 0 holds the inputs, layer L the outputs.
// The weights feeding layer p (p = 1..L) form the vector w^(p-1), stored as
// WeightSet::layers[p - 1], with w^(p-1)_ji (target j, source i) at 1-based
// position (j-1)*K_{p-1} + i.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "holonewt/activation.hpp"
#include "holonewt/complex_core.hpp"

namespace holonewt {

struct NetworkTopology {
  /// K_0 = m inputs, ..., K_L = C outputs.
  std::vector<std::size_t> widths;
  /// One activation per non-input layer: activations[p - 1] is g_p.
  std::vector<Activation> activations;

  std::size_t layers() const { return widths.empty() ? 0 : widths.size() - 1; }
  std::size_t inputs() const { return widths.front(); }
  std::size_t outputs() const { return widths.back(); }
  /// Number of weights feeding layer p.
  std::size_t layer_size(std::size_t p) const { return widths[p] * widths[p - 1]; }
  const Activation& activation(std::size_t p) const { return activations[p - 1]; }

  /// Throws std::invalid_argument unless L >= 1, every width >= 1 and there is
  /// one activation per non-input layer.
  void validate() const;

  static NetworkTopology uniform(std::vector<std::size_t> widths, ActivationId id);
};

struct WeightSet {
  std::vector<CVector> layers;

  static WeightSet zeros(const NetworkTopology& topo);

  /// w^(p-1), the weights feeding layer p.
  CVector& into(std::size_t p) { return layers[p - 1]; }
  const CVector& into(std::size_t p) const { return layers[p - 1]; }

  /// All layers concatenated, layer 1 first.
  CVector flatten() const;

  bool operator==(const WeightSet&) const = default;
};

/// 1-based position of w^(p-1)_ji inside w^(p-1); j and i are 1-based too.
/// Throws std::out_of_range for indices outside the layer.
std::size_t flat_index(const NetworkTopology& topo, std::size_t p, std::size_t j, std::size_t i);

/// 0-based offset used internally: j0 * k_prev + i0.
constexpr std::size_t offset(std::size_t j0, std::size_t i0, std::size_t k_prev) {
  return j0 * k_prev + i0;
}

struct Sample {
  CVector input;
  CVector target;
};

struct Dataset {
  std::vector<Sample> samples;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  /// Throws std::invalid_argument if the dataset is empty or any sample does
  /// not match the topology's input/output widths.
  void validate(const NetworkTopology& topo) const;
};

/// Net sums and outputs of every layer for one sample. Index 0 holds the
/// input in both arrays (there is no net sum for the input layer).
struct SampleTrace {
  std::vector<CVector> nets;
  std::vector<CVector> outputs;

  const CVector& y() const { return outputs.back(); }
};

/// Traces for every sample of a batch, in dataset order.
struct ForwardTrace {
  std::vector<SampleTrace> samples;

  std::size_t size() const { return samples.size(); }
  const SampleTrace& operator[](std::size_t t) const { return samples[t]; }
};

SampleTrace forward(const NetworkTopology& topo, const WeightSet& weights,
                    std::span<const cplx> input);
ForwardTrace forward(const NetworkTopology& topo, const WeightSet& weights, const Dataset& data);

/// E = (1/N) sum_t sum_l |y_tl - d_tl|^2, computed from an existing trace.
double error(const ForwardTrace& trace, const Dataset& data);
double error(const NetworkTopology& topo, const WeightSet& weights, const Dataset& data);

}  // namespace holonewt
