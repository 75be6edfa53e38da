#include "holonewt/network.hpp"

#include <stdexcept>
#include <string>

#include "holonewt/kernels.hpp"

namespace holonewt {

void NetworkTopology::validate() const {
  if (widths.size() < 2) throw std::invalid_argument("topology needs at least two layers");
  for (std::size_t w : widths)
    if (w == 0) throw std::invalid_argument("topology widths must be >= 1");
  if (activations.size() != layers()) {
    throw std::invalid_argument("topology has " + std::to_string(layers()) + " layers but " +
                                std::to_string(activations.size()) + " activations");
  }
}

NetworkTopology NetworkTopology::uniform(std::vector<std::size_t> widths, ActivationId id) {
  NetworkTopology topo;
  topo.activations.assign(widths.empty() ? 0 : widths.size() - 1, make_activation(id));
  topo.widths = std::move(widths);
  return topo;
}

WeightSet WeightSet::zeros(const NetworkTopology& topo) {
  WeightSet w;
  for (std::size_t p = 1; p <= topo.layers(); ++p) w.layers.emplace_back(topo.layer_size(p));
  return w;
}

CVector WeightSet::flatten() const {
  CVector out;
  for (const auto& layer : layers) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

std::size_t flat_index(const NetworkTopology& topo, std::size_t p, std::size_t j, std::size_t i) {
  if (p < 1 || p > topo.layers()) throw std::out_of_range("flat_index: layer out of range");
  if (j < 1 || j > topo.widths[p]) throw std::out_of_range("flat_index: target node out of range");
  if (i < 1 || i > topo.widths[p - 1])
    throw std::out_of_range("flat_index: source node out of range");
  return (j - 1) * topo.widths[p - 1] + i;
}

void Dataset::validate(const NetworkTopology& topo) const {
  if (samples.empty()) throw std::invalid_argument("dataset is empty");
  for (std::size_t t = 0; t < samples.size(); ++t) {
    if (samples[t].input.size() != topo.inputs() || samples[t].target.size() != topo.outputs()) {
      throw std::invalid_argument("dataset sample " + std::to_string(t) +
                                  " does not match the topology's input/output widths");
    }
  }
}

SampleTrace forward(const NetworkTopology& topo, const WeightSet& weights,
                    std::span<const cplx> input) {
  if (input.size() != topo.inputs()) throw std::invalid_argument("forward: input length mismatch");
  const std::size_t depth = topo.layers();
  SampleTrace tr;
  tr.nets.resize(depth + 1);
  tr.outputs.resize(depth + 1);
  tr.nets[0].assign(input.begin(), input.end());
  tr.outputs[0].assign(input.begin(), input.end());

  for (std::size_t p = 1; p <= depth; ++p) {
    const std::size_t k_prev = topo.widths[p - 1];
    const std::size_t k = topo.widths[p];
    const CVector& w = weights.into(p);
    const CVector& x = tr.outputs[p - 1];
    const Activation& g = topo.activation(p);
    CVector& net = tr.nets[p];
    CVector& out = tr.outputs[p];
    net.resize(k);
    out.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
      net[j] = kernels::dotu(std::span<const cplx>(w).subspan(offset(j, 0, k_prev), k_prev), x);
      out[j] = g.eval(net[j]);
    }
  }
  return tr;
}

ForwardTrace forward(const NetworkTopology& topo, const WeightSet& weights, const Dataset& data) {
  ForwardTrace trace;
  trace.samples.reserve(data.size());
  for (const auto& s : data.samples) trace.samples.push_back(forward(topo, weights, s.input));
  return trace;
}

double error(const ForwardTrace& trace, const Dataset& data) {
  if (data.empty()) throw std::invalid_argument("error: dataset is empty");
  double sum = 0.0;
  for (std::size_t t = 0; t < data.size(); ++t) {
    const CVector& y = trace[t].y();
    const CVector& d = data.samples[t].target;
    for (std::size_t l = 0; l < y.size(); ++l) sum += std::norm(y[l] - d[l]);
  }
  return sum / static_cast<double>(data.size());
}

double error(const NetworkTopology& topo, const WeightSet& weights, const Dataset& data) {
  return error(forward(topo, weights, data), data);
}

}  // namespace holonewt
