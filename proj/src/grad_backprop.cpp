#include "holonewt/grad_backprop.hpp"

#include <stdexcept>

#include "holonewt/kernels.hpp"

namespace holonewt {

LayerDeltas delta_output(const NetworkTopology& topo, const ForwardTrace& trace,
                         const Dataset& data) {
  if (trace.size() != data.size()) throw std::invalid_argument("delta_output: trace/data size");
  const std::size_t depth = topo.layers();
  const Activation& g = topo.activation(depth);
  LayerDeltas out(trace.size());
  for (std::size_t t = 0; t < trace.size(); ++t) {
    const CVector& net = trace[t].nets[depth];
    const CVector& y = trace[t].outputs[depth];
    const CVector& d = data.samples[t].target;
    out[t].resize(net.size());
    for (std::size_t l = 0; l < net.size(); ++l)
      out[t][l] = (y[l] - d[l]) * g.d1(std::conj(net[l]));
  }
  return out;
}

LayerDeltas delta_hidden(const NetworkTopology& topo, const LayerDeltas& delta_next,
                         std::span<const cplx> weights_next, const ForwardTrace& trace,
                         std::size_t p) {
  if (p < 1 || p >= topo.layers()) throw std::invalid_argument("delta_hidden: not a hidden layer");
  const std::size_t k = topo.widths[p];
  const std::size_t k_next = topo.widths[p + 1];
  const Activation& g = topo.activation(p);
  LayerDeltas out(trace.size());
  for (std::size_t t = 0; t < trace.size(); ++t) {
    const CVector& net = trace[t].nets[p];
    out[t].resize(k);
    for (std::size_t j = 0; j < k; ++j) {
      cplx acc{};
      for (std::size_t a = 0; a < k_next; ++a)
        acc += delta_next[t][a] * std::conj(weights_next[offset(a, j, k)]);
      out[t][j] = acc * g.d1(std::conj(net[j]));
    }
  }
  return out;
}

CVector cogradient_conj(const NetworkTopology& topo, const LayerDeltas& deltas,
                        const ForwardTrace& trace, std::size_t p) {
  const std::size_t k_prev = topo.widths[p - 1];
  const std::size_t k = topo.widths[p];
  const double inv_n = 1.0 / static_cast<double>(trace.size());
  CVector grad(k * k_prev);
  CVector x_conj;
  for (std::size_t t = 0; t < trace.size(); ++t) {
    x_conj = elementwise_conj(trace[t].outputs[p - 1]);
    for (std::size_t j = 0; j < k; ++j) {
      kernels::axpy(deltas[t][j] * inv_n, x_conj,
                    std::span<cplx>(grad).subspan(offset(j, 0, k_prev), k_prev));
    }
  }
  return grad;
}

CVector gd_update(std::span<const cplx> cograd_conj) {
  CVector out(cograd_conj.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = -cograd_conj[k];
  return out;
}

}  // namespace holonewt
