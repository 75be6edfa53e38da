#include "holonewt/newton_backprop.hpp"

#include <stdexcept>

#include "holonewt/kernels.hpp"

namespace holonewt {

namespace {

// W^(p) viewed as a K_{p+1} x K_p matrix: row eta, column j.
CMatrix weight_matrix(const NetworkTopology& topo, std::span<const cplx> w, std::size_t p) {
  const std::size_t rows = topo.widths[p + 1];
  const std::size_t cols = topo.widths[p];
  if (w.size() != rows * cols) throw std::invalid_argument("weight vector has wrong length");
  return CMatrix(rows, cols, CVector(w.begin(), w.end()));
}

void check_hidden(const NetworkTopology& topo, std::size_t p) {
  if (p < 1 || p >= topo.layers()) throw std::invalid_argument("not a hidden layer");
}

// Adds scale * kron(coef, u v^T) to h, where coef is K x K and u, v have
// length K_prev. Row (j,i) / column (b,a) in flat-index order.
void accumulate_block_outer(CMatrix& h, const CMatrix& coef, std::span<const cplx> u,
                            std::span<const cplx> v, double scale) {
  const std::size_t k = coef.rows();
  const std::size_t k_prev = u.size();
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t b = 0; b < k; ++b) {
      const cplx c = coef(j, b) * scale;
      if (c == cplx{}) continue;
      for (std::size_t i = 0; i < k_prev; ++i) {
        kernels::axpy(c * u[i], v, h.row(offset(j, i, k_prev)).subspan(offset(b, 0, k_prev), k_prev));
      }
    }
  }
}

}  // namespace

LayerGamma gamma_init(const NetworkTopology& topo, const ForwardTrace& trace) {
  const std::size_t depth = topo.layers();
  const std::size_t c = topo.outputs();
  const Activation& g = topo.activation(depth);
  LayerGamma out(trace.size(), CMatrix(c, c));
  for (std::size_t t = 0; t < trace.size(); ++t) {
    const CVector& net = trace[t].nets[depth];
    for (std::size_t l = 0; l < c; ++l) out[t](l, l) = g.d1(std::conj(net[l])) * g.d1(net[l]);
  }
  return out;
}

LayerGamma gamma_step(const NetworkTopology& topo, const LayerGamma& gamma_next,
                      std::span<const cplx> weights_next, const ForwardTrace& trace,
                      std::size_t p) {
  check_hidden(topo, p);
  const CMatrix w = weight_matrix(topo, weights_next, p);
  const CMatrix w_h = conj_transpose(w);
  const Activation& g = topo.activation(p);
  const std::size_t k = topo.widths[p];
  LayerGamma out(trace.size());
  for (std::size_t t = 0; t < trace.size(); ++t) {
    // [sum_eta sum_beta gamma_eta,beta conj(w_eta,j) w_beta,b] = (W^H Gamma W)_jb
    CMatrix m = multiply(w_h, multiply(gamma_next[t], w));
    const CVector& net = trace[t].nets[p];
    for (std::size_t j = 0; j < k; ++j) {
      const cplx left = g.d1(std::conj(net[j]));
      for (std::size_t b = 0; b < k; ++b) m(j, b) *= left * g.d1(net[b]);
    }
    out[t] = std::move(m);
  }
  return out;
}

LayerTheta theta_init(const NetworkTopology& topo, const ForwardTrace& trace, const Dataset& data) {
  const std::size_t depth = topo.layers();
  const Activation& g = topo.activation(depth);
  LayerTheta out(trace.size());
  for (std::size_t t = 0; t < trace.size(); ++t) {
    const CVector& net = trace[t].nets[depth];
    const CVector& y = trace[t].outputs[depth];
    const CVector& d = data.samples[t].target;
    out[t].resize(net.size());
    for (std::size_t l = 0; l < net.size(); ++l)
      out[t][l] = (y[l] - d[l]) * g.d2(std::conj(net[l]));
  }
  return out;
}

LayerTheta theta_step(const NetworkTopology& topo, const LayerDeltas& delta_next,
                      std::span<const cplx> weights_next, const ForwardTrace& trace,
                      std::size_t p) {
  check_hidden(topo, p);
  const std::size_t k = topo.widths[p];
  const std::size_t k_next = topo.widths[p + 1];
  const Activation& g = topo.activation(p);
  LayerTheta out(trace.size());
  for (std::size_t t = 0; t < trace.size(); ++t) {
    const CVector& net = trace[t].nets[p];
    out[t].resize(k);
    for (std::size_t j = 0; j < k; ++j) {
      // Same bracket as the delta recursion: sum_eta E^(p+1)_eta conj(w^(p)_eta,j).
      cplx acc{};
      for (std::size_t eta = 0; eta < k_next; ++eta)
        acc += delta_next[t][eta] * std::conj(weights_next[offset(eta, j, k)]);
      out[t][j] = acc * g.d2(std::conj(net[j]));
    }
  }
  return out;
}

LayerPsi psi_init(const NetworkTopology& topo, std::size_t samples) {
  const std::size_t c = topo.outputs();
  return LayerPsi(samples, CMatrix(c, c));
}

LayerPsi psi_step(const NetworkTopology& topo, const LayerPsi& psi_next,
                  const LayerTheta& theta_next, std::span<const cplx> weights_next,
                  const ForwardTrace& trace, std::size_t p) {
  check_hidden(topo, p);
  const CMatrix w = weight_matrix(topo, weights_next, p);
  const CMatrix w_bar = conj(w);
  const CMatrix w_h = conj_transpose(w);
  const std::size_t k = topo.widths[p];
  const std::size_t k_next = topo.widths[p + 1];
  const Activation& g = topo.activation(p);
  LayerPsi out(trace.size());
  for (std::size_t t = 0; t < trace.size(); ++t) {
    // inner_eta,b = sum_beta psi_eta,beta conj(w_beta,b) + theta_eta,eta conj(w_eta,b)
    CMatrix inner = multiply(psi_next[t], w_bar);
    for (std::size_t eta = 0; eta < k_next; ++eta)
      kernels::axpy(theta_next[t][eta], w_bar.row(eta), inner.row(eta));
    // sum_eta conj(w_eta,j) inner_eta,b = (W^H inner)_jb
    CMatrix m = multiply(w_h, inner);
    const CVector& net = trace[t].nets[p];
    for (std::size_t j = 0; j < k; ++j) {
      const cplx left = g.d1(std::conj(net[j]));
      for (std::size_t b = 0; b < k; ++b) m(j, b) *= left * g.d1(std::conj(net[b]));
    }
    out[t] = std::move(m);
  }
  return out;
}

CMatrix assemble_H_ww(const NetworkTopology& topo, const LayerGamma& gamma,
                      const ForwardTrace& trace, std::size_t p) {
  const std::size_t n = topo.layer_size(p);
  const double inv_n = 1.0 / static_cast<double>(trace.size());
  CMatrix h(n, n);
  for (std::size_t t = 0; t < trace.size(); ++t) {
    const CVector& x = trace[t].outputs[p - 1];
    accumulate_block_outer(h, gamma[t], elementwise_conj(x), x, inv_n);
  }
  return h;
}

CMatrix assemble_H_wbar_w(const NetworkTopology& topo, const LayerPsi& psi,
                          const LayerTheta& theta, const ForwardTrace& trace, std::size_t p) {
  const std::size_t n = topo.layer_size(p);
  const double inv_n = 1.0 / static_cast<double>(trace.size());
  CMatrix h(n, n);
  for (std::size_t t = 0; t < trace.size(); ++t) {
    CMatrix coef = psi[t];
    for (std::size_t j = 0; j < coef.rows(); ++j) coef(j, j) += theta[t][j];
    const CVector x_conj = elementwise_conj(trace[t].outputs[p - 1]);
    accumulate_block_outer(h, coef, x_conj, x_conj, inv_n);
  }
  return h;
}

CVector newton_update(const HessianPair& h, std::span<const cplx> cograd_conj,
                      double pivot_ratio) {
  const CMatrix h_wbar_wbar = h.wbar_wbar();
  // X = H_w̄w̄^-1 H_ww̄ and y = H_w̄w̄^-1 (dE/dw̄)* share one factorization.
  const std::size_t n = cograd_conj.size();
  CMatrix rhs(n, n + 1);
  const CMatrix h_w_wbar = h.w_wbar();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) rhs(r, c) = h_w_wbar(r, c);
    rhs(r, n) = std::conj(cograd_conj[r]);
  }
  const CMatrix sol = solve(h_wbar_wbar, rhs, pivot_ratio);
  CMatrix x(n, n);
  CVector y(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) x(r, c) = sol(r, c);
    y[r] = sol(r, n);
  }
  const CMatrix schur = subtract(h.ww, multiply(h.wbar_w, x));
  const CVector b = subtract(multiply(h.wbar_w, y), cograd_conj);
  return solve(schur, b, pivot_ratio);
}

CVector pseudo_newton_update(const CMatrix& h_ww, std::span<const cplx> cograd_conj,
                             double pivot_ratio) {
  CVector neg(cograd_conj.size());
  for (std::size_t k = 0; k < neg.size(); ++k) neg[k] = -cograd_conj[k];
  return solve(h_ww, neg, pivot_ratio);
}

BackwardSweep::BackwardSweep(const NetworkTopology& topo, const ForwardTrace& trace,
                             const Dataset& data, bool with_hessians)
    : topo_(topo), trace_(trace), data_(data), with_hessians_(with_hessians),
      layer_(topo.layers()) {}

LayerDerivatives BackwardSweep::next(const WeightSet& weights) {
  if (done()) throw std::logic_error("BackwardSweep: all layers already processed");
  const std::size_t p = layer_;
  if (p == topo_.layers()) {
    deltas_ = delta_output(topo_, trace_, data_);
    if (with_hessians_) {
      gamma_ = gamma_init(topo_, trace_);
      theta_ = theta_init(topo_, trace_, data_);
      psi_ = psi_init(topo_, trace_.size());
    }
  } else {
    const CVector& w_next = weights.into(p + 1);
    if (with_hessians_) {
      // theta^(p) and psi^(p) need the layer-(p+1) deltas and theta, so they
      // are stepped before the deltas are overwritten.
      LayerTheta theta = theta_step(topo_, deltas_, w_next, trace_, p);
      psi_ = psi_step(topo_, psi_, theta_, w_next, trace_, p);
      theta_ = std::move(theta);
      gamma_ = gamma_step(topo_, gamma_, w_next, trace_, p);
    }
    deltas_ = delta_hidden(topo_, deltas_, w_next, trace_, p);
  }

  LayerDerivatives out;
  out.layer = p;
  out.cograd_conj = cogradient_conj(topo_, deltas_, trace_, p);
  if (with_hessians_) {
    out.hessians = HessianPair{assemble_H_ww(topo_, gamma_, trace_, p),
                               assemble_H_wbar_w(topo_, psi_, theta_, trace_, p)};
  }
  --layer_;
  return out;
}

std::vector<LayerDerivatives> layer_derivatives(const NetworkTopology& topo,
                                                const WeightSet& weights, const Dataset& data,
                                                bool with_hessians) {
  const ForwardTrace trace = forward(topo, weights, data);
  BackwardSweep sweep(topo, trace, data, with_hessians);
  std::vector<LayerDerivatives> out(topo.layers());
  while (!sweep.done()) {
    const std::size_t p = sweep.layer();
    out[p - 1] = sweep.next(weights);
  }
  return out;
}

}  // namespace holonewt
