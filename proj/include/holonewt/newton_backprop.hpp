#pragma once

// Layerwise Hessians of the sum-of-squares error and the Newton /
// pseudo-Newton weight updates built from them.
//
// For the weights w = w^(p-1) feeding layer p the two independent Hessians are
//
//   H_ww [(j,i),(b,a)] = d/dw_ba    (dE/dw_ji)* = (1/N) sum_t gamma_tjb conj(x_ti) x_ta
//   H_w̄w [(j,i),(b,a)] = d/dconj(w_ba) (dE/dw_ji)* = (1/N) sum_t (psi_tjb + theta_tjb) conj(x_ti) conj(x_ta)
//
// with x = x^(p-1). gamma, theta and psi are propagated backwards from the
// output layer; theta is diagonal and psi vanishes at the output layer.
// The remaining two Hessians are entrywise conjugates:
// H_ww̄ = conj(H_w̄w), H_w̄w̄ = conj(H_ww).

#include <optional>
#include <span>
#include <vector>

#include "holonewt/complex_core.hpp"
#include "holonewt/grad_backprop.hpp"
#include "holonewt/network.hpp"

namespace holonewt {

/// gamma[t] is the K_p x K_p matrix gamma^(p)_t.
using LayerGamma = std::vector<CMatrix>;
/// theta[t][j] = theta^(p)_tjj; off-diagonal entries are identically zero.
using LayerTheta = std::vector<CVector>;
/// psi[t] is the K_p x K_p matrix psi^(p)_t.
using LayerPsi = std::vector<CMatrix>;

struct HessianPair {
  CMatrix ww;
  CMatrix wbar_w;

  CMatrix w_wbar() const { return conj(wbar_w); }
  CMatrix wbar_wbar() const { return conj(ww); }
};

LayerGamma gamma_init(const NetworkTopology& topo, const ForwardTrace& trace);
/// gamma^(p) from gamma^(p+1); weights_next is w^(p).
LayerGamma gamma_step(const NetworkTopology& topo, const LayerGamma& gamma_next,
                      std::span<const cplx> weights_next, const ForwardTrace& trace,
                      std::size_t p);

LayerTheta theta_init(const NetworkTopology& topo, const ForwardTrace& trace, const Dataset& data);
/// theta^(p) from the layer-(p+1) deltas; weights_next is w^(p).
LayerTheta theta_step(const NetworkTopology& topo, const LayerDeltas& delta_next,
                      std::span<const cplx> weights_next, const ForwardTrace& trace,
                      std::size_t p);

/// psi^(L): all zeros.
LayerPsi psi_init(const NetworkTopology& topo, std::size_t samples);
LayerPsi psi_step(const NetworkTopology& topo, const LayerPsi& psi_next,
                  const LayerTheta& theta_next, std::span<const cplx> weights_next,
                  const ForwardTrace& trace, std::size_t p);

CMatrix assemble_H_ww(const NetworkTopology& topo, const LayerGamma& gamma,
                      const ForwardTrace& trace, std::size_t p);
CMatrix assemble_H_wbar_w(const NetworkTopology& topo, const LayerPsi& psi,
                          const LayerTheta& theta, const ForwardTrace& trace, std::size_t p);

/// Full Newton step
///   dw = (H_ww - H_w̄w H_w̄w̄^-1 H_ww̄)^-1 [H_w̄w H_w̄w̄^-1 (dE/dw̄)* - (dE/dw)*]
/// with (dE/dw̄)* = conj((dE/dw)*). Throws SingularMatrix; pivot_ratio is
/// passed to solve().
CVector newton_update(const HessianPair& h, std::span<const cplx> cograd_conj,
                      double pivot_ratio = kSingularPivotRatio);

/// dw = -H_ww^-1 (dE/dw)*. Throws SingularMatrix.
CVector pseudo_newton_update(const CMatrix& h_ww, std::span<const cplx> cograd_conj,
                             double pivot_ratio = kSingularPivotRatio);

/// Derivative information for one layer.
struct LayerDerivatives {
  std::size_t layer = 0;
  CVector cograd_conj;
  /// Present when the sweep was asked for Hessians.
  std::optional<HessianPair> hessians;
};

/// Walks the layers from L down to 1, carrying the delta/gamma/theta/psi
/// tables from one layer to the next. Each call to next() reads w^(p) from
/// the weight set passed in, so a caller that updates layer p+1 between calls
/// gets the hidden-layer quantities computed with the updated weights. The
/// forward trace itself is never refreshed.
class BackwardSweep {
 public:
  BackwardSweep(const NetworkTopology& topo, const ForwardTrace& trace, const Dataset& data,
                bool with_hessians);

  bool done() const { return layer_ == 0; }
  /// Layer the next call to next() will process.
  std::size_t layer() const { return layer_; }

  LayerDerivatives next(const WeightSet& weights);

 private:
  const NetworkTopology& topo_;
  const ForwardTrace& trace_;
  const Dataset& data_;
  bool with_hessians_;
  std::size_t layer_;

  LayerDeltas deltas_;
  LayerGamma gamma_;
  LayerTheta theta_;
  LayerPsi psi_;
};

/// Cogradients and Hessians for every layer at fixed weights, layer 1 first.
std::vector<LayerDerivatives> layer_derivatives(const NetworkTopology& topo,
                                                const WeightSet& weights, const Dataset& data,
                                                bool with_hessians = true);

}  // namespace holonewt
