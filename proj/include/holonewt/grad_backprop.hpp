#pragma once

// Conjugate cogradient (dE/dw^(p-1))* via the backward delta recursion
//
//   E^(L)_tl = (y_tl - d_tl) g_L'(conj(y^net_tl))
//   E^(p)_tj = [sum_a E^(p+1)_ta conj(w^(p)_aj)] g_p'(conj(x^(p)net_tj))
//   (dE/dw^(p-1)_ji)* = (1/N) sum_t E^(p)_tj conj(x^(p-1)_ti)

#include <span>
#include <vector>

#include "holonewt/complex_core.hpp"
#include "holonewt/network.hpp"

namespace holonewt {

/// Deltas of one layer: deltas[t][j] = E^(p)_tj.
using LayerDeltas = std::vector<CVector>;

LayerDeltas delta_output(const NetworkTopology& topo, const ForwardTrace& trace,
                         const Dataset& data);

/// Deltas of hidden layer p from those of layer p+1. weights_next is w^(p)
/// (the weights feeding layer p+1) as they stand at call time.
LayerDeltas delta_hidden(const NetworkTopology& topo, const LayerDeltas& delta_next,
                         std::span<const cplx> weights_next, const ForwardTrace& trace,
                         std::size_t p);

/// (dE/dw^(p-1))* in flat-index layout.
CVector cogradient_conj(const NetworkTopology& topo, const LayerDeltas& deltas,
                        const ForwardTrace& trace, std::size_t p);

/// Steepest-descent direction: -(dE/dw)*.
CVector gd_update(std::span<const cplx> cograd_conj);

}  // namespace holonewt
