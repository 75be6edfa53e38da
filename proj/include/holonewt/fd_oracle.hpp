#pragma once

// Finite-difference Wirtinger derivatives of E with respect to one layer's
// weights. Only the error function itself is evaluated, so this is
// independent of the backpropagation recursions it is used to check.
//
// With w = x + iy:  dE/dw = (dE/dx - i dE/dy) / 2  and  (dE/dw)* = conj of that.
// The real Hessian over (x_1..x_n, y_1..y_n) converts to
//   H_ww [r,c] = (E_xr,xc + E_yr,yc + i(E_yr,xc - E_xr,yc)) / 4
//   H_w̄w [r,c] = (E_xr,xc - E_yr,yc + i(E_yr,xc + E_xr,yc)) / 4

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "holonewt/complex_core.hpp"
#include "holonewt/network.hpp"
#include "holonewt/newton_backprop.hpp"

namespace holonewt {

struct FDConfig {
  double first_step = 1e-5;
  double second_step = 3e-4;

  void validate() const;
};

class NonFiniteEvaluation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense symmetric real Hessian of E over (Re w, Im w) of one layer.
struct RealHessian {
  std::size_t dim = 0;  // 2n
  std::vector<double> data;

  double operator()(std::size_t r, std::size_t c) const { return data[r * dim + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data[r * dim + c]; }
};

/// Central-difference estimate of (dE/dw^(p-1))*.
CVector fd_cogradient(const NetworkTopology& topo, const WeightSet& weights, const Dataset& data,
                      std::size_t p, const FDConfig& cfg = {});

/// Second-order central differences of E over the real coordinates of layer p.
RealHessian fd_real_hessian(const NetworkTopology& topo, const WeightSet& weights,
                            const Dataset& data, std::size_t p, const FDConfig& cfg = {});

/// Wirtinger Hessian pair recovered from the real Hessian.
HessianPair hessians_from_real(const RealHessian& real);

HessianPair fd_hessians(const NetworkTopology& topo, const WeightSet& weights, const Dataset& data,
                        std::size_t p, const FDConfig& cfg = {});

/// 2 Re{v^H H_ww v + v^H H_w̄w conj(v)}.
double real_quadratic_form(const HessianPair& h, std::span<const cplx> v);

/// (v_R, v_I)^T H_rr (v_R, v_I) computed directly in real coordinates.
double real_quadratic_form(const RealHessian& real, std::span<const cplx> v);

/// |v_R, v_I|^T |H_rr| |v_R, v_I| with entrywise absolute values; the scale
/// against which quadratic-form errors are measured.
double abs_quadratic_form(const RealHessian& real, std::span<const cplx> v);

/// max|a - b| / scale, or 0 when both are zero. scale defaults to max|b|.
double relative_error(std::span<const cplx> a, std::span<const cplx> b);
double relative_error(std::span<const cplx> a, std::span<const cplx> b, double scale);

struct LayerCheck {
  std::size_t layer = 0;
  double cogradient = 0.0;
  double h_ww = 0.0;
  double h_wbar_w = 0.0;
  double quadratic_form = 0.0;
};

struct VerifyReport {
  std::vector<LayerCheck> layers;
  double tolerance = 0.0;

  double worst() const;
  bool passed() const { return worst() <= tolerance; }
  nlohmann::json to_json() const;
};

/// Compares analytic and finite-difference derivatives on every layer. Hessian
/// errors are measured against the larger of max|H_ww| and max|H_w̄w| (the
/// scale of the real Hessian); the quadratic-form check uses a random
/// direction drawn from direction_seed.
VerifyReport verify_derivatives(const NetworkTopology& topo, const WeightSet& weights,
                                const Dataset& data, double tolerance,
                                std::uint64_t direction_seed, const FDConfig& cfg = {});

}  // namespace holonewt
