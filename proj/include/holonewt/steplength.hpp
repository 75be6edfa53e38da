#pragma once

#include <span>
#include <stdexcept>
#include <string_view>

#include "holonewt/complex_core.hpp"
#include "holonewt/network.hpp"

namespace holonewt {

enum class StepMode { one_step_newton, constant };

std::string_view to_string(StepMode mode);
StepMode parse_step_mode(std::string_view name);

struct StepConfig {
  /// Underrelaxation factor, constant for the whole run.
  double omega = 0.5;
  StepMode mode = StepMode::one_step_newton;
  /// Learning rate used when mode == constant.
  double constant_mu = 1.0;

  /// Throws std::invalid_argument unless omega is in (0, 2) and constant_mu > 0.
  void validate() const;
};

/// The quadratic model along dw is flat (or not finite): no steplength exists.
class DegenerateStep : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDegenerateDenominator = 1e-300;

/// One-step Newton steplength along dw:
///
///   mu = -Re(dE/dw . dw) / Re{dw^H H_ww dw + dw^H H_w̄w conj(dw)}
///
/// where dE/dw is the row vector conj((dE/dw)*). For pseudo-Newton steps dw
/// is the pseudo-Newton direction while h_wbar_w is still the full H_w̄w.
/// Negative mu is returned as is. Throws DegenerateStep when the denominator
/// magnitude is below kDegenerateDenominator or not finite.
double one_step_mu(std::span<const cplx> cograd_conj, std::span<const cplx> dw,
                   const CMatrix& h_ww, const CMatrix& h_wbar_w);

/// Re{v^H H_ww v + v^H H_w̄w conj(v)}; half the real-coordinate quadratic form.
double complex_quadratic_form(const CMatrix& h_ww, const CMatrix& h_wbar_w,
                              std::span<const cplx> v);

/// w^(p-1) <- w^(p-1) + omega * mu * dw.
void apply_update(WeightSet& weights, std::size_t p, std::span<const cplx> dw, double mu,
                  double omega);

}  // namespace holonewt
