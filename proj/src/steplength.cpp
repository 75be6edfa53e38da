#include "holonewt/steplength.hpp"

#include <cmath>
#include <string>

#include "holonewt/kernels.hpp"

namespace holonewt {

std::string_view to_string(StepMode mode) {
  switch (mode) {
    case StepMode::one_step_newton: return "one_step_newton";
    case StepMode::constant: return "constant";
  }
  return "unknown";
}

StepMode parse_step_mode(std::string_view name) {
  if (name == "one_step_newton") return StepMode::one_step_newton;
  if (name == "constant") return StepMode::constant;
  throw std::invalid_argument("unknown steplength mode '" + std::string(name) + "'");
}

void StepConfig::validate() const {
  if (!(omega > 0.0 && omega < 2.0)) throw std::invalid_argument("steplength.omega must be in (0, 2)");
  if (!(constant_mu > 0.0)) throw std::invalid_argument("steplength.mu must be > 0");
}

double complex_quadratic_form(const CMatrix& h_ww, const CMatrix& h_wbar_w,
                              std::span<const cplx> v) {
  const CVector hv = multiply(h_ww, v);
  const CVector hv_bar = multiply(h_wbar_w, elementwise_conj(v));
  return (kernels::dotc(v, hv) + kernels::dotc(v, hv_bar)).real();
}

double one_step_mu(std::span<const cplx> cograd_conj, std::span<const cplx> dw,
                   const CMatrix& h_ww, const CMatrix& h_wbar_w) {
  if (cograd_conj.size() != dw.size() || h_ww.rows() != dw.size() || h_wbar_w.rows() != dw.size())
    throw std::invalid_argument("one_step_mu: dimension mismatch");
  // dE/dw . dw = sum conj(g_k) dw_k with g = (dE/dw)*.
  const double slope = kernels::dotc(cograd_conj, dw).real();
  const double curvature = complex_quadratic_form(h_ww, h_wbar_w, dw);
  if (!std::isfinite(curvature) || std::abs(curvature) < kDegenerateDenominator) {
    throw DegenerateStep("one_step_mu: degenerate curvature " + std::to_string(curvature));
  }
  return -slope / curvature;
}

void apply_update(WeightSet& weights, std::size_t p, std::span<const cplx> dw, double mu,
                  double omega) {
  CVector& w = weights.into(p);
  if (w.size() != dw.size()) throw std::invalid_argument("apply_update: length mismatch");
  kernels::axpy(cplx{omega * mu, 0.0}, dw, w);
}

}  // namespace holonewt
