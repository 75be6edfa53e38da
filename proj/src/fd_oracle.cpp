#include "holonewt/fd_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "holonewt/random.hpp"
#include "holonewt/steplength.hpp"

namespace holonewt {

namespace {

// E as a function of the real coordinates of one layer. Coordinate k < n is
// Re w_k, coordinate n + k is Im w_k.
class LayerProbe {
 public:
  LayerProbe(const NetworkTopology& topo, const WeightSet& weights, const Dataset& data,
             std::size_t p)
      : topo_(topo), data_(data), p_(p), work_(weights), base_(weights.into(p)) {
    if (p < 1 || p > topo.layers()) throw std::invalid_argument("fd oracle: layer out of range");
  }

  std::size_t n() const { return base_.size(); }

  double at(std::initializer_list<std::pair<std::size_t, double>> shifts) {
    CVector& w = work_.into(p_);
    w = base_;
    for (const auto& [coord, delta] : shifts) {
      if (coord < n())
        w[coord] += cplx{delta, 0.0};
      else
        w[coord - n()] += cplx{0.0, delta};
    }
    const double e = error(topo_, work_, data_);
    if (!std::isfinite(e)) throw NonFiniteEvaluation("fd oracle: non-finite error at probe");
    return e;
  }

 private:
  const NetworkTopology& topo_;
  const Dataset& data_;
  std::size_t p_;
  WeightSet work_;
  CVector base_;
};

}  // namespace

void FDConfig::validate() const {
  if (!(first_step > 0.0) || !(second_step > 0.0))
    throw std::invalid_argument("finite-difference steps must be > 0");
}

CVector fd_cogradient(const NetworkTopology& topo, const WeightSet& weights, const Dataset& data,
                      std::size_t p, const FDConfig& cfg) {
  cfg.validate();
  LayerProbe probe(topo, weights, data, p);
  const double h = cfg.first_step;
  const std::size_t n = probe.n();
  CVector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double dx = (probe.at({{k, h}}) - probe.at({{k, -h}})) / (2.0 * h);
    const double dy = (probe.at({{n + k, h}}) - probe.at({{n + k, -h}})) / (2.0 * h);
    // (dE/dw)* = conj((dx - i dy)/2) = (dx + i dy)/2
    out[k] = cplx{dx, dy} * 0.5;
  }
  return out;
}

RealHessian fd_real_hessian(const NetworkTopology& topo, const WeightSet& weights,
                            const Dataset& data, std::size_t p, const FDConfig& cfg) {
  cfg.validate();
  LayerProbe probe(topo, weights, data, p);
  const double h = cfg.second_step;
  const std::size_t dim = 2 * probe.n();
  RealHessian out{dim, std::vector<double>(dim * dim)};
  const double center = probe.at({});
  for (std::size_t r = 0; r < dim; ++r) {
    out(r, r) = (probe.at({{r, h}}) - 2.0 * center + probe.at({{r, -h}})) / (h * h);
    for (std::size_t c = r + 1; c < dim; ++c) {
      const double v = (probe.at({{r, h}, {c, h}}) - probe.at({{r, h}, {c, -h}}) -
                        probe.at({{r, -h}, {c, h}}) + probe.at({{r, -h}, {c, -h}})) /
                       (4.0 * h * h);
      out(r, c) = v;
      out(c, r) = v;
    }
  }
  return out;
}

HessianPair hessians_from_real(const RealHessian& real) {
  const std::size_t n = real.dim / 2;
  HessianPair h{CMatrix(n, n), CMatrix(n, n)};
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const double xx = real(r, c);
      const double yy = real(n + r, n + c);
      const double yx = real(n + r, c);  // d2E / dy_r dx_c
      const double xy = real(r, n + c);  // d2E / dx_r dy_c
      h.ww(r, c) = cplx{xx + yy, yx - xy} * 0.25;
      h.wbar_w(r, c) = cplx{xx - yy, yx + xy} * 0.25;
    }
  }
  return h;
}

HessianPair fd_hessians(const NetworkTopology& topo, const WeightSet& weights, const Dataset& data,
                        std::size_t p, const FDConfig& cfg) {
  return hessians_from_real(fd_real_hessian(topo, weights, data, p, cfg));
}

double real_quadratic_form(const HessianPair& h, std::span<const cplx> v) {
  return 2.0 * complex_quadratic_form(h.ww, h.wbar_w, v);
}

double real_quadratic_form(const RealHessian& real, std::span<const cplx> v) {
  const std::size_t n = v.size();
  if (real.dim != 2 * n) throw std::invalid_argument("real_quadratic_form: dimension mismatch");
  std::vector<double> z(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = v[k].real();
    z[n + k] = v[k].imag();
  }
  double s = 0.0;
  for (std::size_t r = 0; r < 2 * n; ++r)
    for (std::size_t c = 0; c < 2 * n; ++c) s += z[r] * real(r, c) * z[c];
  return s;
}

double abs_quadratic_form(const RealHessian& real, std::span<const cplx> v) {
  const std::size_t n = v.size();
  if (real.dim != 2 * n) throw std::invalid_argument("abs_quadratic_form: dimension mismatch");
  std::vector<double> z(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = std::abs(v[k].real());
    z[n + k] = std::abs(v[k].imag());
  }
  double s = 0.0;
  for (std::size_t r = 0; r < 2 * n; ++r)
    for (std::size_t c = 0; c < 2 * n; ++c) s += z[r] * std::abs(real(r, c)) * z[c];
  return s;
}

double relative_error(std::span<const cplx> a, std::span<const cplx> b, double scale) {
  if (a.size() != b.size()) throw std::invalid_argument("relative_error: length mismatch");
  double diff = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) diff = std::max(diff, std::abs(a[k] - b[k]));
  if (diff == 0.0) return 0.0;
  return diff / scale;
}

double relative_error(std::span<const cplx> a, std::span<const cplx> b) {
  return relative_error(a, b, max_abs(b));
}

double VerifyReport::worst() const {
  double w = 0.0;
  for (const auto& l : layers)
    w = std::max({w, l.cogradient, l.h_ww, l.h_wbar_w, l.quadratic_form});
  return w;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& l : layers) {
    arr.push_back({{"layer", l.layer},
                   {"cogradient_max_rel_error", l.cogradient},
                   {"h_ww_max_rel_error", l.h_ww},
                   {"h_wbar_w_max_rel_error", l.h_wbar_w},
                   {"quadratic_form_rel_error", l.quadratic_form}});
  }
  return {{"tolerance", tolerance}, {"passed", passed()}, {"worst", worst()}, {"layers", arr}};
}

VerifyReport verify_derivatives(const NetworkTopology& topo, const WeightSet& weights,
                                const Dataset& data, double tolerance,
                                std::uint64_t direction_seed, const FDConfig& cfg) {
  VerifyReport report;
  report.tolerance = tolerance;
  const auto analytic = layer_derivatives(topo, weights, data, true);
  UniformSource rng(direction_seed);
  for (std::size_t p = 1; p <= topo.layers(); ++p) {
    const LayerDerivatives& an = analytic[p - 1];
    const HessianPair& h = *an.hessians;
    const CVector g_fd = fd_cogradient(topo, weights, data, p, cfg);
    const RealHessian real = fd_real_hessian(topo, weights, data, p, cfg);
    const HessianPair h_fd = hessians_from_real(real);

    LayerCheck check;
    check.layer = p;
    check.cogradient = relative_error(an.cograd_conj, g_fd);
    const double h_scale = std::max(max_abs(h_fd.ww), max_abs(h_fd.wbar_w));
    check.h_ww = relative_error(h.ww.data(), h_fd.ww.data(), h_scale);
    check.h_wbar_w = relative_error(h.wbar_w.data(), h_fd.wbar_w.data(), h_scale);

    CVector v(an.cograd_conj.size());
    for (auto& z : v) z = rng.complex_box(1.0);
    const double lhs = real_quadratic_form(real, v);
    const double rhs = real_quadratic_form(h, v);
    const double qscale = abs_quadratic_form(real, v);
    check.quadratic_form = qscale == 0.0 ? 0.0 : std::abs(lhs - rhs) / qscale;
    report.layers.push_back(check);
  }
  return report;
}

}  // namespace holonewt
