#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holonewt/fd_oracle.hpp"
#include "holonewt/newton_backprop.hpp"
#include "holonewt/steplength.hpp"
#include "test_support.hpp"

using namespace holonewt;

TEST_CASE("one-step mu on scalar quadratics") {
  const CMatrix one(1, 1, {1.0});
  const CMatrix zero(1, 1);
  CHECK(one_step_mu(CVector{-1.0}, CVector{1.0}, one, zero) == 1.0);
  // E = |w|^2: (dE/dw)* = w, H_ww = 1, Newton direction -w.
  const cplx w{0.3, -1.7};
  CHECK(one_step_mu(CVector{w}, CVector{-w}, one, zero) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("one-step mu: degenerate denominators") {
  CHECK_THROWS_AS(one_step_mu(CVector{1.0}, CVector{1.0}, CMatrix(1, 1), CMatrix(1, 1)), DegenerateStep);
  const CMatrix nan(1, 1, {std::numeric_limits<double>::quiet_NaN()});
  CHECK_THROWS_AS(one_step_mu(CVector{1.0}, CVector{1.0}, nan, CMatrix(1, 1)), DegenerateStep);
  // Negative curvature is passed through as a negative or sign-flipped mu.
  CHECK(one_step_mu(CVector{-1.0}, CVector{1.0}, CMatrix(1, 1, {-1.0}), CMatrix(1, 1)) == -1.0);
}

TEST_CASE("mu is scale covariant") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto topo = NetworkTopology::uniform({2, 3, 1}, ActivationId::taylor3);
    const Dataset d = testing::random_dataset(topo, 3, seed);
    const auto l = layer_derivatives(topo, testing::random_weights(topo, seed + 9), d)[0];
    const CVector dw = pseudo_newton_update(l.hessians->ww, l.cograd_conj, 0.0);
    const double mu = one_step_mu(l.cograd_conj, dw, l.hessians->ww, l.hessians->wbar_w);
    for (double c : {0.5, 3.0, 1e3}) {
      CVector scaled = dw;
      for (auto& z : scaled) z *= c;
      const double mu_c = one_step_mu(l.cograd_conj, scaled, l.hessians->ww, l.hessians->wbar_w);
      for (std::size_t k = 0; k < dw.size(); ++k)
        CHECK(std::abs(mu_c * scaled[k] - mu * dw[k]) <= 1e-12 * (1.0 + std::abs(mu * dw[k])));
    }
  }
}

TEST_CASE("denominator is half the real-coordinate quadratic form") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto topo = NetworkTopology::uniform({2, 3, 1}, ActivationId::sigmoid);
    const Dataset d = testing::random_dataset(topo, 3, seed);
    const WeightSet w = testing::random_weights(topo, seed + 20);
    if (testing::min_pole_distance(topo, w, d) < 0.5) continue;
    UniformSource rng(seed);
    for (std::size_t p = 1; p <= 2; ++p) {
      const auto l = layer_derivatives(topo, w, d)[p - 1];
      const CVector v = testing::random_vector(rng, topo.layer_size(p));
      const RealHessian real = fd_real_hessian(topo, w, d, p);
      const double den = complex_quadratic_form(l.hessians->ww, l.hessians->wbar_w, v);
      CHECK(std::abs(2.0 * den - real_quadratic_form(real, v)) <= 1e-5 * abs_quadratic_form(real, v));
    }
  }
}

TEST_CASE("apply_update") {
  const auto topo = NetworkTopology::uniform({1, 1}, ActivationId::identity);
  WeightSet w = WeightSet::zeros(topo);
  apply_update(w, 1, CVector{1.0}, 1.0, 1.0);
  CHECK(w.layers[0][0] == cplx(1.0));
  apply_update(w, 1, CVector{0.0}, 5.0, 0.5);
  CHECK(w.layers[0][0] == cplx(1.0));
  WeightSet z = WeightSet::zeros(topo);
  apply_update(z, 1, CVector{2.0}, 1.0, 0.5);
  CHECK(z.layers[0][0] == cplx(1.0));
  CHECK_THROWS_AS(apply_update(z, 1, CVector(2), 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("StepConfig validation and parsing") {
  StepConfig ok;
  CHECK_NOTHROW(ok.validate());
  for (double omega : {0.0, 2.0, -1.0}) {
    StepConfig bad;
    bad.omega = omega;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  }
  StepConfig bad_mu;
  bad_mu.constant_mu = 0.0;
  CHECK_THROWS_AS(bad_mu.validate(), std::invalid_argument);
  CHECK(parse_step_mode("constant") == StepMode::constant);
  CHECK(parse_step_mode(to_string(StepMode::one_step_newton)) == StepMode::one_step_newton);
  CHECK_THROWS_AS(parse_step_mode("armijo"), std::invalid_argument);
}
