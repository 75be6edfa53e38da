#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holonewt/complex_core.hpp"
#include "test_support.hpp"

using namespace holonewt;
using namespace std::complex_literals;

TEST_CASE("solve: identity and diagonal systems") {
  const CVector b{3.0 + 1i, -2.0};
  CHECK(solve(CMatrix::identity(2), b) == b);

  const CMatrix a(2, 2, {2.0, 0.0, 0.0, 1i});
  const CVector x = solve(a, CVector{2.0, 1i});
  CHECK(testing::max_diff(x, CVector{1.0, 1.0}) == 0.0);
}

TEST_CASE("solve: rank-deficient matrices raise SingularMatrix") {
  const CMatrix a(2, 2, {1.0, 1.0, 1.0, 1.0});
  CHECK_THROWS_AS(solve(a, CVector{1.0, 2.0}), SingularMatrix);
  CHECK_THROWS_AS(solve(a, CVector{1.0, 2.0}, 0.0), SingularMatrix);
  CHECK_THROWS_AS(solve(CMatrix(3, 3), CVector(3)), SingularMatrix);
}

TEST_CASE("solve: pivot ratio controls near-singular rejection") {
  const CMatrix a(2, 2, {1.0, 1.0, 1.0, 1.0 + 1e-14});
  CHECK_THROWS_AS(solve(a, CVector{1.0, 2.0}), SingularMatrix);
  CHECK_NOTHROW(solve(a, CVector{1.0, 2.0}, 0.0));
  CHECK_THROWS_AS(solve(a, CVector{1.0, 2.0}, -1.0), std::invalid_argument);
}

TEST_CASE("solve: shape and finiteness checks") {
  CHECK_THROWS_AS(solve(CMatrix(2, 3), CVector(2)), std::invalid_argument);
  CHECK_THROWS_AS(solve(CMatrix::identity(2), CVector(3)), std::invalid_argument);
  CMatrix bad = CMatrix::identity(2);
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(solve(bad, CVector(2)), std::domain_error);
}

TEST_CASE("solve: residual bound on random well-conditioned systems") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    UniformSource rng(seed);
    const std::size_t n = 1 + seed % 12;
    CMatrix a = testing::random_matrix(rng, n, n);
    // Diagonal dominance keeps the condition number small.
    for (std::size_t k = 0; k < n; ++k) a(k, k) += 2.0 * static_cast<double>(n);
    const CVector b = testing::random_vector(rng, n);
    const CVector x = solve(a, b);
    const double resid = norm2(subtract(multiply(a, x), b));
    CHECK(resid <= 1e-8 * (1.0 + norm2(b)));
  }
}

TEST_CASE("solve: matrix right-hand side matches column-by-column solves") {
  UniformSource rng(42);
  CMatrix a = testing::random_matrix(rng, 5, 5);
  for (std::size_t k = 0; k < 5; ++k) a(k, k) += 10.0;
  const CMatrix b = testing::random_matrix(rng, 5, 3);
  const CMatrix x = solve(a, b);
  for (std::size_t c = 0; c < 3; ++c) {
    CVector col(5);
    for (std::size_t r = 0; r < 5; ++r) col[r] = b(r, c);
    const CVector xc = solve(a, col);
    for (std::size_t r = 0; r < 5; ++r) CHECK(std::abs(xc[r] - x(r, c)) <= 1e-14);
  }
}

TEST_CASE("conj_transpose") {
  CHECK(conj_transpose(CMatrix(1, 1, {1i})) == CMatrix(1, 1, {-1i}));
  const CMatrix sym(2, 2, {1.0, 2.0, 2.0, 5.0});
  CHECK(conj_transpose(sym) == sym);
  const CMatrix a(2, 2, {1.0 + 1i, 2.0, 0.0, 3i});
  CHECK(conj_transpose(a) == CMatrix(2, 2, {1.0 - 1i, 0.0, 2.0, -3i}));

  UniformSource rng(7);
  for (int k = 0; k < 20; ++k) {
    const CMatrix r = testing::random_matrix(rng, 1 + k % 4, 1 + k % 5);
    CHECK(conj_transpose(conj_transpose(r)) == r);
  }
}

TEST_CASE("elementwise_conj") {
  CHECK(elementwise_conj(CVector{1i, 1.0 - 1i}) == CVector{-1i, 1.0 + 1i});
  const CVector real{1.0, -2.5, 0.0};
  CHECK(elementwise_conj(real) == real);
  UniformSource rng(9);
  const CVector v = testing::random_vector(rng, 17);
  CHECK(elementwise_conj(elementwise_conj(v)) == v);
}

TEST_CASE("CMatrix construction and helpers") {
  CHECK_THROWS_AS(CMatrix(2, 2, CVector(3)), std::invalid_argument);
  const CMatrix a(2, 3, {1.0, 2.0, 3.0, 4.0, 5.0, 6.0});
  const CMatrix b(3, 1, {1.0, 1i, -1.0});
  CHECK(multiply(a, b) == CMatrix(2, 1, {-2.0 + 2i, -2.0 + 5i}));
  CHECK(multiply(a, CVector{1.0, 1i, -1.0}) == CVector{-2.0 + 2i, -2.0 + 5i});
  CHECK_THROWS_AS(multiply(a, a), std::invalid_argument);
  CHECK(dot_conj(CVector{1i, 2.0}, CVector{1i, 1.0}) == cplx(3.0, 0.0));
  CHECK(max_abs(CVector{3.0 + 4i, -1.0}) == 5.0);
  CHECK(norm2(CVector{3.0, 4i}) == 5.0);
  CHECK(all_finite(CVector{1.0, 2i}));
  CHECK_FALSE(all_finite(CVector{1.0, cplx(0.0, std::numeric_limits<double>::infinity())}));
}
