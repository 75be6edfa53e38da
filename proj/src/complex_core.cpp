#include "holonewt/complex_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "holonewt/kernels.hpp"

namespace holonewt {

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw std::invalid_argument("CMatrix: entry count " + std::to_string(data_.size()) +
                                " does not match " + std::to_string(rows_) + "x" +
                                std::to_string(cols_));
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1.0;
  return m;
}

namespace {

// In-place elimination on [A | B]; on return B holds the solution.
void eliminate(CMatrix& a, CMatrix& b, double pivot_ratio) {
  const std::size_t n = a.rows();
  if (!all_finite(a) || !all_finite(b)) {
    throw std::domain_error("solve: non-finite entries in linear system");
  }
  const double scale = max_abs(a);
  if (!(pivot_ratio >= 0.0)) throw std::invalid_argument("solve: pivot ratio must be >= 0");
  const double threshold = pivot_ratio * scale;
  if (scale == 0.0 && n > 0) throw SingularMatrix("solve: zero matrix");

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(a(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      const double mag = std::abs(a(r, k));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best == 0.0 || best < threshold) {
      throw SingularMatrix("solve: pivot " + std::to_string(best) + " at column " +
                           std::to_string(k) + " below threshold " + std::to_string(threshold));
    }
    if (pivot != k) {
      std::swap_ranges(a.row(k).begin(), a.row(k).end(), a.row(pivot).begin());
      std::swap_ranges(b.row(k).begin(), b.row(k).end(), b.row(pivot).begin());
    }
    const cplx inv = 1.0 / a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const cplx factor = a(r, k) * inv;
      if (factor == cplx{}) continue;
      kernels::axpy(-factor, a.row(k).subspan(k), a.row(r).subspan(k));
      kernels::axpy(-factor, b.row(k), b.row(r));
    }
  }

  // Back substitution, one row at a time.
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t c = k + 1; c < n; ++c) {
      const cplx coef = a(k, c);
      if (coef == cplx{}) continue;
      kernels::axpy(-coef, b.row(c), b.row(k));
    }
    const cplx inv = 1.0 / a(k, k);
    for (auto& v : b.row(k)) v *= inv;
  }
}

void require_square(const CMatrix& a, std::size_t rhs_rows) {
  if (!a.square()) throw std::invalid_argument("solve: matrix is not square");
  if (a.rows() != rhs_rows) throw std::invalid_argument("solve: right-hand side length mismatch");
}

}  // namespace

CVector solve(const CMatrix& a, std::span<const cplx> b, double pivot_ratio) {
  require_square(a, b.size());
  CMatrix work = a;
  CMatrix rhs(b.size(), 1, CVector(b.begin(), b.end()));
  eliminate(work, rhs, pivot_ratio);
  auto x = rhs.data();
  return CVector(x.begin(), x.end());
}

CMatrix solve(const CMatrix& a, const CMatrix& b, double pivot_ratio) {
  require_square(a, b.rows());
  CMatrix work = a;
  CMatrix rhs = b;
  eliminate(work, rhs, pivot_ratio);
  return rhs;
}

CMatrix conj_transpose(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
  return out;
}

CMatrix conj(const CMatrix& a) {
  CMatrix out = a;
  for (auto& v : out.data()) v = std::conj(v);
  return out;
}

CVector elementwise_conj(std::span<const cplx> v) {
  CVector out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](cplx z) { return std::conj(z); });
  return out;
}

CMatrix multiply(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimension mismatch");
  CMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx coef = a(r, k);
      if (coef == cplx{}) continue;
      kernels::axpy(coef, b.row(k), out.row(r));
    }
  return out;
}

CVector multiply(const CMatrix& a, std::span<const cplx> v) {
  if (a.cols() != v.size()) throw std::invalid_argument("multiply: vector length mismatch");
  CVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) out[r] = kernels::dotu(a.row(r), v);
  return out;
}

CMatrix subtract(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("subtract: shape mismatch");
  CMatrix out = a;
  kernels::axpy(-1.0, b.data(), out.data());
  return out;
}

CVector subtract(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw std::invalid_argument("subtract: length mismatch");
  CVector out(a.begin(), a.end());
  for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
  return out;
}

cplx dot_conj(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot_conj: length mismatch");
  return kernels::dotc(a, b);
}

double norm2(std::span<const cplx> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs(std::span<const cplx> v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

bool all_finite(std::span<const cplx> v) {
  return std::all_of(v.begin(), v.end(),
                     [](cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

}  // namespace holonewt
