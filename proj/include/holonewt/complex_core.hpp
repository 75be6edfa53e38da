#pragma once

// Dense complex vectors and matrices plus the pivoted linear solver that the
// Newton updates are built on. Matrices are small (tens of rows at most), so
// everything is stored densely in row-major order.

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace holonewt {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// Raised by solve() when elimination meets a pivot below the singularity
/// threshold.
class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data);

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<cplx> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const cplx> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::span<cplx> data() { return data_; }
  std::span<const cplx> data() const { return data_; }

  bool operator==(const CMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

/// Default relative pivot threshold for solve(): elimination fails when a
/// pivot magnitude drops below pivot_ratio times the largest initial entry
/// magnitude. An exactly zero pivot always fails, so pivot_ratio = 0 only
/// rejects matrices that are singular in floating point.
inline constexpr double kSingularPivotRatio = 1e-12;

/// Solves A x = b by Gaussian elimination with partial pivoting.
CVector solve(const CMatrix& a, std::span<const cplx> b, double pivot_ratio = kSingularPivotRatio);

/// Solves A X = B for every column of B at once.
CMatrix solve(const CMatrix& a, const CMatrix& b, double pivot_ratio = kSingularPivotRatio);

CMatrix conj_transpose(const CMatrix& a);
/// Entrywise conjugate (no transpose).
CMatrix conj(const CMatrix& a);
CVector elementwise_conj(std::span<const cplx> v);

CMatrix multiply(const CMatrix& a, const CMatrix& b);
CVector multiply(const CMatrix& a, std::span<const cplx> v);
CMatrix subtract(const CMatrix& a, const CMatrix& b);
CVector subtract(std::span<const cplx> a, std::span<const cplx> b);

/// Hermitian inner product sum(conj(a_i) * b_i).
cplx dot_conj(std::span<const cplx> a, std::span<const cplx> b);

double norm2(std::span<const cplx> v);
double max_abs(std::span<const cplx> v);
inline double max_abs(const CMatrix& a) { return max_abs(a.data()); }

bool all_finite(std::span<const cplx> v);
inline bool all_finite(const CMatrix& a) { return all_finite(a.data()); }

}  // namespace holonewt
