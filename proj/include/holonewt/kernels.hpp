#pragma once

// Complex BLAS-1 style kernels used in the inner loops of elimination, Hessian
// assembly and forward propagation. Each kernel has a scalar reference version
// and, on x86-64, an AVX2 version; the active table is chosen once at runtime.
//
// Selection order: the HOLONEWT_ISA environment variable ("scalar" or "avx2")
// if set and supported, otherwise the widest ISA the CPU reports.
//
// axpy is elementwise and produces bitwise-identical results across ISAs for
// finite inputs. The dot products reduce in a different order per ISA and
// agree only to rounding.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace holonewt::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  /// y[i] += alpha * x[i]
  void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
  /// sum x[i] * y[i]
  cplx (*dotu)(const cplx* x, const cplx* y, std::size_t n);
  /// sum conj(x[i]) * y[i]
  cplx (*dotc)(const cplx* x, const cplx* y, std::size_t n);
};

std::string_view to_string(Isa isa);

/// True if this binary carries the ISA and the running CPU supports it.
bool supported(Isa isa);

/// Kernel table for a specific ISA. Throws std::invalid_argument if the ISA
/// is not supported.
const KernelTable& table(Isa isa);

/// Currently active table.
const KernelTable& active();

/// Switches the active table process-wide. Throws if unsupported.
void select(Isa isa);

namespace scalar {
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
cplx dotu(const cplx* x, const cplx* y, std::size_t n);
cplx dotc(const cplx* x, const cplx* y, std::size_t n);
}  // namespace scalar

inline void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
  active().axpy(alpha, x.data(), y.data(), x.size());
}

inline cplx dotu(std::span<const cplx> x, std::span<const cplx> y) {
  return active().dotu(x.data(), y.data(), x.size());
}

inline cplx dotc(std::span<const cplx> x, std::span<const cplx> y) {
  return active().dotc(x.data(), y.data(), x.size());
}

}  // namespace holonewt::kernels
