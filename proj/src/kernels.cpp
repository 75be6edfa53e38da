#include "holonewt/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace holonewt::kernels {

#if defined(HOLONEWT_HAVE_AVX2_TU)
namespace avx2 {
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
cplx dotu(const cplx* x, const cplx* y, std::size_t n);
cplx dotc(const cplx* x, const cplx* y, std::size_t n);
}  // namespace avx2
#endif

namespace {

constexpr KernelTable kScalar{Isa::scalar, &scalar::axpy, &scalar::dotu, &scalar::dotc};
#if defined(HOLONEWT_HAVE_AVX2_TU)
constexpr KernelTable kAvx2{Isa::avx2, &avx2::axpy, &avx2::dotu, &avx2::dotc};
#endif

bool cpu_has_avx2() {
#if defined(HOLONEWT_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* initial_table() {
  if (const char* env = std::getenv("HOLONEWT_ISA")) {
    const std::string want(env);
    if (want == "scalar") return &kScalar;
    if (want == "avx2" && supported(Isa::avx2)) return &table(Isa::avx2);
  }
  return supported(Isa::avx2) ? &table(Isa::avx2) : &kScalar;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> ptr{initial_table()};
  return ptr;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool supported(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2: return cpu_has_avx2();
  }
  return false;
}

const KernelTable& table(Isa isa) {
  if (!supported(isa)) {
    throw std::invalid_argument("kernel ISA not supported: " + std::string(to_string(isa)));
  }
#if defined(HOLONEWT_HAVE_AVX2_TU)
  if (isa == Isa::avx2) return kAvx2;
#endif
  return kScalar;
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

void select(Isa isa) { current().store(&table(isa), std::memory_order_release); }

}  // namespace holonewt::kernels
