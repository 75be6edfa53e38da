// Compiled with -mavx2. Nothing in here may be called unless the CPU reports
// AVX2 support; kernels.cpp guards every entry.

#include <immintrin.h>

#include "holonewt/kernels.hpp"

namespace holonewt::kernels::avx2 {

namespace {

// Two complex doubles per register: [r0 i0 r1 i1].
inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

// Lane-wise complex product a*b without FMA so that each lane matches the
// scalar reference bit for bit.
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);           // [br0 br0 br1 br1]
  const __m256d b_im = _mm256_permute_pd(b, 0b1111);   // [bi0 bi0 bi1 bi1]
  const __m256d a_sw = _mm256_permute_pd(a, 0b0101);   // [ai0 ar0 ai1 ar1]
  // even lanes: ar*br - ai*bi, odd lanes: ai*br + ar*bi
  return _mm256_addsub_pd(_mm256_mul_pd(a, b_re), _mm256_mul_pd(a_sw, b_im));
}

inline cplx hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return {_mm_cvtsd_f64(s), _mm_cvtsd_f64(_mm_unpackhi_pd(s, s))};
}

}  // namespace

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  // alpha*x with alpha broadcast: matches scalar (ar*xr - ai*xi, ar*xi + ai*xr)
  const __m256d a_re = _mm256_set1_pd(alpha.real());
  const __m256d a_im = _mm256_set1_pd(alpha.imag());
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = load2(x + k);
    const __m256d xs = _mm256_permute_pd(xv, 0b0101);
    const __m256d prod = _mm256_addsub_pd(_mm256_mul_pd(a_re, xv), _mm256_mul_pd(a_im, xs));
    store2(y + k, _mm256_add_pd(load2(y + k), prod));
  }
  if (k < n) scalar::axpy(alpha, x + k, y + k, n - k);
}

cplx dotu(const cplx* x, const cplx* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) acc = _mm256_add_pd(acc, cmul(load2(x + k), load2(y + k)));
  cplx s = hsum(acc);
  if (k < n) s += scalar::dotu(x + k, y + k, n - k);
  return s;
}

cplx dotc(const cplx* x, const cplx* y, std::size_t n) {
  const __m256d conj_mask = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xc = _mm256_xor_pd(load2(x + k), conj_mask);
    acc = _mm256_add_pd(acc, cmul(xc, load2(y + k)));
  }
  cplx s = hsum(acc);
  if (k < n) s += scalar::dotc(x + k, y + k, n - k);
  return s;
}

}  // namespace holonewt::kernels::avx2
