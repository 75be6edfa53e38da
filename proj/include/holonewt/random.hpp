#pragma once

// Portable seeded uniform source. std::mt19937_64 has a fully specified output
// sequence; the conversion to doubles is done here rather than through
// std::uniform_real_distribution, whose algorithm is implementation-defined.

#include <complex>
#include <cstdint>
#include <random>

namespace holonewt {

class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on [-half_width, half_width).
  double symmetric(double half_width) { return half_width * (2.0 * unit() - 1.0); }

  /// Real part first, then imaginary part, each uniform on [-half_width, half_width).
  std::complex<double> complex_box(double half_width) {
    const double re = symmetric(half_width);
    const double im = symmetric(half_width);
    return {re, im};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace holonewt
