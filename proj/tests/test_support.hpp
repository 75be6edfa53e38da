#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>

#include "holonewt/complex_core.hpp"
#include "holonewt/network.hpp"
#include "holonewt/random.hpp"

namespace testing {

using holonewt::cplx;
using holonewt::CVector;

inline double max_diff(std::span<const cplx> a, std::span<const cplx> b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

inline CVector random_vector(holonewt::UniformSource& rng, std::size_t n, double half = 1.0) {
  CVector v(n);
  for (auto& z : v) z = rng.complex_box(half);
  return v;
}

inline holonewt::CMatrix random_matrix(holonewt::UniformSource& rng, std::size_t r, std::size_t c) {
  return holonewt::CMatrix(r, c, random_vector(rng, r * c));
}

inline holonewt::Dataset random_dataset(const holonewt::NetworkTopology& topo, std::size_t n,
                                        std::uint64_t seed) {
  holonewt::UniformSource rng(seed);
  holonewt::Dataset d;
  for (std::size_t t = 0; t < n; ++t)
    d.samples.push_back({random_vector(rng, topo.inputs()), random_vector(rng, topo.outputs())});
  return d;
}

inline holonewt::WeightSet random_weights(const holonewt::NetworkTopology& topo,
                                          std::uint64_t seed, double half = 1.0) {
  holonewt::UniformSource rng(seed);
  holonewt::WeightSet w = holonewt::WeightSet::zeros(topo);
  for (auto& layer : w.layers)
    for (auto& z : layer) z = rng.complex_box(half);
  return w;
}

/// Smallest |net sum| over all samples and layers; sigmoid poles sit on the
/// imaginary axis at odd multiples of i*pi.
inline double min_pole_distance(const holonewt::NetworkTopology& topo,
                                const holonewt::WeightSet& w, const holonewt::Dataset& d) {
  const double pi = std::acos(-1.0);
  double best = 1e300;
  for (const auto& s : d.samples) {
    const auto tr = holonewt::forward(topo, w, s.input);
    for (std::size_t p = 1; p < tr.nets.size(); ++p)
      for (cplx z : tr.nets[p]) {
        const double k = std::round((z.imag() / pi - 1.0) / 2.0);
        const cplx pole(0.0, (2.0 * k + 1.0) * pi);
        best = std::min(best, std::abs(z - pole));
      }
  }
  return best;
}

inline std::string data_path(const std::string& name) { return std::string(HOLONEWT_DATA_DIR) + "/" + name; }
inline std::string config_path(const std::string& name) {
  return std::string(HOLONEWT_CONFIG_DIR) + "/" + name;
}

}  // namespace testing
