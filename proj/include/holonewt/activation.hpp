#pragma once

#include <complex>
#include <string>
#include <string_view>

namespace holonewt {

using cplx = std::complex<double>;

/// Identifiers as they appear in configuration files.
enum class ActivationId { sigmoid, taylor3, identity };

/// A holomorphic activation with real Taylor coefficients, so that
/// g(conj z) == conj(g(z)).
///
///   sigmoid   g(z) = 1 / (1 + exp(-z))         poles at z = i*pi*(2k+1)
///   taylor3   T(z) = 1/2 + z/4 - z^3/48        third-order Taylor polynomial of g
///   identity  z
///
/// Values near sigmoid poles are returned as computed (possibly inf/nan);
/// callers detect non-finite results themselves.
struct Activation {
  ActivationId id = ActivationId::sigmoid;
  /// Multiplier applied to d2(). Always 1 in normal use; verification tests
  /// set it to something else to corrupt the second derivative on purpose.
  double d2_scale = 1.0;

  cplx eval(cplx z) const;
  cplx d1(cplx z) const;
  cplx d2(cplx z) const;

  bool operator==(const Activation&) const = default;
};

inline Activation make_activation(ActivationId id) { return Activation{id, 1.0}; }

std::string_view to_string(ActivationId id);
/// Parses "sigmoid", "taylor3" or "identity"; throws std::invalid_argument otherwise.
ActivationId parse_activation_id(std::string_view name);

inline cplx eval(const Activation& f, cplx z) { return f.eval(z); }
inline cplx d1(const Activation& f, cplx z) { return f.d1(z); }
inline cplx d2(const Activation& f, cplx z) { return f.d2(z); }

}  // namespace holonewt
