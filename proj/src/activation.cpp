#include "holonewt/activation.hpp"

#include <stdexcept>

namespace holonewt {

namespace {

cplx sigmoid(cplx z) { return 1.0 / (1.0 + std::exp(-z)); }

}  // namespace

cplx Activation::eval(cplx z) const {
  switch (id) {
    case ActivationId::sigmoid: return sigmoid(z);
    case ActivationId::taylor3: return 0.5 + z / 4.0 - z * z * z / 48.0;
    case ActivationId::identity: return z;
  }
  return {};
}

cplx Activation::d1(cplx z) const {
  switch (id) {
    case ActivationId::sigmoid: {
      const cplx g = sigmoid(z);
      return g * (1.0 - g);
    }
    case ActivationId::taylor3: return 0.25 - z * z / 16.0;
    case ActivationId::identity: return 1.0;
  }
  return {};
}

cplx Activation::d2(cplx z) const {
  cplx value{};
  switch (id) {
    case ActivationId::sigmoid: {
      const cplx g = sigmoid(z);
      value = g * (1.0 - g) * (1.0 - 2.0 * g);
      break;
    }
    case ActivationId::taylor3: value = -z / 8.0; break;
    case ActivationId::identity: value = 0.0; break;
  }
  return d2_scale * value;
}

std::string_view to_string(ActivationId id) {
  switch (id) {
    case ActivationId::sigmoid: return "sigmoid";
    case ActivationId::taylor3: return "taylor3";
    case ActivationId::identity: return "identity";
  }
  return "unknown";
}

ActivationId parse_activation_id(std::string_view name) {
  if (name == "sigmoid") return ActivationId::sigmoid;
  if (name == "taylor3") return ActivationId::taylor3;
  if (name == "identity") return ActivationId::identity;
  throw std::invalid_argument("unknown activation '" + std::string(name) + "'");
}

}  // namespace holonewt
