#include "holonewt/network_io.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

namespace holonewt {

using nlohmann::json;

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument("expected a complex number as [re, im], got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json vector_to_json(std::span<const cplx> v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(complex_to_json(z));
  return out;
}

CVector vector_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of [re, im] pairs");
  CVector out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

json matrix_to_json(const CMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

json checkpoint_to_json(const NetworkTopology& topo, const WeightSet& weights) {
  json acts = json::array();
  for (const auto& a : topo.activations) acts.push_back(std::string(to_string(a.id)));
  json layers = json::array();
  for (const auto& layer : weights.layers) layers.push_back(vector_to_json(layer));
  return {{"widths", topo.widths}, {"activations", acts}, {"layers", layers}};
}

Checkpoint checkpoint_from_json(const json& j) {
  if (!j.is_object() || !j.contains("widths") || !j.contains("activations") ||
      !j.contains("layers")) {
    throw std::invalid_argument("checkpoint must have widths, activations and layers");
  }
  Checkpoint cp;
  cp.topology.widths = j.at("widths").get<std::vector<std::size_t>>();
  for (const auto& a : j.at("activations"))
    cp.topology.activations.push_back(make_activation(parse_activation_id(a.get<std::string>())));
  cp.topology.validate();
  const auto& layers = j.at("layers");
  if (!layers.is_array() || layers.size() != cp.topology.layers())
    throw std::invalid_argument("checkpoint layer count does not match widths");
  for (std::size_t p = 1; p <= cp.topology.layers(); ++p) {
    CVector w = vector_from_json(layers[p - 1]);
    if (w.size() != cp.topology.layer_size(p))
      throw std::invalid_argument("checkpoint layer " + std::to_string(p) + " has wrong length");
    cp.weights.layers.push_back(std::move(w));
  }
  return cp;
}

json dataset_to_json(const Dataset& data) {
  json out = json::array();
  for (const auto& s : data.samples)
    out.push_back({{"input", vector_to_json(s.input)}, {"target", vector_to_json(s.target)}});
  return out;
}

Dataset dataset_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("dataset must be a JSON array");
  Dataset d;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("input") || !e.contains("target"))
      throw std::invalid_argument("dataset entries need input and target");
    d.samples.push_back({vector_from_json(e.at("input")), vector_from_json(e.at("target"))});
  }
  if (d.empty()) throw std::invalid_argument("dataset is empty");
  return d;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("cannot parse " + path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

Dataset load_dataset(const std::filesystem::path& path) {
  return dataset_from_json(read_json_file(path));
}

}  // namespace holonewt
