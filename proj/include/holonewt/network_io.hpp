#pragma once

// JSON formats shared with other tools.
//
// Weight checkpoint:
//   {"widths": [2, 4, 1], "activations": ["taylor3", "taylor3"],
//    "layers": [[[re, im], ...], ...]}
// where layers[p-1] lists w^(p-1) in flat-index order.
//
// Dataset:
//   [{"input": [[re, im], ...], "target": [[re, im], ...]}, ...]

#include <filesystem>
#include <json.hpp>

#include "holonewt/complex_core.hpp"
#include "holonewt/network.hpp"

namespace holonewt {

nlohmann::json complex_to_json(cplx z);
cplx complex_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(std::span<const cplx> v);
CVector vector_from_json(const nlohmann::json& j);
/// Row-major matrix as an array of rows of [re, im] pairs.
nlohmann::json matrix_to_json(const CMatrix& m);

struct Checkpoint {
  NetworkTopology topology;
  WeightSet weights;
};

nlohmann::json checkpoint_to_json(const NetworkTopology& topo, const WeightSet& weights);
/// Throws std::invalid_argument on schema violations.
Checkpoint checkpoint_from_json(const nlohmann::json& j);

nlohmann::json dataset_to_json(const Dataset& data);
Dataset dataset_from_json(const nlohmann::json& j);

/// Reads and parses a JSON file; throws std::runtime_error if it cannot be
/// opened or parsed.
nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

Dataset load_dataset(const std::filesystem::path& path);

}  // namespace holonewt
