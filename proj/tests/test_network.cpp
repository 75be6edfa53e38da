#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "holonewt/network.hpp"
#include "holonewt/network_io.hpp"
#include "oracle/frozen_reference.hpp"
#include "test_support.hpp"

using namespace holonewt;

namespace {

// Straight-line forward pass written independently of the library.
cplx hand_sigmoid(cplx z) { return 1.0 / (1.0 + std::exp(-z)); }

}  // namespace

TEST_CASE("UniformSource uses the standard mt19937_64 sequence") {
  // The C++ standard fixes the 10000th output of a default-seeded engine.
  std::mt19937_64 engine;
  engine.discard(9999);
  CHECK(engine() == 9981545732273789042ULL);
  UniformSource src(5489);
  for (int k = 0; k < 9999; ++k) src.unit();
  CHECK(src.unit() == static_cast<double>(9981545732273789042ULL >> 11) * 0x1.0p-53);
}

TEST_CASE("flat_index layout") {
  const auto t2 = NetworkTopology::uniform({2, 3, 1}, ActivationId::sigmoid);
  CHECK(flat_index(t2, 1, 1, 1) == 1);
  CHECK(flat_index(t2, 1, 2, 1) == 3);
  const auto t4 = NetworkTopology::uniform({4, 2}, ActivationId::sigmoid);
  CHECK(flat_index(t4, 1, 1, 4) == 4);
  CHECK_THROWS_AS(flat_index(t2, 0, 1, 1), std::out_of_range);
  CHECK_THROWS_AS(flat_index(t2, 3, 1, 1), std::out_of_range);
  CHECK_THROWS_AS(flat_index(t2, 1, 4, 1), std::out_of_range);
  CHECK_THROWS_AS(flat_index(t2, 1, 1, 3), std::out_of_range);
  CHECK(flat_index(t2, 2, 1, 3) == 3);
}

TEST_CASE("topology validation") {
  NetworkTopology t = NetworkTopology::uniform({2, 4, 1}, ActivationId::taylor3);
  CHECK_NOTHROW(t.validate());
  CHECK(t.layer_size(1) == 8);
  CHECK(t.layer_size(2) == 4);
  t.activations.pop_back();
  CHECK_THROWS_AS(t.validate(), std::invalid_argument);
  CHECK_THROWS_AS(NetworkTopology::uniform({3}, ActivationId::sigmoid).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(NetworkTopology::uniform({2, 0, 1}, ActivationId::sigmoid).validate(),
                  std::invalid_argument);
}

TEST_CASE("forward: zero weights with sigmoid give 0.5 everywhere") {
  const auto topo = NetworkTopology::uniform({2, 4, 3}, ActivationId::sigmoid);
  const auto tr = forward(topo, WeightSet::zeros(topo), CVector{{0.3, 1}, {-2, 0.5}});
  for (std::size_t p = 1; p <= 2; ++p)
    for (cplx y : tr.outputs[p]) CHECK(y == cplx(0.5));
}

TEST_CASE("forward: identity 1-1-1 net is the identity map") {
  const auto topo = NetworkTopology::uniform({1, 1, 1}, ActivationId::identity);
  const WeightSet w{{CVector{1.0}, CVector{1.0}}};
  const cplx z{0.7, -1.3};
  CHECK(forward(topo, w, CVector{z}).y()[0] == z);
}

TEST_CASE("forward: XOR topology matches a hand-rolled pass") {
  const auto topo = NetworkTopology::uniform({2, 4, 1}, ActivationId::sigmoid);
  const WeightSet w = testing::random_weights(topo, 5);
  const Dataset xor_data = load_dataset(testing::data_path("xor.json"));
  const ForwardTrace tr = forward(topo, w, xor_data);
  for (std::size_t t = 0; t < 4; ++t) {
    const CVector& x = xor_data.samples[t].input;
    cplx out = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
      const cplx net = w.layers[0][2 * j] * x[0] + w.layers[0][2 * j + 1] * x[1];
      CHECK(std::abs(tr[t].nets[1][j] - net) <= 1e-15);
      out += w.layers[1][j] * hand_sigmoid(net);
    }
    CHECK(std::abs(tr[t].y()[0] - hand_sigmoid(out)) <= 1e-15);
  }
}

TEST_CASE("error: definition and special cases") {
  const auto topo = NetworkTopology::uniform({2, 4, 1}, ActivationId::sigmoid);
  const Dataset xor_data = load_dataset(testing::data_path("xor.json"));
  CHECK(error(topo, WeightSet::zeros(topo), xor_data) == 0.25);

  const auto id = NetworkTopology::uniform({1, 1}, ActivationId::identity);
  const Dataset fit{{{{2.0}, {2.0}}, {{cplx(0, 1)}, {cplx(0, 1)}}}};
  CHECK(error(id, WeightSet{{CVector{1.0}}}, fit) == 0.0);

  const WeightSet w = testing::random_weights(topo, 8);
  const ForwardTrace tr = forward(topo, w, xor_data);
  double brute = 0.0;
  for (std::size_t t = 0; t < 4; ++t) brute += std::norm(tr[t].y()[0] - xor_data.samples[t].target[0]);
  CHECK(error(tr, xor_data) == doctest::Approx(brute / 4.0).epsilon(1e-15));
  CHECK(error(tr, xor_data) >= 0.0);
}

TEST_CASE("error: frozen reference values") {
  const auto topo = NetworkTopology::uniform({2, 2, 1}, ActivationId::taylor3);
  const WeightSet w{{CVector{{0.3, -0.2}, {-0.5, 0.4}, {0.1, 0.7}, {0.6, -0.1}},
                     CVector{{0.8, 0.2}, {-0.4, -0.6}}}};
  const Dataset d{{{{{0.2, 0.1}, {-0.3, 0.5}}, {{0.9, -0.2}}},
                   {{{-0.7, 0.2}, {0.4, -0.4}}, {{-0.1, 0.3}}}}};
  CHECK(error(topo, w, d) == doctest::Approx(reference::t221_error).epsilon(1e-14));
  auto sig = topo;
  sig.activations.assign(2, make_activation(ActivationId::sigmoid));
  CHECK(error(sig, w, d) == doctest::Approx(reference::s221_error).epsilon(1e-14));
}

TEST_CASE("error is invariant under sample reordering") {
  const auto topo = NetworkTopology::uniform({3, 2, 2}, ActivationId::taylor3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Dataset d = testing::random_dataset(topo, 6, seed);
    const WeightSet w = testing::random_weights(topo, seed + 100);
    const double e0 = error(topo, w, d);
    std::reverse(d.samples.begin(), d.samples.end());
    std::rotate(d.samples.begin(), d.samples.begin() + 2, d.samples.end());
    CHECK(error(topo, w, d) == doctest::Approx(e0).epsilon(1e-14));
  }
}

TEST_CASE("batch forward equals per-sample forward") {
  const auto topo = NetworkTopology::uniform({2, 3, 2}, ActivationId::sigmoid);
  const Dataset d = testing::random_dataset(topo, 5, 1);
  const WeightSet w = testing::random_weights(topo, 2);
  const ForwardTrace tr = forward(topo, w, d);
  for (std::size_t t = 0; t < d.size(); ++t) {
    const SampleTrace s = forward(topo, w, d.samples[t].input);
    CHECK(s.nets == tr[t].nets);
    CHECK(s.outputs == tr[t].outputs);
  }
}

TEST_CASE("dataset validation") {
  const auto topo = NetworkTopology::uniform({2, 1}, ActivationId::sigmoid);
  CHECK_THROWS_AS(Dataset{}.validate(topo), std::invalid_argument);
  const Dataset bad{{{{1.0}, {1.0}}}};
  CHECK_THROWS_AS(bad.validate(topo), std::invalid_argument);
  CHECK_THROWS_AS(forward(topo, WeightSet::zeros(topo), CVector{1.0}), std::invalid_argument);
}
