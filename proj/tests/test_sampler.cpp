// Copyright 2026 The mrb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mrb/sampler.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "doctest.h"

using namespace mrb;

namespace {

uint32_t count_cnots(const Layer& layer) {
    uint32_t pairs = 0;
    for (uint32_t q = 0; q < layer.num_qubits(); q++) {
        if (layer.at(q).kind == PlacementKind::CnotControl) {
            pairs++;
        }
    }
    return pairs;
}

}  // namespace

TEST_CASE("edge_grab produces valid layers on compatible edges only") {
    const auto g = ConnectivityGraph::square_lattice(4, 4);
    SamplerSpec spec{SamplerKind::EdgeGrab, 0.5};
    Rng rng(11);
    for (int i = 0; i < 200; i++) {
        const Layer layer = sample_layer(g, spec, rng);
        layer.validate();
        for (uint32_t q = 0; q < 16; q++) {
            const Placement& p = layer.at(q);
            CHECK(p.kind != PlacementKind::Idle);  // every qubit is busy
            if (p.kind == PlacementKind::CnotControl) {
                CHECK(g.has_edge(q, p.partner));
            }
        }
    }
}

TEST_CASE("edge_grab realizes the requested two-qubit gate density") {
    const auto g = ConnectivityGraph::square_lattice(4, 4);
    Rng rng(123);
    for (double xi : {0.125, 0.25, 0.5}) {
        SamplerSpec spec{SamplerKind::EdgeGrab, xi};
        SamplerStats stats;
        const int layers = 6000;
        for (int i = 0; i < layers; i++) {
            sample_layer(g, spec, rng, &stats);
        }
        const double density = stats.realized_density(16);
        // Standard error of the density is ~sqrt(xi/ (n/2)) / sqrt(layers) < 0.004.
        CHECK(std::abs(density - xi) < 0.02);
        CHECK(stats.clamp_events == 0);
    }
}

TEST_CASE("edge_grab clamps and counts unachievable densities") {
    // A single edge on 6 qubits cannot reach density 1: the per-edge
    // probability xi * n / (2 * |matching|) = 3 clamps to 1.
    const ConnectivityGraph g(6, {{0, 1}});
    SamplerSpec spec{SamplerKind::EdgeGrab, 1.0};
    SamplerStats stats;
    Rng rng(5);
    for (int i = 0; i < 50; i++) {
        const Layer layer = sample_layer(g, spec, rng, &stats);
        CHECK(count_cnots(layer) == 1);  // always selected once clamped
    }
    CHECK(stats.clamp_events == 50);
    CHECK(stats.realized_density(6) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("edge_grab xi validation") {
    const auto g = ConnectivityGraph::square_lattice(2, 2);
    Rng rng(1);
    CHECK_THROWS_AS(
        sample_layer(g, SamplerSpec{SamplerKind::EdgeGrab, -0.1}, rng), std::invalid_argument);
    CHECK_THROWS_AS(
        sample_layer(g, SamplerSpec{SamplerKind::EdgeGrab, 1.5}, rng), std::invalid_argument);

    // Edgeless multi-qubit graph with xi > 0 is a contradiction...
    const ConnectivityGraph edgeless(3, {});
    CHECK_THROWS_AS(
        sample_layer(edgeless, SamplerSpec{SamplerKind::EdgeGrab, 0.125}, rng),
        std::invalid_argument);

    // ...but a single qubit has no possible two-qubit gates and degrades
    // gracefully to one-qubit-only layers.
    const ConnectivityGraph one(1, {});
    const Layer layer = sample_layer(one, SamplerSpec{SamplerKind::EdgeGrab, 0.125}, rng);
    CHECK(layer.at(0).kind == PlacementKind::OneQubit);

    // xi = 0 never places CNOTs anywhere.
    SamplerStats stats;
    for (int i = 0; i < 20; i++) {
        sample_layer(g, SamplerSpec{SamplerKind::EdgeGrab, 0.0}, rng, &stats);
    }
    CHECK(stats.cnots == 0);
}

TEST_CASE("single_cnot places at most one CNOT, half the time") {
    const auto g = ConnectivityGraph::square_lattice(4, 4);
    SamplerSpec spec{SamplerKind::SingleCnot, 0.0};
    SamplerStats stats;
    Rng rng(77);
    const int layers = 4000;
    std::map<std::pair<uint32_t, uint32_t>, int> edge_counts;
    for (int i = 0; i < layers; i++) {
        const Layer layer = sample_layer(g, spec, rng, &stats);
        layer.validate();
        const uint32_t cnots = count_cnots(layer);
        REQUIRE(cnots <= 1);
        for (uint32_t q = 0; q < 16; q++) {
            if (layer.at(q).kind == PlacementKind::CnotControl) {
                const uint32_t a = std::min(q, layer.at(q).partner);
                const uint32_t b = std::max(q, layer.at(q).partner);
                edge_counts[{a, b}]++;
            }
        }
    }
    const double rate = static_cast<double>(stats.cnots) / layers;
    CHECK(rate > 0.46);
    CHECK(rate < 0.54);
    // Every edge of the lattice should be exercised.
    CHECK(edge_counts.size() == g.edges().size());
}

TEST_CASE("pauli layers use only ids 0..3, uniform layers all 24") {
    Rng rng(3);
    std::map<uint8_t, int> pauli_counts;
    std::map<uint8_t, int> clifford_counts;
    for (int i = 0; i < 500; i++) {
        const Layer p = sample_pauli_layer(8, rng);
        const Layer c = sample_uniform_clifford_layer(8, rng);
        for (uint32_t q = 0; q < 8; q++) {
            REQUIRE(p.at(q).kind == PlacementKind::OneQubit);
            REQUIRE(p.at(q).gate < 4);
            pauli_counts[p.at(q).gate]++;
            clifford_counts[c.at(q).gate]++;
        }
    }
    CHECK(pauli_counts.size() == 4);
    CHECK(clifford_counts.size() == 24);
}

TEST_CASE("sampler kind names round-trip") {
    CHECK(sampler_kind_from_name(sampler_kind_name(SamplerKind::EdgeGrab)) ==
          SamplerKind::EdgeGrab);
    CHECK(sampler_kind_from_name(sampler_kind_name(SamplerKind::SingleCnot)) ==
          SamplerKind::SingleCnot);
    CHECK_THROWS_AS(sampler_kind_from_name("bogus"), std::invalid_argument);
}
