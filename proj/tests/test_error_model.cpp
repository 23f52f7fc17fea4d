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

#include "mrb/error_model.hpp"

#include <cmath>
#include <set>

#include "doctest.h"

using namespace mrb;

namespace {

double total_error_probability(const PlacementError& e) {
    double total = 0.0;
    for (const auto& f : e.factors()) {
        total += f.error_probability();
    }
    return total;
}

}  // namespace

TEST_CASE("noiseless model covers everything and does nothing") {
    const ErrorModel model = ErrorModel::noiseless(3);
    CHECK(model.one_qubit(0, 5).is_noiseless());
    CHECK(model.cnot(0, 2).is_noiseless());
    CHECK(model.readout() == std::vector<double>{0.0, 0.0, 0.0});

    Layer layer(3);
    layer.set_cnot(0, 1);
    layer.set_one_qubit(2, 7);
    CHECK(model.covers(layer));
}

TEST_CASE("strict models flag coverage gaps") {
    ErrorModel model(2);
    Layer layer(2);
    layer.set_cnot(0, 1);
    CHECK_FALSE(model.covers(layer));
    CHECK_THROWS_AS(model.cnot(0, 1), std::invalid_argument);

    model.set_cnot(0, 1, PlacementError());
    CHECK(model.covers(layer));

    Layer reversed(2);
    reversed.set_cnot(1, 0);
    CHECK_FALSE(model.covers(reversed));  // directions are distinct
}

TEST_CASE("random model has the advertised local/neighbor structure") {
    const auto graph = ConnectivityGraph::square_lattice(2, 2);
    RandomModelSpec spec;
    Rng rng(2025);
    RandomModelDiagnostics diag;
    const ErrorModel model = sample_random_model(graph, spec, rng, &diag);
    const CliffordTable& table = CliffordTable::instance();

    CHECK(model.num_qubits() == 4);
    CHECK(diag.draws.size() == 4 * 24 + 2 * 4);  // 96 one-qubit + 8 directed CNOTs

    for (const RandomModelDraw& draw : diag.draws) {
        CHECK(draw.gamma >= 0.0);
        CHECK(draw.kappa >= 0.5);
        CHECK(draw.kappa <= 1.0);
        if (draw.kind == RandomModelDraw::Kind::OneQubit) {
            CHECK(draw.gamma <= spec.gamma_one_qubit[1]);
            const PlacementError& e = model.one_qubit(draw.qubit, draw.gate);
            REQUIRE(e.factors().size() == 1);
            const double expected = draw.has_neighbor_share ? draw.gamma
                                                            : draw.gamma * draw.kappa;
            CHECK(total_error_probability(e) == doctest::Approx(expected).epsilon(1e-9));
            // sigma_z-basis rotations keep only the local X/Y/Z share.
            if (table.is_z_basis_rotation(draw.gate)) {
                CHECK_FALSE(draw.has_neighbor_share);
                for (const auto& entry : e.factors()[0].entries()) {
                    CHECK(entry.pauli.weight() == 1);
                    CHECK(entry.pauli.at(draw.qubit) != PauliLetter::I);
                }
            }
        } else {
            CHECK(draw.gamma <= spec.gamma_two_qubit[1]);
            const PlacementError& e = model.cnot(draw.qubit, draw.partner);
            const double expected = draw.has_neighbor_share ? draw.gamma
                                                            : draw.gamma * draw.kappa;
            CHECK(total_error_probability(e) == doctest::Approx(expected).epsilon(1e-9));
        }
    }

    // Local errors of a non-z one-qubit gate act on the gate's qubit or its
    // neighbors only, each with weight 1.
    const PlacementError& e = model.one_qubit(0, CliffordTable::kHadamardId);
    const auto& neighbors = graph.neighbors(0);
    for (const auto& entry : e.factors()[0].entries()) {
        CHECK(entry.pauli.weight() == 1);
        bool on_qubit = entry.pauli.at(0) != PauliLetter::I;
        bool on_neighbor = false;
        for (uint32_t u : neighbors) {
            on_neighbor = on_neighbor || entry.pauli.at(u) != PauliLetter::I;
        }
        CHECK((on_qubit || on_neighbor));
    }

    // CNOT local errors live on the endpoint pair: 15 pair entries plus
    // weight-1 spectator entries.
    const PlacementError& ce = model.cnot(0, 1);
    int pair_entries = 0;
    for (const auto& entry : ce.factors()[0].entries()) {
        const bool on_pair = entry.pauli.at(0) != PauliLetter::I ||
                             entry.pauli.at(1) != PauliLetter::I;
        const bool off_pair = entry.pauli.at(2) != PauliLetter::I ||
                              entry.pauli.at(3) != PauliLetter::I;
        CHECK((on_pair != off_pair));  // either pair error or spectator error
        if (on_pair) {
            pair_entries++;
        }
    }
    CHECK(pair_entries == 15);

    // Readout lands in the spec interval.
    for (double r : model.readout()) {
        CHECK(r >= spec.readout[0]);
        CHECK(r <= spec.readout[1]);
    }
}

TEST_CASE("random model draws are reproducible and seed-sensitive") {
    const auto graph = ConnectivityGraph::path(3);
    RandomModelSpec spec;
    Rng rng1(7), rng2(7), rng3(8);
    const ErrorModel a = sample_random_model(graph, spec, rng1);
    const ErrorModel b = sample_random_model(graph, spec, rng2);
    const ErrorModel c = sample_random_model(graph, spec, rng3);
    CHECK(model_to_json(a) == model_to_json(b));
    CHECK(model_to_json(a) != model_to_json(c));
}

TEST_CASE("random model mean infidelities match the interval midpoints") {
    // With kappa in [0.5, 1] and neighbors present, E[total 1q infidelity] =
    // E[gamma] = 0.001; for isolated qubits E[gamma * kappa] = 0.00075.
    const auto graph = ConnectivityGraph::square_lattice(2, 2);
    RandomModelSpec spec;
    Rng rng(555);
    double sum_1q = 0.0;
    double sum_2q = 0.0;
    int count_1q = 0;
    int count_2q = 0;
    for (int rep = 0; rep < 60; rep++) {
        RandomModelDiagnostics diag;
        sample_random_model(graph, spec, rng, &diag);
        for (const auto& draw : diag.draws) {
            if (draw.kind == RandomModelDraw::Kind::OneQubit) {
                sum_1q += draw.gamma;
                count_1q++;
            } else {
                sum_2q += draw.gamma;
                count_2q++;
            }
        }
    }
    CHECK(sum_1q / count_1q == doctest::Approx(0.001).epsilon(0.05));
    CHECK(sum_2q / count_2q == doctest::Approx(0.010).epsilon(0.10));
}

TEST_CASE("model 1 is plain depolarizing noise") {
    const auto device = ConnectivityGraph::square_lattice(4, 4);
    const std::vector<uint32_t> qubits = {0, 1, 4, 5};
    const CrosstalkSpec spec;
    const ErrorModel model = build_model1(device, qubits, spec);

    CHECK(model.num_qubits() == 4);
    for (double r : model.readout()) {
        CHECK(r == doctest::Approx(0.005));
    }
    for (uint32_t q = 0; q < 4; q++) {
        for (uint8_t g = 0; g < 24; g++) {
            const PlacementError& e = model.one_qubit(q, g);
            REQUIRE(e.factors().size() == 1);
            CHECK(e.factors()[0].entries().size() == 3);
            CHECK(e.factors()[0].error_probability() == doctest::Approx(0.001));
        }
    }
    // Both directions of all 4 edges of the 2x2 block.
    CHECK(model.cnot_errors().size() == 8);
    const PlacementError& ce = model.cnot(0, 1);
    REQUIRE(ce.factors().size() == 1);
    CHECK(ce.factors()[0].entries().size() == 15);
    CHECK(ce.factors()[0].error_probability() == doctest::Approx(0.01));
}

TEST_CASE("model 2 adds distance-decaying crosstalk") {
    const auto device = ConnectivityGraph::square_lattice(4, 4);
    const std::vector<uint32_t> qubits = {0, 1, 4, 5};
    const CrosstalkSpec spec;
    const ErrorModel model = build_model2(device, qubits, spec);

    // CNOT(0, 1) on global sites (0, 1): spectators are logical 2 (site 4,
    // distance 1 from site 0) and logical 3 (site 5, distance 1 from site 1).
    const PlacementError& ce = model.cnot(0, 1);
    REQUIRE(ce.factors().size() == 3);
    CHECK(ce.factors()[0].entries().size() == 15);
    // delta at distance 1 = 0.0035 * 0.999 = 0.0034965.
    CHECK(ce.factors()[1].error_probability() == doctest::Approx(0.0034965).epsilon(1e-9));
    CHECK(ce.factors()[2].error_probability() == doctest::Approx(0.0034965).epsilon(1e-9));

    // Crosstalk factors act on single spectator qubits.
    for (size_t f = 1; f < ce.factors().size(); f++) {
        for (const auto& entry : ce.factors()[f].entries()) {
            CHECK(entry.pauli.weight() == 1);
            CHECK(entry.pauli.at(0) == PauliLetter::I);
            CHECK(entry.pauli.at(1) == PauliLetter::I);
        }
    }

    // A spread-out subset sees larger distances: qubits 0 and 15 are 6 apart.
    const ErrorModel far = build_model2(device, {0, 1, 15}, spec);
    const PlacementError& fe = far.cnot(0, 1);
    REQUIRE(fe.factors().size() == 2);
    // Logical 2 = site 15: distance 6 to site 0, 5 to site 1 -> min 5.
    CHECK(fe.factors()[1].error_probability() ==
          doctest::Approx(0.0035 * std::pow(0.999, 5)).epsilon(1e-9));
}

TEST_CASE("model JSON round-trips") {
    const auto graph = ConnectivityGraph::square_lattice(2, 2);
    RandomModelSpec spec;
    Rng rng(123);
    const ErrorModel model = sample_random_model(graph, spec, rng);
    const std::string text = model_to_json(model);
    const ErrorModel parsed = model_from_json(text);
    CHECK(model_to_json(parsed) == text);
    CHECK(parsed.num_qubits() == model.num_qubits());
    CHECK(parsed.readout() == model.readout());
    CHECK(parsed.one_qubit(2, 13) == model.one_qubit(2, 13));
    CHECK(parsed.cnot(1, 3) == model.cnot(1, 3));

    // Model 2 with factored CNOT errors survives the trip too.
    const ErrorModel m2 =
        build_model2(ConnectivityGraph::square_lattice(4, 4), {0, 1, 4, 5}, CrosstalkSpec{});
    CHECK(model_to_json(model_from_json(model_to_json(m2))) == model_to_json(m2));

    // Noiseless round-trip keeps implicit CNOT coverage.
    const ErrorModel nl = ErrorModel::noiseless(2);
    const ErrorModel nl2 = model_from_json(model_to_json(nl));
    CHECK(nl2.allow_missing_cnots());
    CHECK(nl2.cnot(0, 1).is_noiseless());

    CHECK_THROWS_AS(model_from_json("{}"), std::invalid_argument);
}
