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

#include "mrb/frame_sim.hpp"

#include <stdexcept>

#include "mrb/tableau.hpp"

namespace mrb {

uint32_t hamming_distance(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("Hamming distance needs equal-length strings");
    }
    uint32_t d = 0;
    for (size_t i = 0; i < a.size(); i++) {
        d += a[i] != b[i] ? 1 : 0;
    }
    return d;
}

namespace {

/// Draws the errors of one layer into `frame`, in ascending qubit order
/// (CNOT errors are drawn at the control's position). The draw order is part
/// of the reproducibility contract shared with the tableau twin.
void sample_layer_errors(
    const Layer& layer, const ErrorModel& model, PauliString& frame, Rng& rng) {
    for (uint32_t q = 0; q < layer.num_qubits(); q++) {
        const Placement& p = layer.at(q);
        switch (p.kind) {
            case PlacementKind::Idle:
            case PlacementKind::CnotTarget:
                break;
            case PlacementKind::OneQubit:
                model.one_qubit(q, p.gate).sample_into(frame, rng);
                break;
            case PlacementKind::CnotControl:
                model.cnot(q, p.partner).sample_into(frame, rng);
                break;
        }
    }
}

void apply_readout_flips(
    const ErrorModel& model, std::string& bits, Rng& rng) {
    for (uint32_t q = 0; q < bits.size(); q++) {
        // One variate per qubit, unconditionally, to keep the stream layout
        // identical between the frame and tableau paths.
        if (rng.bernoulli(model.readout()[q])) {
            bits[q] = bits[q] == '0' ? '1' : '0';
        }
    }
}

void check_simulation_args(
    const MirrorCircuit& circuit, const ErrorModel& model, uint32_t num_shots) {
    if (num_shots == 0) {
        throw std::invalid_argument("num_shots must be positive");
    }
    circuit.validate();
    model.require_covers(circuit);
}

}  // namespace

ShotResult simulate_shots(
    const MirrorCircuit& circuit,
    const ErrorModel& model,
    uint32_t num_shots,
    uint64_t sim_seed) {
    check_simulation_args(circuit, model, num_shots);
    ShotResult result;
    result.n = circuit.n;
    result.total_shots = num_shots;

    for (uint32_t shot = 0; shot < num_shots; shot++) {
        Rng rng(derive_seed(sim_seed, SeedStream::ShotSimulation, shot));
        PauliString frame(circuit.n);
        for (const Layer& layer : circuit.layers) {
            frame = conjugate_by_layer(frame, layer);
            sample_layer_errors(layer, model, frame, rng);
        }
        std::string bits = circuit.target;
        for (uint32_t q = 0; q < circuit.n; q++) {
            if (frame.x_bit(q)) {
                bits[q] = bits[q] == '0' ? '1' : '0';
            }
        }
        apply_readout_flips(model, bits, rng);
        result.counts[bits]++;
    }
    return result;
}

ShotResult simulate_shots_tableau(
    const MirrorCircuit& circuit,
    const ErrorModel& model,
    uint32_t num_shots,
    uint64_t sim_seed) {
    check_simulation_args(circuit, model, num_shots);
    ShotResult result;
    result.n = circuit.n;
    result.total_shots = num_shots;

    for (uint32_t shot = 0; shot < num_shots; shot++) {
        Rng rng(derive_seed(sim_seed, SeedStream::ShotSimulation, shot));
        Tableau tableau(circuit.n);
        for (const Layer& layer : circuit.layers) {
            tableau.apply_layer(layer);
            PauliString error(circuit.n);
            sample_layer_errors(layer, model, error, rng);
            tableau.apply_pauli(error);
        }
        std::string bits = tableau.measure_all();
        apply_readout_flips(model, bits, rng);
        result.counts[bits]++;
    }
    return result;
}

HammingHistogram hamming_histogram(const ShotResult& result, const std::string& target) {
    if (target.size() != result.n) {
        throw std::invalid_argument("target length does not match the result");
    }
    if (result.total_shots == 0) {
        throw std::invalid_argument("cannot histogram an empty result");
    }
    HammingHistogram hist;
    hist.n = result.n;
    hist.h.assign(result.n + 1, 0.0);
    for (const auto& [bits, count] : result.counts) {
        hist.h[hamming_distance(bits, target)] += count;
    }
    for (double& v : hist.h) {
        v /= result.total_shots;
    }
    return hist;
}

}  // namespace mrb
