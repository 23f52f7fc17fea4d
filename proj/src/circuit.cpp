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

#include "mrb/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "mrb/tableau.hpp"

namespace mrb {

void MirrorCircuit::validate() const {
    if (benchmark_depth % 2 != 0) {
        throw std::invalid_argument("benchmark depth must be even");
    }
    if (layers.size() != static_cast<size_t>(2) * benchmark_depth + 3) {
        throw std::invalid_argument("mirror circuit must have 2d + 3 layers");
    }
    if (target.size() != n) {
        throw std::invalid_argument("target length must equal the qubit count");
    }
    for (char c : target) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("target must be a bit string");
        }
    }
    for (const Layer& layer : layers) {
        if (layer.num_qubits() != n) {
            throw std::invalid_argument("all layers must act on the same qubits");
        }
        layer.validate();
    }
}

ConnectivityGraph MrbDesign::benchmark_graph() const {
    return device.induced(qubits);
}

void MrbDesign::validate() const {
    if (qubits.empty()) {
        throw std::invalid_argument("design must select at least one qubit");
    }
    if (!std::is_sorted(qubits.begin(), qubits.end()) ||
        std::adjacent_find(qubits.begin(), qubits.end()) != qubits.end()) {
        throw std::invalid_argument("design qubits must be ascending and distinct");
    }
    if (qubits.back() >= device.num_sites()) {
        throw std::invalid_argument("design qubit id exceeds device size");
    }
    if (depths.empty()) {
        throw std::invalid_argument("design must include at least one depth");
    }
    if (!std::is_sorted(depths.begin(), depths.end()) ||
        std::adjacent_find(depths.begin(), depths.end()) != depths.end()) {
        throw std::invalid_argument("design depths must be ascending and distinct");
    }
    for (uint32_t d : depths) {
        if (d % 2 != 0) {
            throw std::invalid_argument("benchmark depths must be even");
        }
    }
    if (circuits_per_depth == 0) {
        throw std::invalid_argument("circuits_per_depth must be positive");
    }
    if (shots_per_circuit == 0) {
        throw std::invalid_argument("shots_per_circuit must be positive");
    }
    sampler.validate(benchmark_graph());
}

MirrorCircuit assemble_mirror_circuit(
    uint32_t num_qubits,
    const Layer& f0,
    const std::vector<Layer>& core,
    const std::vector<Layer>& paulis,
    uint64_t seed) {
    const uint32_t d = static_cast<uint32_t>(core.size()) * 2;
    if (paulis.size() != static_cast<size_t>(d) + 1) {
        throw std::invalid_argument("mirror circuit needs d + 1 Pauli layers");
    }

    MirrorCircuit circuit;
    circuit.n = num_qubits;
    circuit.benchmark_depth = d;
    circuit.seed = seed;
    circuit.layers.reserve(static_cast<size_t>(2) * d + 3);

    circuit.layers.push_back(f0);
    circuit.layers.push_back(paulis[0]);
    for (uint32_t i = 0; i < d / 2; i++) {
        circuit.layers.push_back(core[i]);
        circuit.layers.push_back(paulis[i + 1]);
    }
    for (uint32_t i = d / 2; i > 0; i--) {
        circuit.layers.push_back(invert_layer(core[i - 1]));
        circuit.layers.push_back(paulis[d / 2 + (d / 2 - i) + 1]);
    }
    circuit.layers.push_back(invert_layer(f0));

    circuit.target = compute_target(num_qubits, circuit.layers);
    circuit.validate();
    return circuit;
}

MirrorCircuit sample_mirror_circuit(
    const MrbDesign& design, uint32_t depth, Rng& rng, uint64_t seed, SamplerStats* stats) {
    if (depth % 2 != 0) {
        throw std::invalid_argument("benchmark depth must be even");
    }
    const ConnectivityGraph graph = design.benchmark_graph();
    const uint32_t n = design.n();

    // Frozen draw order: F0, then L_1..L_{d/2}, then P_0..P_d.
    const Layer f0 = sample_uniform_clifford_layer(n, rng);
    std::vector<Layer> core;
    core.reserve(depth / 2);
    for (uint32_t i = 0; i < depth / 2; i++) {
        core.push_back(sample_layer(graph, design.sampler, rng, stats));
    }
    std::vector<Layer> paulis;
    paulis.reserve(depth + 1);
    for (uint32_t i = 0; i < depth + 1; i++) {
        paulis.push_back(sample_pauli_layer(n, rng));
    }
    return assemble_mirror_circuit(n, f0, core, paulis, seed);
}

MirrorCircuit sample_circuit_at(
    const MrbDesign& design, uint32_t depth_index, uint32_t circuit_index, SamplerStats* stats) {
    if (depth_index >= design.depths.size()) {
        throw std::out_of_range("depth index out of range");
    }
    const uint64_t counter =
        (static_cast<uint64_t>(depth_index) << 32) | static_cast<uint64_t>(circuit_index);
    const uint64_t seed = derive_seed(design.master_seed, SeedStream::CircuitSampling, counter);
    Rng rng(seed);
    return sample_mirror_circuit(design, design.depths[depth_index], rng, seed, stats);
}

std::string compute_target(uint32_t num_qubits, const std::vector<Layer>& layers) {
    return tableau_run(num_qubits, layers);
}

std::string circuit_id(uint32_t depth, uint32_t circuit_index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "d%04u_k%03u", depth, circuit_index);
    return std::string(buf);
}

}  // namespace mrb
