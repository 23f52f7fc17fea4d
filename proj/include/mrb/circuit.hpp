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

#ifndef MRB_CIRCUIT_HPP
#define MRB_CIRCUIT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mrb/graph.hpp"
#include "mrb/layer.hpp"
#include "mrb/rng.hpp"
#include "mrb/sampler.hpp"

namespace mrb {

/// A randomized mirror circuit of benchmark depth d (d even). In time order
/// the 2d + 3 layers are
///
///     F0, P0, L1, P1, ..., L_{d/2}, P_{d/2},
///     L_{d/2}^-1, P_{d/2+1}, ..., L_1^-1, P_d, F0^-1
///
/// where F0 is a uniformly random one-qubit Clifford layer, the P_i are
/// uniformly random Pauli layers (d + 1 of them) and the L_i are sampled core
/// layers whose inverses are replayed in reverse order. Absent errors the
/// circuit maps |0...0> to the computational basis state `target`.
struct MirrorCircuit {
    uint32_t n = 0;
    uint32_t benchmark_depth = 0;
    std::vector<Layer> layers;
    std::string target;
    uint64_t seed = 0;  // seed the circuit was sampled from (provenance)

    /// Structural checks: layer count 2d + 3, consistent widths, valid
    /// layers, target length n. Throws std::invalid_argument.
    void validate() const;
};

/// A benchmark design: which device, which qubits on it, how layers are
/// sampled, and the measurement plan.
struct MrbDesign {
    ConnectivityGraph device;
    std::vector<uint32_t> qubits;  // ascending global site ids
    SamplerSpec sampler;
    std::vector<uint32_t> depths;         // even, ascending
    uint32_t circuits_per_depth = 30;     // K
    uint32_t shots_per_circuit = 100;     // N
    uint64_t master_seed = 0;

    uint32_t n() const {
        return static_cast<uint32_t>(qubits.size());
    }

    /// Induced subgraph on `qubits`, relabeled to 0..n-1.
    ConnectivityGraph benchmark_graph() const;

    /// Throws std::invalid_argument on: empty/duplicate/unsorted qubits,
    /// out-of-range sites, odd or unsorted depths, zero circuit/shot counts,
    /// or a sampler spec invalid for the benchmark graph.
    void validate() const;
};

/// Builds the mirror sequence from its random ingredients and computes the
/// target string. `core` holds L_1..L_{d/2}; `paulis` holds P_0..P_d.
MirrorCircuit assemble_mirror_circuit(
    uint32_t num_qubits,
    const Layer& f0,
    const std::vector<Layer>& core,
    const std::vector<Layer>& paulis,
    uint64_t seed);

/// Samples a depth-d mirror circuit for the design. The rng should be seeded
/// with `seed` (recorded in the result for provenance).
MirrorCircuit sample_mirror_circuit(
    const MrbDesign& design,
    uint32_t depth,
    Rng& rng,
    uint64_t seed,
    SamplerStats* stats = nullptr);

/// Convenience: derives the per-circuit seed from the design's master seed
/// and the (depth_index, circuit_index) pair, then samples.
MirrorCircuit sample_circuit_at(
    const MrbDesign& design,
    uint32_t depth_index,
    uint32_t circuit_index,
    SamplerStats* stats = nullptr);

/// The noiseless output string of `layers` applied to |0...0>.
/// Throws NonDeterministicOutcome if the sequence is not a mirror sequence.
std::string compute_target(uint32_t num_qubits, const std::vector<Layer>& layers);

/// Canonical circuit id "d<depth, 4 digits>_k<index, 3 digits>".
std::string circuit_id(uint32_t depth, uint32_t circuit_index);

}  // namespace mrb

#endif
