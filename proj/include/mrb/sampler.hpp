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

#ifndef MRB_SAMPLER_HPP
#define MRB_SAMPLER_HPP

#include <cstdint>
#include <string>

#include "mrb/graph.hpp"
#include "mrb/layer.hpp"
#include "mrb/rng.hpp"

namespace mrb {

enum class SamplerKind : uint8_t {
    /// Random maximal matching; each selected edge hosts a CNOT with
    /// probability xi * n / (2 * |selected|), remaining qubits get uniformly
    /// random one-qubit Cliffords. `xi` is the expected two-qubit gate
    /// density 2 * E[#CNOT] / n.
    EdgeGrab,
    /// With probability 1/2 one uniformly random edge hosts a CNOT; all other
    /// qubits get uniformly random one-qubit Cliffords.
    SingleCnot,
};

std::string sampler_kind_name(SamplerKind kind);
SamplerKind sampler_kind_from_name(const std::string& name);

struct SamplerSpec {
    SamplerKind kind = SamplerKind::EdgeGrab;
    double xi = 0.125;  // EdgeGrab only

    static constexpr double kSingleCnotProbability = 0.5;

    /// Validates against a benchmark graph. Throws std::invalid_argument when
    /// xi is outside [0, 1], or when xi > 0 on an edgeless graph with more
    /// than one qubit (a single qubit legitimately has no two-qubit gates, so
    /// the density degrades to 0 there).
    void validate(const ConnectivityGraph& graph) const;
};

/// Counters for diagnosing unachievable densities: `clamp_events` counts
/// layers where the per-edge CNOT probability had to be clamped to 1, i.e.
/// the requested xi exceeded what the sampled matching could deliver.
struct SamplerStats {
    uint64_t layers = 0;
    uint64_t cnots = 0;
    uint64_t clamp_events = 0;

    /// Realized two-qubit gate density 2 * #CNOT / (n * layers).
    double realized_density(uint32_t num_qubits) const {
        if (layers == 0 || num_qubits == 0) {
            return 0.0;
        }
        return 2.0 * static_cast<double>(cnots) /
               (static_cast<double>(num_qubits) * static_cast<double>(layers));
    }
};

/// Samples one core circuit layer over `graph` (vertices 0..n-1).
Layer sample_layer(
    const ConnectivityGraph& graph,
    const SamplerSpec& spec,
    Rng& rng,
    SamplerStats* stats = nullptr);

/// Uniformly random Pauli layer (every qubit gets one of ids {0, 1, 2, 3}).
Layer sample_pauli_layer(uint32_t num_qubits, Rng& rng);

/// Uniformly random layer of one-qubit Cliffords (all 24 ids).
Layer sample_uniform_clifford_layer(uint32_t num_qubits, Rng& rng);

}  // namespace mrb

#endif
