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

#ifndef MRB_FRAME_SIM_HPP
#define MRB_FRAME_SIM_HPP

#include <cstdint>
#include <map>
#include <string>

#include "mrb/circuit.hpp"
#include "mrb/error_model.hpp"

namespace mrb {

/// Measured bit strings of one circuit, histogrammed.
struct ShotResult {
    uint32_t n = 0;
    uint32_t total_shots = 0;
    std::map<std::string, uint32_t> counts;
};

/// Distribution of Hamming distances to the target: h[k] is the fraction of
/// shots at distance k, for k = 0..n.
struct HammingHistogram {
    uint32_t n = 0;
    std::vector<double> h;
};

uint32_t hamming_distance(const std::string& a, const std::string& b);

/// Simulates `num_shots` runs of the circuit under the error model by Pauli
/// frame propagation: per shot, one Pauli frame is conjugated through each
/// layer, gate errors are drawn and multiplied in, the output string is the
/// target XOR the frame's X-support, and readout flips are applied last.
/// Per-shot randomness comes from derive_seed(sim_seed, ShotSimulation, shot),
/// so results are independent of execution order.
///
/// Throws std::invalid_argument on coverage gaps or num_shots == 0.
ShotResult simulate_shots(
    const MirrorCircuit& circuit,
    const ErrorModel& model,
    uint32_t num_shots,
    uint64_t sim_seed);

/// Oracle twin of simulate_shots: identical error draws, but propagated
/// through an exact stabilizer tableau instead of a Pauli frame. Agrees with
/// simulate_shots shot for shot; exists to cross-check the frame optimization.
ShotResult simulate_shots_tableau(
    const MirrorCircuit& circuit,
    const ErrorModel& model,
    uint32_t num_shots,
    uint64_t sim_seed);

/// Histogram of Hamming distances between measured strings and `target`.
HammingHistogram hamming_histogram(const ShotResult& result, const std::string& target);

}  // namespace mrb

#endif
