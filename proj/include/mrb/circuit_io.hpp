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

#ifndef MRB_CIRCUIT_IO_HPP
#define MRB_CIRCUIT_IO_HPP

#include <filesystem>
#include <string>

#include "mrb/circuit.hpp"

namespace mrb {

/// Circuit text format, one circuit per file:
///
///     #MRB n=4 d=2 target=0110 seed=00000000000004d2
///     L 0: q0=C17 q1q2=CX q3=I
///     ...
///
/// Layers are listed in time order. Each qubit appears exactly once per
/// layer: `q<j>=C<id>` is a one-qubit Clifford, `q<a>q<b>=CX` a CNOT with
/// control a and target b (emitted at the smaller endpoint's position), and
/// `q<j>=I` an idle qubit. Tokens are ascending by qubit. The seed is the
/// 16-digit lower-case hex sampling seed.
std::string serialize_circuit(const MirrorCircuit& circuit);

/// Inverse of serialize_circuit. Rejects malformed input and recomputes the
/// target, throwing std::invalid_argument when the stored target is wrong.
MirrorCircuit parse_circuit(const std::string& text);

void write_circuit_file(const std::filesystem::path& path, const MirrorCircuit& circuit);
MirrorCircuit read_circuit_file(const std::filesystem::path& path);

/// Design JSON (schema_version 1): device graph, qubit subset, sampler spec,
/// depths, circuit/shot counts, master seed (hex string).
std::string design_to_json(const MrbDesign& design);
MrbDesign design_from_json(const std::string& json_text);

void write_design_file(const std::filesystem::path& path, const MrbDesign& design);
MrbDesign read_design_file(const std::filesystem::path& path);

/// Shared helpers for 64-bit seeds in JSON (values above 2^53 cannot be
/// stored as JSON numbers without loss, so they travel as hex strings).
std::string seed_to_hex(uint64_t seed);
uint64_t seed_from_hex(const std::string& text);

}  // namespace mrb

#endif
