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

#ifndef MRB_LAYER_HPP
#define MRB_LAYER_HPP

#include <cstdint>
#include <vector>

#include "mrb/clifford1q.hpp"
#include "mrb/pauli.hpp"

namespace mrb {

enum class PlacementKind : uint8_t {
    Idle,
    OneQubit,
    CnotControl,
    CnotTarget,
};

/// What a single qubit does during one layer.
struct Placement {
    PlacementKind kind = PlacementKind::Idle;
    uint8_t gate = 0;      // Clifford id; meaningful for OneQubit only
    uint32_t partner = 0;  // other CNOT endpoint; meaningful for CnotControl/CnotTarget

    bool operator==(const Placement& other) const = default;
};

/// One circuit layer: a disjoint assignment of gates to qubits. Every qubit
/// has exactly one placement; CNOTs occupy two qubits via paired
/// CnotControl/CnotTarget placements.
class Layer {
  public:
    Layer() = default;

    /// All qubits idle.
    explicit Layer(uint32_t num_qubits);

    /// Every qubit carries the same one-qubit Clifford `gate`.
    static Layer uniform_one_qubit(uint32_t num_qubits, uint8_t gate);

    uint32_t num_qubits() const {
        return static_cast<uint32_t>(placements_.size());
    }

    const Placement& at(uint32_t qubit) const;

    void set_one_qubit(uint32_t qubit, uint8_t gate);
    void set_idle(uint32_t qubit);

    /// Places a CNOT; both endpoints must currently be idle-or-overwritable
    /// single slots. Throws std::invalid_argument on aliasing (control == target).
    void set_cnot(uint32_t control, uint32_t target);

    /// Structural check: partner links are mutual, indices are in range, gate
    /// ids are valid. Throws std::invalid_argument with a description.
    void validate() const;

    bool operator==(const Layer& other) const = default;

  private:
    std::vector<Placement> placements_;
};

/// Phase-free conjugation of a Pauli operator by the unitary of a layer:
/// returns the letter content of U P U^dagger.
PauliString conjugate_by_layer(const PauliString& p, const Layer& layer);

/// The inverse layer: every one-qubit gate replaced by its inverse; CNOTs are
/// self-inverse and stay in place.
Layer invert_layer(const Layer& layer);

}  // namespace mrb

#endif
