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

#include "mrb/layer.hpp"

#include <stdexcept>
#include <string>

namespace mrb {

Layer::Layer(uint32_t num_qubits) : placements_(num_qubits) {
}

Layer Layer::uniform_one_qubit(uint32_t num_qubits, uint8_t gate) {
    Layer layer(num_qubits);
    for (uint32_t q = 0; q < num_qubits; q++) {
        layer.set_one_qubit(q, gate);
    }
    return layer;
}

const Placement& Layer::at(uint32_t qubit) const {
    if (qubit >= placements_.size()) {
        throw std::out_of_range("layer qubit index out of range");
    }
    return placements_[qubit];
}

void Layer::set_one_qubit(uint32_t qubit, uint8_t gate) {
    if (qubit >= placements_.size()) {
        throw std::out_of_range("layer qubit index out of range");
    }
    if (gate >= CliffordTable::kNumGates) {
        throw std::invalid_argument("Clifford gate id out of range");
    }
    placements_[qubit] = Placement{PlacementKind::OneQubit, gate, 0};
}

void Layer::set_idle(uint32_t qubit) {
    if (qubit >= placements_.size()) {
        throw std::out_of_range("layer qubit index out of range");
    }
    placements_[qubit] = Placement{};
}

void Layer::set_cnot(uint32_t control, uint32_t target) {
    if (control >= placements_.size() || target >= placements_.size()) {
        throw std::out_of_range("layer qubit index out of range");
    }
    if (control == target) {
        throw std::invalid_argument("CNOT control and target must differ");
    }
    placements_[control] = Placement{PlacementKind::CnotControl, 0, target};
    placements_[target] = Placement{PlacementKind::CnotTarget, 0, control};
}

void Layer::validate() const {
    const uint32_t n = num_qubits();
    for (uint32_t q = 0; q < n; q++) {
        const Placement& p = placements_[q];
        switch (p.kind) {
            case PlacementKind::Idle:
                break;
            case PlacementKind::OneQubit:
                if (p.gate >= CliffordTable::kNumGates) {
                    throw std::invalid_argument(
                        "malformed layer: invalid gate id on qubit " + std::to_string(q));
                }
                break;
            case PlacementKind::CnotControl:
            case PlacementKind::CnotTarget: {
                if (p.partner >= n || p.partner == q) {
                    throw std::invalid_argument(
                        "malformed layer: CNOT partner out of range on qubit " + std::to_string(q));
                }
                const Placement& other = placements_[p.partner];
                const PlacementKind expected = p.kind == PlacementKind::CnotControl
                                                   ? PlacementKind::CnotTarget
                                                   : PlacementKind::CnotControl;
                if (other.kind != expected || other.partner != q) {
                    throw std::invalid_argument(
                        "malformed layer: unpaired CNOT placement on qubit " + std::to_string(q));
                }
                break;
            }
        }
    }
}

PauliString conjugate_by_layer(const PauliString& p, const Layer& layer) {
    if (p.num_qubits() != layer.num_qubits()) {
        throw std::invalid_argument("Pauli and layer sizes differ");
    }
    const CliffordTable& table = CliffordTable::instance();
    PauliString result = p;
    for (uint32_t q = 0; q < layer.num_qubits(); q++) {
        const Placement& placement = layer.at(q);
        switch (placement.kind) {
            case PlacementKind::Idle:
            case PlacementKind::CnotTarget:
                break;  // targets are handled together with their control
            case PlacementKind::OneQubit:
                result.set(q, table.image_letter(placement.gate, result.at(q)));
                break;
            case PlacementKind::CnotControl: {
                // CNOT(c, t): X_c -> X_c X_t, Z_t -> Z_c Z_t, X_t and Z_c fixed.
                const uint32_t c = q;
                const uint32_t t = placement.partner;
                const bool xc = result.x_bit(c);
                const bool zt = result.z_bit(t);
                if (xc) {
                    result.set(
                        t,
                        static_cast<PauliLetter>(
                            static_cast<uint8_t>(result.at(t)) ^
                            static_cast<uint8_t>(PauliLetter::X)));
                }
                if (zt) {
                    result.set(
                        c,
                        static_cast<PauliLetter>(
                            static_cast<uint8_t>(result.at(c)) ^
                            static_cast<uint8_t>(PauliLetter::Z)));
                }
                break;
            }
        }
    }
    return result;
}

Layer invert_layer(const Layer& layer) {
    const CliffordTable& table = CliffordTable::instance();
    Layer result = layer;
    for (uint32_t q = 0; q < layer.num_qubits(); q++) {
        const Placement& placement = layer.at(q);
        if (placement.kind == PlacementKind::OneQubit) {
            result.set_one_qubit(q, table.inverse(placement.gate));
        }
    }
    return result;
}

}  // namespace mrb
