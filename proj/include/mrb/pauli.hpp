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

#ifndef MRB_PAULI_HPP
#define MRB_PAULI_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mrb {

/// Single-qubit Pauli letter in the two-bit (x, z) encoding:
/// the numeric value is x | (z << 1), so I=0, X=1, Z=2, Y=3.
enum class PauliLetter : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char pauli_letter_char(PauliLetter p);
PauliLetter pauli_letter_from_char(char c);

/// An n-qubit Pauli operator modulo global phase, stored as packed x/z bit
/// vectors (64 qubits per word). Composition is bitwise XOR of the symplectic
/// representation; phases are intentionally not tracked at this level.
class PauliString {
  public:
    PauliString() = default;

    /// The n-qubit identity.
    explicit PauliString(uint32_t num_qubits);

    static PauliString identity(uint32_t num_qubits) {
        return PauliString(num_qubits);
    }

    /// Parses a label such as "IXYZ" (qubit 0 first). Throws std::invalid_argument
    /// on an empty label or an unknown character.
    static PauliString from_label(const std::string& label);

    /// Identity everywhere except `qubit`, which carries `p`.
    static PauliString single(uint32_t num_qubits, uint32_t qubit, PauliLetter p);

    uint32_t num_qubits() const {
        return n_;
    }

    bool is_identity() const;

    /// Number of non-identity letters.
    uint32_t weight() const;

    PauliLetter at(uint32_t qubit) const;
    void set(uint32_t qubit, PauliLetter p);

    bool x_bit(uint32_t qubit) const;
    bool z_bit(uint32_t qubit) const;

    /// In-place phase-free composition (symplectic XOR). Throws
    /// std::invalid_argument when dimensions differ.
    void xor_with(const PauliString& other);

    /// True when this operator commutes with `other` (symplectic form is 0).
    /// Throws std::invalid_argument when dimensions differ.
    bool commutes_with(const PauliString& other) const;

    std::string label() const;

    const std::vector<uint64_t>& x_words() const {
        return x_;
    }
    const std::vector<uint64_t>& z_words() const {
        return z_;
    }

    bool operator==(const PauliString& other) const = default;

  private:
    uint32_t n_ = 0;
    std::vector<uint64_t> x_;
    std::vector<uint64_t> z_;
};

/// Phase-free product of two equal-size Pauli strings.
PauliString compose_pauli(const PauliString& a, const PauliString& b);

}  // namespace mrb

#endif
