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

#ifndef MRB_CLIFFORD1Q_HPP
#define MRB_CLIFFORD1Q_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <string>

#include "mrb/pauli.hpp"

namespace mrb {

/// A Pauli letter together with a sign bit (0 -> +1, 1 -> -1), the image of a
/// Hermitian Pauli under Clifford conjugation.
struct SignedLetter {
    uint8_t sign = 0;
    PauliLetter letter = PauliLetter::I;

    bool operator==(const SignedLetter& other) const = default;
};

/// The 24 single-qubit Clifford gates modulo global phase, in a frozen
/// canonical order that is part of the circuit file format.
///
/// Ordering: id = 4*k + p. Here p indexes a left Pauli factor {I, X, Y, Z}
/// and k one of six rotation words over {H, S}
///
///     k=0: ""    k=1: "H"    k=2: "S"    k=3: "HS"    k=4: "SH"    k=5: "HSH"
///
/// (words are matrix products, rightmost gate acts first), and the element is
/// the product Pauli * word. Consequences used elsewhere:
///   * ids 0..3 are exactly I, X, Y, Z,
///   * id 4 is H, id 8 is S, id 11 is S^dagger,
///   * the sigma_z-basis rotations {I, Z, S, S^dagger} are ids {0, 3, 8, 11}.
class CliffordTable {
  public:
    static constexpr uint8_t kNumGates = 24;
    static constexpr uint8_t kIdentityId = 0;
    static constexpr uint8_t kPauliXId = 1;
    static constexpr uint8_t kPauliYId = 2;
    static constexpr uint8_t kPauliZId = 3;
    static constexpr uint8_t kHadamardId = 4;
    static constexpr uint8_t kPhaseId = 8;
    static constexpr uint8_t kPhaseDaggerId = 11;

    static const CliffordTable& instance();

    /// Id of the product U(a) * U(b) (so b acts first). Conjugation actions
    /// compose accordingly: image(compose(a, b), P) = image(a, image(b, P)).
    uint8_t compose(uint8_t a, uint8_t b) const;

    uint8_t inverse(uint8_t g) const;

    /// Signed image of the Hermitian Pauli `p` under conjugation by gate `g`:
    /// U(g) p U(g)^dagger = (-1)^sign * letter.
    SignedLetter image(uint8_t g, PauliLetter p) const;

    /// Image letter only, for phase-free propagation.
    PauliLetter image_letter(uint8_t g, PauliLetter p) const;

    /// True when `g` preserves +Z under conjugation, i.e. g in {I, Z, S, S^dagger}.
    bool is_z_basis_rotation(uint8_t g) const;

    /// Reference 2x2 unitary, row-major {a00, a01, a10, a11}, in the canonical
    /// global phase implied by the Pauli * word construction above.
    const std::array<std::complex<double>, 4>& unitary(uint8_t g) const;

    /// Human-readable canonical word, e.g. "X.HS" for id 4*3 + 1.
    std::string word(uint8_t g) const;

  private:
    CliffordTable();

    struct Element {
        std::array<SignedLetter, 4> images;  // indexed by PauliLetter code
        std::array<std::complex<double>, 4> matrix;
        uint8_t inverse = 0;
        bool z_basis_rotation = false;
    };

    std::array<Element, kNumGates> elements_;
    std::array<std::array<uint8_t, kNumGates>, kNumGates> compose_;

    static void check_gate(uint8_t g);
};

}  // namespace mrb

#endif
