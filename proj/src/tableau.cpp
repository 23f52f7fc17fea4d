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

#include "mrb/tableau.hpp"

#include <algorithm>
#include <bit>

#include "mrb/clifford1q.hpp"

namespace mrb {

namespace {

/// i-exponent accumulated when multiplying an n-qubit Pauli (x1, z1) by
/// (x2, z2) on the right, summed word-wise: the product of the per-qubit
/// letters is i^(plus - minus) times the XOR letter.
int word_phase(uint64_t x1, uint64_t z1, uint64_t x2, uint64_t z2) {
    // +i cases: (X,Y), (Y,Z), (Z,X); -i cases: (X,Z), (Y,X), (Z,Y).
    const uint64_t plus =
        (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
    const uint64_t minus =
        (x1 & ~z1 & ~x2 & z2) | (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2);
    return std::popcount(plus) - std::popcount(minus);
}

}  // namespace

Tableau::Tableau(uint32_t num_qubits)
    : n_(num_qubits),
      words_((num_qubits + 63) / 64),
      x_(static_cast<size_t>(2) * num_qubits * words_, 0),
      z_(static_cast<size_t>(2) * num_qubits * words_, 0),
      sign_(static_cast<size_t>(2) * num_qubits, 0) {
    for (uint32_t q = 0; q < n_; q++) {
        flip_bit(x_, q, q);        // destabilizer q = X_q
        flip_bit(z_, n_ + q, q);   // stabilizer q = Z_q
    }
}

void Tableau::apply_one_qubit(uint8_t gate, uint32_t qubit) {
    if (qubit >= n_) {
        throw std::out_of_range("tableau qubit index out of range");
    }
    const CliffordTable& table = CliffordTable::instance();
    for (uint32_t row = 0; row < 2 * n_; row++) {
        const uint8_t code = static_cast<uint8_t>(
            (bit(x_, row, qubit) ? 1 : 0) | (bit(z_, row, qubit) ? 2 : 0));
        if (code == 0) {
            continue;
        }
        const SignedLetter img = table.image(gate, static_cast<PauliLetter>(code));
        sign_[row] ^= img.sign;
        const auto new_code = static_cast<uint8_t>(img.letter);
        if ((code ^ new_code) & 1) {
            flip_bit(x_, row, qubit);
        }
        if ((code ^ new_code) & 2) {
            flip_bit(z_, row, qubit);
        }
    }
}

void Tableau::apply_cnot(uint32_t control, uint32_t target) {
    if (control >= n_ || target >= n_ || control == target) {
        throw std::out_of_range("tableau CNOT endpoints invalid");
    }
    for (uint32_t row = 0; row < 2 * n_; row++) {
        const bool xc = bit(x_, row, control);
        const bool zc = bit(z_, row, control);
        const bool xt = bit(x_, row, target);
        const bool zt = bit(z_, row, target);
        sign_[row] ^= static_cast<uint8_t>(xc && zt && (xt == zc));
        if (xc) {
            flip_bit(x_, row, target);
        }
        if (zt) {
            flip_bit(z_, row, control);
        }
    }
}

void Tableau::apply_layer(const Layer& layer) {
    if (layer.num_qubits() != n_) {
        throw std::invalid_argument("layer size does not match tableau");
    }
    for (uint32_t q = 0; q < n_; q++) {
        const Placement& p = layer.at(q);
        switch (p.kind) {
            case PlacementKind::Idle:
            case PlacementKind::CnotTarget:
                break;
            case PlacementKind::OneQubit:
                apply_one_qubit(p.gate, q);
                break;
            case PlacementKind::CnotControl:
                apply_cnot(q, p.partner);
                break;
        }
    }
}

void Tableau::apply_pauli(const PauliString& p) {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("Pauli size does not match tableau");
    }
    const auto& px = p.x_words();
    const auto& pz = p.z_words();
    for (uint32_t row = 0; row < 2 * n_; row++) {
        uint32_t acc = 0;
        const size_t base = static_cast<size_t>(row) * words_;
        for (uint32_t w = 0; w < words_; w++) {
            acc += static_cast<uint32_t>(std::popcount(x_[base + w] & pz[w]));
            acc += static_cast<uint32_t>(std::popcount(z_[base + w] & px[w]));
        }
        sign_[row] ^= static_cast<uint8_t>(acc & 1);
    }
}

std::string Tableau::measure_all() const {
    // A qubit's outcome is deterministic iff no stabilizer has X/Y content on
    // it. The outcome's sign comes from the product of the stabilizer rows
    // selected by the destabilizer X-bits on that qubit, which equals +-Z_q.
    for (uint32_t q = 0; q < n_; q++) {
        for (uint32_t i = 0; i < n_; i++) {
            if (bit(x_, n_ + i, q)) {
                throw NonDeterministicOutcome(
                    "measurement outcome on qubit " + std::to_string(q) +
                    " is not deterministic");
            }
        }
    }

    std::string result(n_, '0');
    std::vector<uint64_t> sx(words_), sz(words_);
    for (uint32_t q = 0; q < n_; q++) {
        std::fill(sx.begin(), sx.end(), 0);
        std::fill(sz.begin(), sz.end(), 0);
        int phase = 0;  // i-exponent mod 4; tracked exactly, must end at 0 or 2
        for (uint32_t i = 0; i < n_; i++) {
            if (!bit(x_, i, q)) {
                continue;
            }
            const uint32_t row = n_ + i;
            const size_t base = static_cast<size_t>(row) * words_;
            phase += 2 * sign_[row];
            for (uint32_t w = 0; w < words_; w++) {
                phase += word_phase(sx[w], sz[w], x_[base + w], z_[base + w]);
                sx[w] ^= x_[base + w];
                sz[w] ^= z_[base + w];
            }
        }
        phase &= 3;
        // The accumulated product must be exactly +-Z_q.
        bool is_zq = (phase == 0 || phase == 2);
        for (uint32_t w = 0; w < words_ && is_zq; w++) {
            const uint64_t expected_z = (q / 64 == w) ? (uint64_t{1} << (q % 64)) : 0;
            is_zq = (sx[w] == 0) && (sz[w] == expected_z);
        }
        if (!is_zq) {
            throw std::logic_error("tableau invariant violated during readout");
        }
        if (phase == 2) {
            result[q] = '1';
        }
    }
    return result;
}

std::string tableau_run(
    uint32_t num_qubits,
    std::span<const Layer> layers,
    std::span<const PauliString> errors) {
    if (!errors.empty() && errors.size() != layers.size()) {
        throw std::invalid_argument("error list must be empty or match layer count");
    }
    Tableau t(num_qubits);
    for (size_t i = 0; i < layers.size(); i++) {
        t.apply_layer(layers[i]);
        if (!errors.empty()) {
            t.apply_pauli(errors[i]);
        }
    }
    return t.measure_all();
}

}  // namespace mrb
