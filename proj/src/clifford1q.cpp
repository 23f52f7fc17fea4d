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

#include "mrb/clifford1q.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace mrb {

namespace {

/// i-exponent picked up when multiplying Pauli letters a * b = i^phase * (a XOR b),
/// with letters in the (z<<1)|x code order I, X, Z, Y.
constexpr int8_t kMulPhase[4][4] = {
    // b:  I  X  Z  Y
    /*I*/ {0, 0, 0, 0},
    /*X*/ {0, 0, 3, 1},  // X*Z = -i Y,  X*Y = i Z
    /*Z*/ {0, 1, 0, 3},  // Z*X = i Y,   Z*Y = -i X
    /*Y*/ {0, 3, 1, 0},  // Y*X = -i Z,  Y*Z = i X
};

/// Conjugation action of a single-qubit Clifford, recorded as the signed
/// images of X and Z. The image of Y follows from Y = i * X * Z.
struct Action {
    SignedLetter x;
    SignedLetter z;

    bool operator==(const Action& other) const = default;
};

SignedLetter image_of_y(const Action& a) {
    const auto lx = static_cast<uint8_t>(a.x.letter);
    const auto lz = static_cast<uint8_t>(a.z.letter);
    // i * (±lx) * (±lz) = i^(1 + 2 sx + 2 sz + mul_phase) * (lx XOR lz)
    const uint8_t phase = (1 + 2 * a.x.sign + 2 * a.z.sign + kMulPhase[lx][lz]) & 3;
    if (phase != 0 && phase != 2) {
        throw std::logic_error("Clifford image of Y is not Hermitian");
    }
    return SignedLetter{static_cast<uint8_t>(phase == 2), static_cast<PauliLetter>(lx ^ lz)};
}

SignedLetter apply_action(const Action& a, const SignedLetter& in) {
    SignedLetter out;
    switch (in.letter) {
        case PauliLetter::I:
            out = SignedLetter{0, PauliLetter::I};
            break;
        case PauliLetter::X:
            out = a.x;
            break;
        case PauliLetter::Z:
            out = a.z;
            break;
        case PauliLetter::Y:
            out = image_of_y(a);
            break;
    }
    out.sign ^= in.sign;
    return out;
}

/// Action of the product outer * inner (inner acts first on states, so the
/// conjugation action applies inner's action first, then outer's).
Action compose_actions(const Action& outer, const Action& inner) {
    return Action{
        apply_action(outer, inner.x),
        apply_action(outer, inner.z),
    };
}

using Matrix = std::array<std::complex<double>, 4>;

Matrix matmul(const Matrix& a, const Matrix& b) {
    return Matrix{
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    };
}

uint8_t action_key(const Action& a) {
    return static_cast<uint8_t>(
        a.x.sign | (static_cast<uint8_t>(a.x.letter) << 1) | (a.z.sign << 3) |
        (static_cast<uint8_t>(a.z.letter) << 4));
}

}  // namespace

const CliffordTable& CliffordTable::instance() {
    static const CliffordTable table;
    return table;
}

CliffordTable::CliffordTable() {
    const std::complex<double> i(0.0, 1.0);
    const double s = 1.0 / std::sqrt(2.0);

    const Action act_identity{{0, PauliLetter::X}, {0, PauliLetter::Z}};
    const Action act_h{{0, PauliLetter::Z}, {0, PauliLetter::X}};
    const Action act_s{{0, PauliLetter::Y}, {0, PauliLetter::Z}};
    const std::array<Action, 4> act_pauli = {
        act_identity,
        Action{{0, PauliLetter::X}, {1, PauliLetter::Z}},  // X
        Action{{1, PauliLetter::X}, {1, PauliLetter::Z}},  // Y
        Action{{1, PauliLetter::X}, {0, PauliLetter::Z}},  // Z
    };

    const Matrix mat_identity{1, 0, 0, 1};
    const Matrix mat_h{s, s, s, -s};
    const Matrix mat_s{1, 0, 0, i};
    const std::array<Matrix, 4> mat_pauli = {
        mat_identity,
        Matrix{0, 1, 1, 0},    // X
        Matrix{0, -i, i, 0},   // Y
        Matrix{1, 0, 0, -1},   // Z
    };

    // The six rotation words: "", "H", "S", "HS", "SH", "HSH".
    std::array<Action, 6> act_word;
    std::array<Matrix, 6> mat_word;
    act_word[0] = act_identity;
    mat_word[0] = mat_identity;
    act_word[1] = act_h;
    mat_word[1] = mat_h;
    act_word[2] = act_s;
    mat_word[2] = mat_s;
    act_word[3] = compose_actions(act_h, act_s);
    mat_word[3] = matmul(mat_h, mat_s);
    act_word[4] = compose_actions(act_s, act_h);
    mat_word[4] = matmul(mat_s, mat_h);
    act_word[5] = compose_actions(act_h, compose_actions(act_s, act_h));
    mat_word[5] = matmul(mat_h, matmul(mat_s, mat_h));

    std::array<Action, kNumGates> actions;
    std::map<uint8_t, uint8_t> id_by_key;
    for (uint8_t k = 0; k < 6; k++) {
        for (uint8_t p = 0; p < 4; p++) {
            const uint8_t id = static_cast<uint8_t>(4 * k + p);
            const Action act = compose_actions(act_pauli[p], act_word[k]);
            actions[id] = act;
            if (!id_by_key.emplace(action_key(act), id).second) {
                throw std::logic_error("duplicate Clifford action in canonical table");
            }

            Element& e = elements_[id];
            e.images[static_cast<uint8_t>(PauliLetter::I)] = SignedLetter{0, PauliLetter::I};
            e.images[static_cast<uint8_t>(PauliLetter::X)] = act.x;
            e.images[static_cast<uint8_t>(PauliLetter::Z)] = act.z;
            e.images[static_cast<uint8_t>(PauliLetter::Y)] = image_of_y(act);
            e.matrix = matmul(mat_pauli[p], mat_word[k]);
            e.z_basis_rotation = (act.z == SignedLetter{0, PauliLetter::Z});
        }
    }

    for (uint8_t a = 0; a < kNumGates; a++) {
        for (uint8_t b = 0; b < kNumGates; b++) {
            const Action composed = compose_actions(actions[a], actions[b]);
            const auto it = id_by_key.find(action_key(composed));
            if (it == id_by_key.end()) {
                throw std::logic_error("Clifford composition left the canonical table");
            }
            compose_[a][b] = it->second;
            if (it->second == kIdentityId) {
                elements_[a].inverse = b;
            }
        }
    }
}

void CliffordTable::check_gate(uint8_t g) {
    if (g >= kNumGates) {
        throw std::out_of_range("Clifford gate id out of range");
    }
}

uint8_t CliffordTable::compose(uint8_t a, uint8_t b) const {
    check_gate(a);
    check_gate(b);
    return compose_[a][b];
}

uint8_t CliffordTable::inverse(uint8_t g) const {
    check_gate(g);
    return elements_[g].inverse;
}

SignedLetter CliffordTable::image(uint8_t g, PauliLetter p) const {
    check_gate(g);
    return elements_[g].images[static_cast<uint8_t>(p)];
}

PauliLetter CliffordTable::image_letter(uint8_t g, PauliLetter p) const {
    return image(g, p).letter;
}

bool CliffordTable::is_z_basis_rotation(uint8_t g) const {
    check_gate(g);
    return elements_[g].z_basis_rotation;
}

const std::array<std::complex<double>, 4>& CliffordTable::unitary(uint8_t g) const {
    check_gate(g);
    return elements_[g].matrix;
}

std::string CliffordTable::word(uint8_t g) const {
    check_gate(g);
    static constexpr const char* kPauliNames[4] = {"I", "X", "Y", "Z"};
    static constexpr const char* kWordNames[6] = {"", "H", "S", "HS", "SH", "HSH"};
    std::string result = kPauliNames[g % 4];
    const char* rot = kWordNames[g / 4];
    if (rot[0] != '\0') {
        result += ".";
        result += rot;
    }
    return result;
}

}  // namespace mrb
