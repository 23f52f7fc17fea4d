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

#include "mrb/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace mrb {

namespace {

constexpr uint32_t kBitsPerWord = 64;

uint32_t words_for(uint32_t num_qubits) {
    return (num_qubits + kBitsPerWord - 1) / kBitsPerWord;
}

}  // namespace

char pauli_letter_char(PauliLetter p) {
    switch (p) {
        case PauliLetter::I:
            return 'I';
        case PauliLetter::X:
            return 'X';
        case PauliLetter::Z:
            return 'Z';
        case PauliLetter::Y:
            return 'Y';
    }
    throw std::logic_error("invalid PauliLetter value");
}

PauliLetter pauli_letter_from_char(char c) {
    switch (c) {
        case 'I':
            return PauliLetter::I;
        case 'X':
            return PauliLetter::X;
        case 'Z':
            return PauliLetter::Z;
        case 'Y':
            return PauliLetter::Y;
        default:
            throw std::invalid_argument(std::string("unknown Pauli letter '") + c + "'");
    }
}

PauliString::PauliString(uint32_t num_qubits)
    : n_(num_qubits), x_(words_for(num_qubits), 0), z_(words_for(num_qubits), 0) {
}

PauliString PauliString::from_label(const std::string& label) {
    if (label.empty()) {
        throw std::invalid_argument("Pauli label must not be empty");
    }
    PauliString result(static_cast<uint32_t>(label.size()));
    for (uint32_t q = 0; q < label.size(); q++) {
        result.set(q, pauli_letter_from_char(label[q]));
    }
    return result;
}

PauliString PauliString::single(uint32_t num_qubits, uint32_t qubit, PauliLetter p) {
    PauliString result(num_qubits);
    result.set(qubit, p);
    return result;
}

bool PauliString::is_identity() const {
    for (uint32_t w = 0; w < x_.size(); w++) {
        if (x_[w] | z_[w]) {
            return false;
        }
    }
    return true;
}

uint32_t PauliString::weight() const {
    uint32_t total = 0;
    for (uint32_t w = 0; w < x_.size(); w++) {
        total += static_cast<uint32_t>(std::popcount(x_[w] | z_[w]));
    }
    return total;
}

PauliLetter PauliString::at(uint32_t qubit) const {
    if (qubit >= n_) {
        throw std::out_of_range("Pauli qubit index out of range");
    }
    const uint32_t w = qubit / kBitsPerWord;
    const uint32_t b = qubit % kBitsPerWord;
    const uint8_t x = static_cast<uint8_t>((x_[w] >> b) & 1);
    const uint8_t z = static_cast<uint8_t>((z_[w] >> b) & 1);
    return static_cast<PauliLetter>(x | (z << 1));
}

void PauliString::set(uint32_t qubit, PauliLetter p) {
    if (qubit >= n_) {
        throw std::out_of_range("Pauli qubit index out of range");
    }
    const uint32_t w = qubit / kBitsPerWord;
    const uint64_t mask = uint64_t{1} << (qubit % kBitsPerWord);
    const auto code = static_cast<uint8_t>(p);
    x_[w] = (x_[w] & ~mask) | ((code & 1) ? mask : 0);
    z_[w] = (z_[w] & ~mask) | ((code & 2) ? mask : 0);
}

bool PauliString::x_bit(uint32_t qubit) const {
    if (qubit >= n_) {
        throw std::out_of_range("Pauli qubit index out of range");
    }
    return (x_[qubit / kBitsPerWord] >> (qubit % kBitsPerWord)) & 1;
}

bool PauliString::z_bit(uint32_t qubit) const {
    if (qubit >= n_) {
        throw std::out_of_range("Pauli qubit index out of range");
    }
    return (z_[qubit / kBitsPerWord] >> (qubit % kBitsPerWord)) & 1;
}

void PauliString::xor_with(const PauliString& other) {
    if (other.n_ != n_) {
        throw std::invalid_argument("cannot compose Pauli strings of different sizes");
    }
    for (uint32_t w = 0; w < x_.size(); w++) {
        x_[w] ^= other.x_[w];
        z_[w] ^= other.z_[w];
    }
}

bool PauliString::commutes_with(const PauliString& other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("cannot compare Pauli strings of different sizes");
    }
    uint32_t acc = 0;
    for (uint32_t w = 0; w < x_.size(); w++) {
        acc += static_cast<uint32_t>(std::popcount(x_[w] & other.z_[w]));
        acc += static_cast<uint32_t>(std::popcount(z_[w] & other.x_[w]));
    }
    return (acc & 1) == 0;
}

std::string PauliString::label() const {
    std::string result(n_, 'I');
    for (uint32_t q = 0; q < n_; q++) {
        result[q] = pauli_letter_char(at(q));
    }
    return result;
}

PauliString compose_pauli(const PauliString& a, const PauliString& b) {
    PauliString result = a;
    result.xor_with(b);
    return result;
}

}  // namespace mrb
