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

#ifndef MRB_TABLEAU_HPP
#define MRB_TABLEAU_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mrb/layer.hpp"
#include "mrb/pauli.hpp"

namespace mrb {

/// Thrown when a measurement outcome would be random, i.e. the state is not a
/// computational basis state. Mirror circuits always end in a basis state, so
/// hitting this indicates a non-mirror circuit (or a bug upstream).
struct NonDeterministicOutcome : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Stabilizer state in the destabilizer/stabilizer tableau representation
/// (rows 0..n-1 destabilizers, rows n..2n-1 stabilizers, one sign bit per
/// row), with x/z bits packed 64 per word. Starts in |0...0>.
class Tableau {
  public:
    explicit Tableau(uint32_t num_qubits);

    uint32_t num_qubits() const {
        return n_;
    }

    void apply_one_qubit(uint8_t gate, uint32_t qubit);
    void apply_cnot(uint32_t control, uint32_t target);
    void apply_layer(const Layer& layer);

    /// Left-multiplies the state by the Pauli operator `p` (sign-free input;
    /// only stabilizer sign bits change).
    void apply_pauli(const PauliString& p);

    /// Deterministic readout of every qubit in the computational basis.
    /// Throws NonDeterministicOutcome if any outcome would be random.
    std::string measure_all() const;

  private:
    uint32_t n_ = 0;
    uint32_t words_ = 0;
    std::vector<uint64_t> x_;     // 2n rows, words_ each
    std::vector<uint64_t> z_;
    std::vector<uint8_t> sign_;   // 2n rows; (-1)^sign

    bool bit(const std::vector<uint64_t>& v, uint32_t row, uint32_t q) const {
        return (v[static_cast<size_t>(row) * words_ + q / 64] >> (q % 64)) & 1;
    }
    void flip_bit(std::vector<uint64_t>& v, uint32_t row, uint32_t q) {
        v[static_cast<size_t>(row) * words_ + q / 64] ^= uint64_t{1} << (q % 64);
    }
};

/// Runs `layers` (optionally interleaving `errors[i]` after layer i) from
/// |0...0> and returns the deterministic measurement string. `errors` must be
/// empty or have one Pauli per layer.
std::string tableau_run(
    uint32_t num_qubits,
    std::span<const Layer> layers,
    std::span<const PauliString> errors = {});

}  // namespace mrb

#endif
