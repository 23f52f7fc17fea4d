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

#ifndef MRB_CHANNEL_HPP
#define MRB_CHANNEL_HPP

#include <cstdint>
#include <vector>

#include "mrb/pauli.hpp"
#include "mrb/rng.hpp"

namespace mrb {

struct ChannelEntry {
    PauliString pauli;
    double probability = 0.0;

    bool operator==(const ChannelEntry& other) const = default;
};

/// A stochastic Pauli channel: with probability p_P the Pauli P is applied,
/// with the remaining probability nothing happens. Only non-identity Paulis
/// are stored; the identity probability is implicit.
class StochasticPauliChannel {
  public:
    StochasticPauliChannel() = default;

    /// The noiseless channel on `num_qubits` qubits.
    explicit StochasticPauliChannel(uint32_t num_qubits) : n_(num_qubits) {
    }

    /// Throws std::invalid_argument when an entry is the identity, has a
    /// negative probability, duplicates another entry, acts on a different
    /// qubit count, or when the probabilities sum above 1.
    static StochasticPauliChannel from_entries(
        uint32_t num_qubits, std::vector<ChannelEntry> entries);

    /// Uniform stochastic Pauli noise: total probability `epsilon` spread
    /// evenly over all 4^n - 1 non-identity Paulis. Capped at n <= 8 since
    /// the dense entry list grows as 4^n.
    static StochasticPauliChannel depolarizing(uint32_t num_qubits, double epsilon);

    uint32_t num_qubits() const {
        return n_;
    }

    const std::vector<ChannelEntry>& entries() const {
        return entries_;
    }

    /// Total non-identity probability; for a stochastic Pauli channel this is
    /// the process infidelity epsilon.
    double error_probability() const {
        return total_;
    }

    /// Polarization gamma = 1 - 4^n / (4^n - 1) * epsilon.
    double polarization() const;

    /// Draws one error from the channel and multiplies it into `frame`
    /// (consumes exactly one uniform variate).
    void sample_into(PauliString& frame, Rng& rng) const;

    bool operator==(const StochasticPauliChannel& other) const = default;

  private:
    uint32_t n_ = 0;
    std::vector<ChannelEntry> entries_;
    double total_ = 0.0;
};

/// The error attached to one gate placement: a product of independent
/// stochastic Pauli channels, applied in order. Keeping composite errors in
/// factored form preserves their exact joint distribution (expanding the
/// product would square or worse the entry count).
class PlacementError {
  public:
    PlacementError() = default;  // noiseless

    explicit PlacementError(std::vector<StochasticPauliChannel> factors);

    static PlacementError single(StochasticPauliChannel channel);

    const std::vector<StochasticPauliChannel>& factors() const {
        return factors_;
    }

    bool is_noiseless() const {
        return factors_.empty();
    }

    /// Draws from every factor in order (consumes one variate per factor).
    void sample_into(PauliString& frame, Rng& rng) const;

    bool operator==(const PlacementError& other) const = default;

  private:
    std::vector<StochasticPauliChannel> factors_;
};

/// Polarization of a process infidelity: gamma = 1 - 4^n/(4^n - 1) * epsilon.
double polarization_from_infidelity(uint32_t num_qubits, double epsilon);

/// Inverse of polarization_from_infidelity.
double infidelity_from_polarization(uint32_t num_qubits, double gamma);

}  // namespace mrb

#endif
