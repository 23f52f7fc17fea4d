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

#include "mrb/channel.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace mrb {

namespace {

/// 4^{-n}, computed in floating point without overflow for any n.
double four_to_minus(uint32_t num_qubits) {
    return std::exp2(-2.0 * static_cast<double>(num_qubits));
}

}  // namespace

double polarization_from_infidelity(uint32_t num_qubits, double epsilon) {
    // gamma = 1 - 4^n/(4^n - 1) * eps, evaluated via 4^{-n} for stability.
    return 1.0 - epsilon / (1.0 - four_to_minus(num_qubits));
}

double infidelity_from_polarization(uint32_t num_qubits, double gamma) {
    return (1.0 - gamma) * (1.0 - four_to_minus(num_qubits));
}

StochasticPauliChannel StochasticPauliChannel::from_entries(
    uint32_t num_qubits, std::vector<ChannelEntry> entries) {
    StochasticPauliChannel channel(num_qubits);
    std::set<std::string> seen;
    double total = 0.0;
    for (const ChannelEntry& entry : entries) {
        if (entry.pauli.num_qubits() != num_qubits) {
            throw std::invalid_argument("channel entry has the wrong qubit count");
        }
        if (entry.pauli.is_identity()) {
            throw std::invalid_argument(
                "channel entries must be non-identity (identity probability is implicit)");
        }
        if (!(entry.probability >= 0.0)) {
            throw std::invalid_argument("channel probabilities must be non-negative");
        }
        if (!seen.insert(entry.pauli.label()).second) {
            throw std::invalid_argument(
                "duplicate channel entry for Pauli " + entry.pauli.label());
        }
        total += entry.probability;
    }
    if (total > 1.0 + 1e-12) {
        throw std::invalid_argument("channel probabilities sum above 1");
    }
    channel.entries_ = std::move(entries);
    channel.total_ = total;
    return channel;
}

StochasticPauliChannel StochasticPauliChannel::depolarizing(uint32_t num_qubits, double epsilon) {
    if (num_qubits == 0 || num_qubits > 8) {
        throw std::invalid_argument("depolarizing channel supports 1..8 qubits");
    }
    if (!(epsilon >= 0.0) || epsilon > 1.0) {
        throw std::invalid_argument("depolarizing infidelity must lie in [0, 1]");
    }
    const uint64_t count = (uint64_t{1} << (2 * num_qubits)) - 1;
    std::vector<ChannelEntry> entries;
    entries.reserve(count);
    const double p = epsilon / static_cast<double>(count);
    for (uint64_t code = 1; code <= count; code++) {
        PauliString pauli(num_qubits);
        for (uint32_t q = 0; q < num_qubits; q++) {
            pauli.set(q, static_cast<PauliLetter>((code >> (2 * q)) & 3));
        }
        entries.push_back({std::move(pauli), p});
    }
    return from_entries(num_qubits, std::move(entries));
}

double StochasticPauliChannel::polarization() const {
    return polarization_from_infidelity(n_, total_);
}

void StochasticPauliChannel::sample_into(PauliString& frame, Rng& rng) const {
    const double u = rng.real01();
    double cumulative = 0.0;
    for (const ChannelEntry& entry : entries_) {
        cumulative += entry.probability;
        if (u < cumulative) {
            frame.xor_with(entry.pauli);
            return;
        }
    }
    // u >= total: identity, nothing to apply.
}

PlacementError::PlacementError(std::vector<StochasticPauliChannel> factors)
    : factors_(std::move(factors)) {
    for (size_t i = 1; i < factors_.size(); i++) {
        if (factors_[i].num_qubits() != factors_[0].num_qubits()) {
            throw std::invalid_argument("placement error factors must share a qubit count");
        }
    }
}

PlacementError PlacementError::single(StochasticPauliChannel channel) {
    std::vector<StochasticPauliChannel> factors;
    factors.push_back(std::move(channel));
    return PlacementError(std::move(factors));
}

void PlacementError::sample_into(PauliString& frame, Rng& rng) const {
    for (const StochasticPauliChannel& factor : factors_) {
        factor.sample_into(frame, rng);
    }
}

}  // namespace mrb
