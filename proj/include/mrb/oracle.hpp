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

#ifndef MRB_ORACLE_HPP
#define MRB_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mrb/channel.hpp"
#include "mrb/circuit.hpp"
#include "mrb/error_model.hpp"
#include "mrb/frame_sim.hpp"
#include "mrb/layer.hpp"

namespace mrb {

/// Thrown by dense_statevector_run when the final state is not a single
/// computational basis state (which a valid mirror circuit can never reach).
struct NonBasisState : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact probability vector over all 4^n Paulis (identity included) on a few
/// qubits. Pauli index: (z_mask << n) | x_mask, so index 0 is the identity.
/// This is the brute-force reference the fast sparse/sampled paths are
/// checked against; the size cap is a hard error, never a truncation.
class DensePauliDistribution {
  public:
    static constexpr uint32_t kMaxQubits = 3;

    DensePauliDistribution() = default;

    /// Point mass on the identity.
    explicit DensePauliDistribution(uint32_t num_qubits);

    static DensePauliDistribution from_channel(const StochasticPauliChannel& channel);
    static DensePauliDistribution from_placement(uint32_t num_qubits, const PlacementError& error);

    uint32_t num_qubits() const {
        return n_;
    }
    size_t size() const {
        return probs_.size();
    }
    double at(size_t index) const {
        return probs_.at(index);
    }
    void add(size_t index, double probability) {
        probs_.at(index) += probability;
    }
    const std::vector<double>& probabilities() const {
        return probs_;
    }

    double identity_probability() const {
        return probs_.at(0);
    }
    /// Process infidelity: total probability of any non-identity Pauli.
    double error_probability() const;
    double polarization() const;

    size_t index_of(const PauliString& p) const;
    PauliString pauli_at(size_t index) const;

    /// Throws std::invalid_argument when entries are negative beyond 1e-12 or
    /// the total strays from 1 by more than 1e-9.
    void validate() const;

  private:
    uint32_t n_ = 0;
    std::vector<double> probs_;
};

/// Exact composition of two stochastic Pauli channels: the Pauli-group
/// convolution out[P] = sum_Q a[Q] * b[P * Q] (phase-free, so P * Q = XOR).
DensePauliDistribution compose_dense(
    const DensePauliDistribution& a, const DensePauliDistribution& b);

/// Pushes the distribution through the layer's ideal unitary: out[U P U^t] = in[P].
DensePauliDistribution conjugate_dense(const DensePauliDistribution& dist, const Layer& layer);

/// The cancellation statistic
///     eta = sum_j (a_j - eps_A/(4^n-1)) * (b_j - eps_B/(4^n-1))
/// over the 4^n - 1 non-identity Paulis j, which obeys exactly
///     gamma(A o B) = gamma(A) * gamma(B) + [4^n/(4^n-1)] * eta.
double eta_dense(const DensePauliDistribution& a, const DensePauliDistribution& b);
double eta_sparse(const StochasticPauliChannel& a, const StochasticPauliChannel& b);

/// The prefactor 4^n/(4^n - 1) in the gamma composition identity above.
double gamma_composition_prefactor(uint32_t num_qubits);

/// Average of the 24 single-qubit-Clifford conjugates of a 1-qubit channel.
/// The result has equal X, Y, Z probabilities (each eps/3).
DensePauliDistribution twirl_1q_clifford(const DensePauliDistribution& channel);

/// Dense distribution of the layer's own gate errors (product over placements).
DensePauliDistribution dense_layer_error(const ErrorModel& model, const Layer& layer);

/// The (n+1) x (n+1) matrix M with M[j][k] = C(k, j) * 2^j / 3^k for j <= k:
/// the probability that a uniformly random weight-k Pauli error flips exactly
/// j output bits. Columns sum to 1.
struct WeightTransferMatrix {
    uint32_t n = 0;
    std::vector<std::vector<double>> m;  // m[j][k]
};

WeightTransferMatrix build_weight_transfer(uint32_t num_qubits);

/// h = M * p for a weight distribution p (p[k] = probability of a weight-k error).
std::vector<double> apply_weight_transfer(
    const WeightTransferMatrix& matrix, const std::vector<double>& weights);

/// The alternating sum sum_k (-1/2)^k h_k, which inverts M's first row:
/// recover_p0(M * p) == p[0] exactly, for every weight distribution p.
double recover_p0(const std::vector<double>& h);

/// Exact integer form of the two M identities, for all columns k <= n:
/// sum_j C(k,j) 2^j == 3^k (column-stochastic) and
/// sum_{j even} C(k,j) == sum_{j odd} C(k,j) for k >= 1 (alternating rows
/// cancel, which is why recover_p0 isolates p_0). Valid through n = 16.
bool weight_transfer_identities_exact(uint32_t num_qubits);

/// Exact statevector execution of a Clifford-only circuit on |0...0>, capped
/// at 4 qubits. Returns the measured bit string; throws NonBasisState when
/// the final state is not a basis state and std::invalid_argument on the cap.
std::string dense_statevector_run(const MirrorCircuit& circuit);

/// Index of an output bit string: bit q of the index is qubit q's bit.
size_t output_string_index(const std::string& bits);

/// Exact output distribution of the circuit under the model (gate errors and
/// readout flips included), as a 2^n vector indexed by output_string_index.
std::vector<double> exact_output_distribution(
    const MirrorCircuit& circuit, const ErrorModel& model);

/// Exact counterpart of epsilon_layer: the Pauli-dressed (or bare) layer
/// infidelity by dense composition, averaging over all 4^n Pauli layers when
/// include_pauli_layer is set.
double exact_epsilon_layer(
    const Layer& layer, const ErrorModel& model, bool include_pauli_layer);

/// Pearson chi-square goodness-of-fit p-value of observed counts against an
/// expected distribution (indexed by output_string_index). Cells with
/// expected count < 5 are pooled. Returns 1 when nothing is left to compare
/// and 0 when an expected-impossible outcome was observed.
double chi_square_p_value(const ShotResult& observed, const std::vector<double>& expected_probs);

/// One named executable check of a theory identity.
struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs the full oracle suite (M identities, gamma composition, twirling,
/// mirror identity, frame vs tableau vs dense agreement, epsilon oracle).
/// Deterministic in `seed`.
std::vector<ValidationCheck> run_validation_suite(uint64_t seed);

bool all_passed(const std::vector<ValidationCheck>& checks);

}  // namespace mrb

#endif
