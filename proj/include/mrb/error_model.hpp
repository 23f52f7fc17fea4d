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

#ifndef MRB_ERROR_MODEL_HPP
#define MRB_ERROR_MODEL_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "mrb/channel.hpp"
#include "mrb/circuit.hpp"
#include "mrb/graph.hpp"
#include "mrb/layer.hpp"
#include "mrb/rng.hpp"

namespace mrb {

/// Gate-dependent stochastic Pauli noise on a fixed register of n (logical)
/// qubits: one PlacementError per (qubit, one-qubit gate id), one per
/// directed CNOT, plus classical readout flip probabilities.
class ErrorModel {
  public:
    ErrorModel() = default;

    explicit ErrorModel(uint32_t num_qubits, bool allow_missing_cnots = false);

    /// The trivial model: nothing ever goes wrong. CNOTs on any edge are
    /// implicitly noiseless.
    static ErrorModel noiseless(uint32_t num_qubits) {
        return ErrorModel(num_qubits, /*allow_missing_cnots=*/true);
    }

    uint32_t num_qubits() const {
        return n_;
    }

    const std::vector<double>& readout() const {
        return readout_;
    }
    void set_readout(uint32_t qubit, double probability);

    const PlacementError& one_qubit(uint32_t qubit, uint8_t gate) const;
    void set_one_qubit(uint32_t qubit, uint8_t gate, PlacementError error);

    /// Throws std::invalid_argument when the directed CNOT has no entry and
    /// the model does not allow implicit noiseless CNOTs.
    const PlacementError& cnot(uint32_t control, uint32_t target) const;
    void set_cnot(uint32_t control, uint32_t target, PlacementError error);
    bool has_cnot(uint32_t control, uint32_t target) const;

    const std::map<std::pair<uint32_t, uint32_t>, PlacementError>& cnot_errors() const {
        return cnot_;
    }

    bool allow_missing_cnots() const {
        return allow_missing_cnots_;
    }

    /// True when every placement in the layer has a defined error.
    bool covers(const Layer& layer) const;

    /// Throws std::invalid_argument naming the first uncovered placement.
    void require_covers(const MirrorCircuit& circuit) const;

  private:
    uint32_t n_ = 0;
    bool allow_missing_cnots_ = false;
    std::vector<std::array<PlacementError, 24>> one_qubit_;
    std::map<std::pair<uint32_t, uint32_t>, PlacementError> cnot_;
    std::vector<double> readout_;

    static const PlacementError kNoiselessPlacement;
};

/// Intervals for the randomized gate-dependent model family. Draw order and
/// semantics: every one-qubit gate placement draws a total infidelity
/// gamma ~ U(gamma_one_qubit) and a local fraction kappa ~ U(kappa); the local
/// share gamma * kappa is split over X/Y/Z on the acted qubit proportionally
/// to fresh U(0, 1) draws, and the neighbor share gamma * (1 - kappa) is split
/// the same way over {X, Y, Z} on every graph neighbor. sigma_z-basis
/// rotations (I, Z, S, S^dagger) and gates on isolated qubits keep only the
/// local share (total infidelity gamma * kappa). Directed CNOTs do the same
/// with gamma ~ U(gamma_two_qubit), the 15 non-identity pair Paulis as the
/// local targets, and the union of both endpoints' other neighbors as
/// spectators. Readout flip probabilities are U(readout) per qubit.
struct RandomModelSpec {
    std::array<double, 2> gamma_one_qubit{0.0, 0.002};
    std::array<double, 2> gamma_two_qubit{0.0, 0.02};
    std::array<double, 2> kappa{0.5, 1.0};
    std::array<double, 2> readout{0.0, 0.01};

    void validate() const;
};

/// Per-placement draws recorded while sampling a random model, for
/// diagnostics and distribution tests.
struct RandomModelDraw {
    enum class Kind : uint8_t { OneQubit, Cnot };
    Kind kind = Kind::OneQubit;
    uint32_t qubit = 0;    // OneQubit: acted qubit; Cnot: control
    uint32_t partner = 0;  // Cnot: target
    uint8_t gate = 0;      // OneQubit only
    double gamma = 0.0;
    double kappa = 0.0;
    bool has_neighbor_share = false;
};

struct RandomModelDiagnostics {
    std::vector<RandomModelDraw> draws;
};

/// Samples one gate-dependent random error model over the benchmark graph
/// (vertices 0..n-1). Deterministic in `rng`.
ErrorModel sample_random_model(
    const ConnectivityGraph& graph,
    const RandomModelSpec& spec,
    Rng& rng,
    RandomModelDiagnostics* diagnostics = nullptr);

/// Parameters of the two fixed reference models.
struct CrosstalkSpec {
    double one_qubit_infidelity = 0.001;
    double two_qubit_infidelity = 0.01;
    double readout_probability = 0.005;
    double crosstalk_amplitude = 0.0035;   // model 2 only
    double crosstalk_decay = 0.999;        // per unit of lattice distance
};

/// Model 1: gate-independent depolarizing noise. One-qubit gates carry
/// one-qubit depolarizing infidelity `one_qubit_infidelity`, CNOTs two-qubit
/// depolarizing `two_qubit_infidelity`, readout flips `readout_probability`.
/// CNOT entries exist for both directions of every benchmark-graph edge.
ErrorModel build_model1(
    const ConnectivityGraph& device,
    const std::vector<uint32_t>& qubits,
    const CrosstalkSpec& spec);

/// Model 2: model 1 plus CNOT crosstalk. Every CNOT additionally applies
/// one-qubit depolarizing noise with infidelity
///     delta(q) = crosstalk_amplitude * crosstalk_decay^dist(q)
/// to every other benchmarked qubit q, where dist(q) is the minimum device
/// BFS distance from q to either CNOT endpoint.
ErrorModel build_model2(
    const ConnectivityGraph& device,
    const std::vector<uint32_t>& qubits,
    const CrosstalkSpec& spec);

/// Model JSON (schema_version 1): readout vector plus the non-noiseless
/// placements, each as a list of channel factors.
std::string model_to_json(const ErrorModel& model);
ErrorModel model_from_json(const std::string& json_text);

void write_model_file(const std::filesystem::path& path, const ErrorModel& model);
ErrorModel read_model_file(const std::filesystem::path& path);

}  // namespace mrb

#endif
