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

#ifndef MRB_CAMPAIGN_HPP
#define MRB_CAMPAIGN_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mrb/analysis.hpp"
#include "mrb/circuit.hpp"
#include "mrb/epsilon.hpp"
#include "mrb/error_model.hpp"
#include "mrb/results_io.hpp"

namespace mrb {

/// Where the error model of a run comes from. Parsed from strings like
/// "noiseless", "model1", "model2", "random" (with a separate model seed) or
/// "file:PATH".
struct ModelSource {
    enum class Kind : uint8_t { Noiseless, Random, Model1, Model2, File };

    Kind kind = Kind::Noiseless;
    uint64_t model_seed = 0;       // Random only
    RandomModelSpec random_spec;   // Random only
    CrosstalkSpec crosstalk;       // Model1 / Model2
    std::filesystem::path file;    // File only
};

/// Parses the CLI spelling of a model source. Throws std::invalid_argument
/// on unknown names.
ModelSource model_source_from_string(const std::string& text);

std::string model_source_name(const ModelSource& source);

/// Materializes the error model for a design. Random models are drawn over
/// the benchmark graph from Rng(derive_seed(model_seed, ModelSampling, 0));
/// models 1 and 2 are built over the design's device and qubit subset.
ErrorModel realize_model(const ModelSource& source, const MrbDesign& design);

/// Simulation seed of circuit (depth_index, circuit_index):
/// derive_seed(design.master_seed, ShotSimulation, depth_index << 32 | circuit_index).
uint64_t circuit_sim_seed(const MrbDesign& design, uint32_t depth_index, uint32_t circuit_index);

/// Samples every circuit of the design, depth-major:
/// result[depth_index * K + circuit_index].
std::vector<MirrorCircuit> sample_design_circuits(const MrbDesign& design);

/// Simulates pre-sampled circuits (laid out depth-major as above) under the
/// model. Record order and content are independent of `jobs`.
ResultsFile simulate_circuits(
    const MrbDesign& design,
    const std::vector<MirrorCircuit>& circuits,
    const ErrorModel& model,
    uint32_t jobs = 1);

/// sample_design_circuits + simulate_circuits.
ResultsFile simulate_design(const MrbDesign& design, const ErrorModel& model, uint32_t jobs = 1);

/// Polarizations, bootstrap decay fit, per-depth means. The bootstrap stream
/// is Rng(derive_seed(bootstrap_seed, Bootstrap, 0)).
AnalysisReport analyze_results(
    const ResultsFile& results,
    uint32_t num_qubits,
    uint32_t bootstrap_replicates,
    uint64_t bootstrap_seed);

/// Fills in the epsilon comparison of a report: epsilon, its standard error
/// and delta_rel = (r - epsilon) / epsilon. Throws std::invalid_argument when
/// epsilon.value <= 0.
void attach_epsilon(AnalysisReport& report, const EpsilonOmegaEstimate& epsilon);

struct CampaignOptions {
    uint32_t bootstrap_replicates = 100;
    bool compute_epsilon = true;
    uint64_t epsilon_layer_samples = 120;
    uint64_t epsilon_samples_per_layer = 4000;
    uint32_t jobs = 1;
};

struct CampaignResult {
    ResultsFile results;
    AnalysisReport report;
};

/// One full benchmark run: simulate every circuit, aggregate, fit, and (when
/// requested) estimate epsilon_Omega and the relative error. Deterministic in
/// (design, model, options.bootstrap_replicates, epsilon sample counts): the
/// bootstrap and epsilon streams derive from design.master_seed.
CampaignResult run_campaign(
    const MrbDesign& design, const ErrorModel& model, const CampaignOptions& options);

/// The desk-scale reference sweep: a 4 x 4 lattice with benchmark registers
/// of n = 1, 2, 4, 8 and 16 qubits (connected subsets, ascending site order),
/// edge-grab sampling at density xi = 1/8 and depths 0, 2, 4, 8, 16, 32, 64.
extern const uint32_t kSweepWidths[5];
std::vector<uint32_t> sweep_qubit_subset(uint32_t num_qubits);
std::vector<uint32_t> sweep_depths();

/// The design of one sweep run. K = circuits per depth, N = shots.
MrbDesign make_sweep_design(
    uint32_t num_qubits, uint32_t circuits_per_depth, uint32_t shots_per_circuit, uint64_t seed);

/// One analyzed run of a sweep.
struct SweepRun {
    uint32_t n = 0;
    std::string model_label;  // "random00".."random09", "model1", "model2"
    uint64_t design_seed = 0;
    uint64_t model_seed = 0;
    AnalysisReport report;
};

struct SweepOptions {
    uint32_t jobs = 1;
    uint32_t bootstrap_replicates = 100;
    uint64_t epsilon_layer_samples = 120;
    uint64_t epsilon_samples_per_layer = 4000;
    std::ostream* progress = nullptr;  // one line per finished run when set
};

/// Sweep A: for every register width, ten random gate-dependent models
/// (K = 30 circuits per depth, N = 100 shots). 50 runs total.
std::vector<SweepRun> run_random_model_sweep(uint64_t master_seed, const SweepOptions& options);

/// Sweep B: the two reference models on every register width
/// (K = 40 circuits per depth, N = 1000 shots). 10 runs total.
std::vector<SweepRun> run_reference_model_sweep(uint64_t master_seed, const SweepOptions& options);

/// CSV summary, one row per run:
/// "n,model,amplitude,decay,r,sigma_r,epsilon,epsilon_stderr,delta_rel".
std::string sweep_to_csv(const std::vector<SweepRun>& runs);

/// JSON summary (schema_version 1) with the full report of every run.
std::string sweep_to_json(const std::vector<SweepRun>& runs);
std::vector<SweepRun> sweep_from_json(const std::string& json_text);

void write_sweep_file(const std::filesystem::path& path, const std::vector<SweepRun>& runs);
std::vector<SweepRun> read_sweep_file(const std::filesystem::path& path);

}  // namespace mrb

#endif
