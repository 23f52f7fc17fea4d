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

#ifndef MRB_ANALYSIS_HPP
#define MRB_ANALYSIS_HPP

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "mrb/frame_sim.hpp"
#include "mrb/results_io.hpp"
#include "mrb/rng.hpp"

namespace mrb {

struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Effective polarization of one circuit's Hamming-distance histogram:
///
///     S = f * sum_k (-1/2)^k h_k - (f - 1),   f = 4^n / (4^n - 1)
///
/// evaluated via 4^{-n} so it stays exact for large n. S = 1 when every shot
/// hits the target, S = 0 in expectation for uniformly random outcomes.
double effective_polarization(const HammingHistogram& histogram);

/// One circuit's polarization, tagged with its depth.
struct PolarizationPoint {
    std::string id;
    uint32_t depth = 0;
    double s = 0.0;
};

/// Per-depth aggregate over the K circuits at that depth.
struct DepthMean {
    uint32_t depth = 0;
    double s_mean = 0.0;
    double s_std_error = 0.0;  // sd over circuits / sqrt(K); 0 when K == 1
    uint32_t k = 0;

    bool operator==(const DepthMean& other) const = default;
};

std::vector<PolarizationPoint> polarization_points(const ResultsFile& results);
std::vector<DepthMean> mean_polarizations(const std::vector<PolarizationPoint>& points);

/// Result of fitting S_d = A * p^d with A in [0, 1.05], p in [0, 1] and the
/// asymptote fixed at zero.
struct DecayFit {
    double amplitude = 0.0;  // A
    double decay = 0.0;      // p
    double r = 0.0;          // (1 - 4^{-n}) * (1 - p), the per-layer error rate
    double sigma_amplitude = 0.0;
    double sigma_decay = 0.0;
    double sigma_r = 0.0;
    double residual_rms = 0.0;
    bool weighted = false;
    uint32_t bootstrap_replicates = 0;
    uint32_t degenerate_resamples = 0;
};

/// Weighted (1/se^2) constrained least squares, falling back to unweighted
/// when any depth has K < 5 circuits or a zero standard error. The amplitude
/// is profiled out in closed form; the decay is located by a dense grid plus
/// local refinement, so exact data is recovered to ~1e-10.
///
/// Throws FitError when there are fewer than 2 distinct depths or when every
/// mean is indistinguishable from zero (the decay is unidentifiable).
DecayFit fit_decay(std::vector<DepthMean> means, uint32_t num_qubits);

/// fit_decay plus circuit-resampling bootstrap error bars: per replicate the
/// K circuits of each depth are resampled with replacement and refit.
/// Replicates whose resample is degenerate are skipped and counted. Requires
/// replicates >= 100; throws FitError when more than half the replicates
/// degenerate.
DecayFit fit_decay_bootstrap(
    const std::vector<PolarizationPoint>& points,
    uint32_t num_qubits,
    uint32_t replicates,
    Rng& rng);

/// (r - epsilon) / epsilon. Throws std::invalid_argument when epsilon <= 0.
double relative_error(double r, double epsilon);

/// Everything the analyze step reports for one benchmark run.
struct AnalysisReport {
    uint32_t n = 0;
    std::vector<DepthMean> means;
    DecayFit fit;
    bool has_epsilon = false;
    double epsilon = 0.0;
    double epsilon_std_error = 0.0;
    double delta_rel = 0.0;  // meaningful only when has_epsilon
};

std::string report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const std::string& json_text);

/// CSV of the per-depth means: header "d,s_mean,s_stderr,k".
std::string means_to_csv(const std::vector<DepthMean>& means);

void write_report_file(const std::filesystem::path& path, const AnalysisReport& report);
AnalysisReport read_report_file(const std::filesystem::path& path);
void write_csv_file(const std::filesystem::path& path, const std::vector<DepthMean>& means);

}  // namespace mrb

#endif
