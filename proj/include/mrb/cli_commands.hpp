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

#ifndef MRB_CLI_COMMANDS_HPP
#define MRB_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mrb/campaign.hpp"

namespace mrb::cli {

/// Exit codes shared by every subcommand.
///   0  success
///   1  usage error: bad flags, bad config, malformed or inconsistent inputs
///   2  the validate suite reported at least one failing check
///   3  runtime failure: missing files, I/O errors, simulation or fit failures
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidationFailure = 2;
inline constexpr int kExitRuntime = 3;

/// "1234" (decimal) or "0x4d2" (hex). Throws std::invalid_argument.
uint64_t parse_seed(const std::string& text);

/// "0,1,4,5" -> {0, 1, 4, 5}. Throws std::invalid_argument.
std::vector<uint32_t> parse_uint_list(const std::string& text);

/// Device specs: "lattice:RxC", "path:N" or "edges:0-1,1-2[;sites=N]".
ConnectivityGraph parse_device(const std::string& text);

/// Options of `mrb design`. Field names match the long flags 1:1; a JSON
/// config file with the same keys overrides flag values.
struct DesignOptions {
    std::string device = "lattice:4x4";
    std::string qubits;  // comma list; empty = all device sites
    std::string sampler = "edge_grab";
    double xi = 0.125;
    std::string depths = "0,2,4,8,16,32,64";
    uint32_t circuits = 30;
    uint32_t shots = 100;
    std::string seed;  // required
    std::string out;   // required: output directory
    std::string config;
};

/// Options of `mrb simulate`. Simulation seeds derive from the design's
/// master seed, so the command takes no seed of its own.
struct SimulateOptions {
    std::string design;        // required: design.json path
    std::string circuits_dir;  // default: <design dir>/circuits
    std::string model = "noiseless";
    std::string model_seed;    // required when model == "random"
    std::string model_out;     // optional: write the realized model JSON
    uint32_t shots = 0;        // 0 = use the design's shot count
    std::string out;           // required: results.json path
    uint32_t jobs = 1;
    std::string config;
};

struct AnalyzeOptions {
    std::string results;  // required
    uint32_t bootstrap = 100;
    std::string seed;  // required (bootstrap resampling)
    double epsilon = 0.0;  // > 0 enables the comparison
    double epsilon_stderr = 0.0;
    std::string epsilon_file;  // output of `mrb epsilon`; exclusive with --epsilon
    std::string out;  // required: report.json path
    std::string csv;  // optional: per-depth means CSV
    std::string config;
};

struct EpsilonOptions {
    std::string design;  // required
    std::string model = "model1";
    std::string model_seed;
    uint64_t layers = 120;
    uint64_t samples = 4000;
    std::string seed;  // required
    std::string out;   // optional: estimate JSON
    std::string config;
};

struct ValidateOptions {
    std::string seed;  // required
};

struct SweepCmdOptions {
    std::string preset;  // required: "random-models" or "reference-models"
    std::string seed;    // required
    std::string out;     // required: output directory
    uint32_t jobs = 1;
    uint32_t bootstrap = 100;
    uint64_t epsilon_layers = 120;
    uint64_t epsilon_samples = 4000;
    std::string config;
};

/// Estimate JSON (schema_version 1): value, std_error, layer_samples,
/// per_layer_samples.
std::string epsilon_to_json(const EpsilonOmegaEstimate& estimate);
EpsilonOmegaEstimate epsilon_from_json(const std::string& json_text);

/// The subcommands. Each returns an exit code and writes human-readable
/// output to `out` and progress/diagnostics to `err`; exceptions escaping
/// these functions are mapped to exit codes by run_cli.
int cmd_design(const DesignOptions& options, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err);
int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err);
int cmd_epsilon(const EpsilonOptions& options, std::ostream& out, std::ostream& err);
int cmd_validate(const ValidateOptions& options, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepCmdOptions& options, std::ostream& out, std::ostream& err);

/// Full argv-level entry point (used by the mrb binary and by tests):
/// parses flags, applies config overrides, dispatches, maps exceptions.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mrb::cli

#endif
