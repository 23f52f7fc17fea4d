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

#include "mrb/cli_commands.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "mrb/circuit_io.hpp"
#include "mrb/oracle.hpp"
#include "mrb/rng.hpp"

namespace mrb::cli {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string read_text_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + path.string());
    }
    out << text;
    if (!out) {
        throw std::runtime_error("failed writing file: " + path.string());
    }
}

// ---------------------------------------------------------------------------
// Config files: a JSON object whose keys are the command's long flag names.
// Values given in the config override values given as flags.

ordered_json load_config(const std::string& path) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(read_text_file(path));
    } catch (const ordered_json::parse_error& e) {
        throw std::invalid_argument("config file is not valid JSON: " + std::string(e.what()));
    }
    if (!doc.is_object()) {
        throw std::invalid_argument("config file must hold a JSON object");
    }
    return doc;
}

[[noreturn]] void bad_config_value(const std::string& key, const char* expected) {
    throw std::invalid_argument("config key '" + key + "' must be " + expected);
}

std::string config_string(const ordered_json& value, const std::string& key) {
    if (!value.is_string()) {
        bad_config_value(key, "a string");
    }
    return value.get<std::string>();
}

double config_double(const ordered_json& value, const std::string& key) {
    if (!value.is_number()) {
        bad_config_value(key, "a number");
    }
    return value.get<double>();
}

uint32_t config_uint32(const ordered_json& value, const std::string& key) {
    if (!value.is_number_unsigned()) {
        bad_config_value(key, "a non-negative integer");
    }
    return value.get<uint32_t>();
}

uint64_t config_uint64(const ordered_json& value, const std::string& key) {
    if (!value.is_number_unsigned()) {
        bad_config_value(key, "a non-negative integer");
    }
    return value.get<uint64_t>();
}

/// Lists may be written as "0,2,4" or [0, 2, 4]; canonicalized to the string.
std::string config_list(const ordered_json& value, const std::string& key) {
    if (value.is_string()) {
        return value.get<std::string>();
    }
    if (value.is_array()) {
        std::string text;
        for (const auto& item : value) {
            if (!item.is_number_unsigned()) {
                bad_config_value(key, "a list of non-negative integers");
            }
            if (!text.empty()) {
                text += ',';
            }
            text += std::to_string(item.get<uint64_t>());
        }
        return text;
    }
    bad_config_value(key, "a string or a list of integers");
}

/// Seeds may be written as numbers or as strings ("0x..." allowed).
std::string config_seed(const ordered_json& value, const std::string& key) {
    if (value.is_number_unsigned()) {
        return std::to_string(value.get<uint64_t>());
    }
    if (value.is_string()) {
        return value.get<std::string>();
    }
    bad_config_value(key, "a non-negative integer or a string");
}

[[noreturn]] void unknown_config_key(const std::string& key, const char* command) {
    throw std::invalid_argument(
        "config key '" + key + "' is not an option of `mrb " + command + "`");
}

void apply_design_config(const ordered_json& cfg, DesignOptions& o) {
    for (const auto& [key, value] : cfg.items()) {
        if (key == "device") {
            o.device = config_string(value, key);
        } else if (key == "qubits") {
            o.qubits = config_list(value, key);
        } else if (key == "sampler") {
            o.sampler = config_string(value, key);
        } else if (key == "xi") {
            o.xi = config_double(value, key);
        } else if (key == "depths") {
            o.depths = config_list(value, key);
        } else if (key == "circuits") {
            o.circuits = config_uint32(value, key);
        } else if (key == "shots") {
            o.shots = config_uint32(value, key);
        } else if (key == "seed") {
            o.seed = config_seed(value, key);
        } else if (key == "out") {
            o.out = config_string(value, key);
        } else {
            unknown_config_key(key, "design");
        }
    }
}

void apply_simulate_config(const ordered_json& cfg, SimulateOptions& o) {
    for (const auto& [key, value] : cfg.items()) {
        if (key == "design") {
            o.design = config_string(value, key);
        } else if (key == "circuits-dir") {
            o.circuits_dir = config_string(value, key);
        } else if (key == "model") {
            o.model = config_string(value, key);
        } else if (key == "model-seed") {
            o.model_seed = config_seed(value, key);
        } else if (key == "model-out") {
            o.model_out = config_string(value, key);
        } else if (key == "shots") {
            o.shots = config_uint32(value, key);
        } else if (key == "out") {
            o.out = config_string(value, key);
        } else if (key == "jobs") {
            o.jobs = config_uint32(value, key);
        } else {
            unknown_config_key(key, "simulate");
        }
    }
}

void apply_analyze_config(const ordered_json& cfg, AnalyzeOptions& o) {
    for (const auto& [key, value] : cfg.items()) {
        if (key == "results") {
            o.results = config_string(value, key);
        } else if (key == "bootstrap") {
            o.bootstrap = config_uint32(value, key);
        } else if (key == "seed") {
            o.seed = config_seed(value, key);
        } else if (key == "epsilon") {
            o.epsilon = config_double(value, key);
        } else if (key == "epsilon-stderr") {
            o.epsilon_stderr = config_double(value, key);
        } else if (key == "epsilon-file") {
            o.epsilon_file = config_string(value, key);
        } else if (key == "out") {
            o.out = config_string(value, key);
        } else if (key == "csv") {
            o.csv = config_string(value, key);
        } else {
            unknown_config_key(key, "analyze");
        }
    }
}

void apply_epsilon_config(const ordered_json& cfg, EpsilonOptions& o) {
    for (const auto& [key, value] : cfg.items()) {
        if (key == "design") {
            o.design = config_string(value, key);
        } else if (key == "model") {
            o.model = config_string(value, key);
        } else if (key == "model-seed") {
            o.model_seed = config_seed(value, key);
        } else if (key == "layers") {
            o.layers = config_uint64(value, key);
        } else if (key == "samples") {
            o.samples = config_uint64(value, key);
        } else if (key == "seed") {
            o.seed = config_seed(value, key);
        } else if (key == "out") {
            o.out = config_string(value, key);
        } else {
            unknown_config_key(key, "epsilon");
        }
    }
}

void apply_sweep_config(const ordered_json& cfg, SweepCmdOptions& o) {
    for (const auto& [key, value] : cfg.items()) {
        if (key == "preset") {
            o.preset = config_string(value, key);
        } else if (key == "seed") {
            o.seed = config_seed(value, key);
        } else if (key == "out") {
            o.out = config_string(value, key);
        } else if (key == "jobs") {
            o.jobs = config_uint32(value, key);
        } else if (key == "bootstrap") {
            o.bootstrap = config_uint32(value, key);
        } else if (key == "epsilon-layers") {
            o.epsilon_layers = config_uint64(value, key);
        } else if (key == "epsilon-samples") {
            o.epsilon_samples = config_uint64(value, key);
        } else {
            unknown_config_key(key, "sweep");
        }
    }
}

// ---------------------------------------------------------------------------

void require_option(const std::string& value, const char* flag) {
    if (value.empty()) {
        throw std::invalid_argument(std::string(flag) + " is required");
    }
}

ModelSource make_model_source(const std::string& model, const std::string& model_seed) {
    ModelSource source = model_source_from_string(model);
    if (source.kind == ModelSource::Kind::Random) {
        if (model_seed.empty()) {
            throw std::invalid_argument("--model-seed is required when --model is 'random'");
        }
        source.model_seed = parse_seed(model_seed);
    } else if (!model_seed.empty()) {
        throw std::invalid_argument("--model-seed only applies to --model 'random'");
    }
    return source;
}

fs::path circuit_file_path(const fs::path& dir, uint32_t depth, uint32_t circuit_index) {
    return dir / (circuit_id(depth, circuit_index) + ".mrb");
}

std::string format_estimate(double value, double std_error) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.6g +/- %.3g", value, std_error);
    return buf;
}

}  // namespace

uint64_t parse_seed(const std::string& text) {
    const bool hex = text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X');
    const char* begin = text.c_str() + (hex ? 2 : 0);
    // strtoull tolerates signs and whitespace; a seed must be digits only.
    for (const char* c = begin; *c != '\0'; c++) {
        const bool ok = hex ? std::isxdigit(static_cast<unsigned char>(*c)) != 0
                            : std::isdigit(static_cast<unsigned char>(*c)) != 0;
        if (!ok) {
            throw std::invalid_argument(
                "seed '" + text + "' is not a decimal or 0x-hex integer");
        }
    }
    char* end = nullptr;
    errno = 0;
    const unsigned long long value = std::strtoull(begin, &end, hex ? 16 : 10);
    if (errno != 0 || end == begin || *end != '\0') {
        throw std::invalid_argument("seed '" + text + "' is not a decimal or 0x-hex integer");
    }
    return static_cast<uint64_t>(value);
}

std::vector<uint32_t> parse_uint_list(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("empty integer list");
    }
    std::vector<uint32_t> values;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        if (item.empty()) {
            throw std::invalid_argument("integer list '" + text + "' has an empty item");
        }
        char* end = nullptr;
        errno = 0;
        const unsigned long long value = std::strtoull(item.c_str(), &end, 10);
        if (errno != 0 || end == item.c_str() || *end != '\0' || value > UINT32_MAX) {
            throw std::invalid_argument("'" + item + "' is not a 32-bit unsigned integer");
        }
        values.push_back(static_cast<uint32_t>(value));
        pos = comma + 1;
    }
    return values;
}

ConnectivityGraph parse_device(const std::string& text) {
    if (text.rfind("lattice:", 0) == 0) {
        const std::string dims = text.substr(8);
        const size_t x = dims.find('x');
        if (x == std::string::npos) {
            throw std::invalid_argument("device '" + text + "': expected lattice:RxC");
        }
        const std::vector<uint32_t> rows = parse_uint_list(dims.substr(0, x));
        const std::vector<uint32_t> cols = parse_uint_list(dims.substr(x + 1));
        if (rows.size() != 1 || cols.size() != 1 || rows[0] == 0 || cols[0] == 0) {
            throw std::invalid_argument("device '" + text + "': expected lattice:RxC");
        }
        return ConnectivityGraph::square_lattice(rows[0], cols[0]);
    }
    if (text.rfind("path:", 0) == 0) {
        const std::vector<uint32_t> n = parse_uint_list(text.substr(5));
        if (n.size() != 1 || n[0] == 0) {
            throw std::invalid_argument("device '" + text + "': expected path:N");
        }
        return ConnectivityGraph::path(n[0]);
    }
    if (text.rfind("edges:", 0) == 0) {
        std::string body = text.substr(6);
        uint32_t sites = 0;
        const size_t semi = body.find(';');
        if (semi != std::string::npos) {
            const std::string tail = body.substr(semi + 1);
            if (tail.rfind("sites=", 0) != 0) {
                throw std::invalid_argument(
                    "device '" + text + "': expected edges:a-b,...[;sites=N]");
            }
            const std::vector<uint32_t> n = parse_uint_list(tail.substr(6));
            if (n.size() != 1) {
                throw std::invalid_argument("device '" + text + "': bad sites count");
            }
            sites = n[0];
            body = body.substr(0, semi);
        }
        std::vector<std::pair<uint32_t, uint32_t>> edges;
        uint32_t max_site = 0;
        size_t pos = 0;
        while (pos <= body.size()) {
            const size_t comma = std::min(body.find(',', pos), body.size());
            const std::string item = body.substr(pos, comma - pos);
            const size_t dash = item.find('-');
            if (dash == std::string::npos) {
                throw std::invalid_argument("device edge '" + item + "': expected a-b");
            }
            const std::vector<uint32_t> a = parse_uint_list(item.substr(0, dash));
            const std::vector<uint32_t> b = parse_uint_list(item.substr(dash + 1));
            if (a.size() != 1 || b.size() != 1) {
                throw std::invalid_argument("device edge '" + item + "': expected a-b");
            }
            edges.emplace_back(a[0], b[0]);
            max_site = std::max({max_site, a[0], b[0]});
            pos = comma + 1;
        }
        if (sites == 0) {
            sites = max_site + 1;
        }
        return ConnectivityGraph(sites, std::move(edges));
    }
    throw std::invalid_argument(
        "device '" + text + "': expected lattice:RxC, path:N or edges:a-b,...[;sites=N]");
}

std::string epsilon_to_json(const EpsilonOmegaEstimate& estimate) {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["value"] = estimate.value;
    doc["std_error"] = estimate.std_error;
    doc["layer_samples"] = estimate.layer_samples;
    doc["per_layer_samples"] = estimate.per_layer_samples;
    return doc.dump(2) + "\n";
}

EpsilonOmegaEstimate epsilon_from_json(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const ordered_json::parse_error& e) {
        throw std::invalid_argument(
            std::string("epsilon file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("schema_version") ||
        !doc["schema_version"].is_number_unsigned() || doc["schema_version"] != 1) {
        throw std::invalid_argument("epsilon JSON: missing or unsupported schema_version");
    }
    EpsilonOmegaEstimate estimate;
    estimate.value = doc.at("value").get<double>();
    estimate.std_error = doc.at("std_error").get<double>();
    estimate.layer_samples = doc.at("layer_samples").get<uint64_t>();
    estimate.per_layer_samples = doc.at("per_layer_samples").get<uint64_t>();
    return estimate;
}

int cmd_design(const DesignOptions& options_in, std::ostream& out, std::ostream& err) {
    (void)err;
    DesignOptions options = options_in;
    if (!options.config.empty()) {
        apply_design_config(load_config(options.config), options);
    }
    require_option(options.seed, "--seed");
    require_option(options.out, "--out");

    MrbDesign design;
    design.device = parse_device(options.device);
    if (options.qubits.empty()) {
        design.qubits.resize(design.device.num_sites());
        std::iota(design.qubits.begin(), design.qubits.end(), 0u);
    } else {
        design.qubits = parse_uint_list(options.qubits);
    }
    design.sampler.kind = sampler_kind_from_name(options.sampler);
    design.sampler.xi = options.xi;
    design.depths = parse_uint_list(options.depths);
    design.circuits_per_depth = options.circuits;
    design.shots_per_circuit = options.shots;
    design.master_seed = parse_seed(options.seed);
    design.validate();

    const fs::path dir(options.out);
    const fs::path circuits_dir = dir / "circuits";
    fs::create_directories(circuits_dir);
    write_design_file(dir / "design.json", design);
    uint64_t written = 0;
    for (uint32_t di = 0; di < design.depths.size(); di++) {
        for (uint32_t k = 0; k < design.circuits_per_depth; k++) {
            write_circuit_file(
                circuit_file_path(circuits_dir, design.depths[di], k),
                sample_circuit_at(design, di, k));
            written++;
        }
    }
    out << "wrote design.json and " << written << " circuits to " << dir.string() << "\n";
    return kExitSuccess;
}

int cmd_simulate(const SimulateOptions& options_in, std::ostream& out, std::ostream& err) {
    (void)err;
    SimulateOptions options = options_in;
    if (!options.config.empty()) {
        apply_simulate_config(load_config(options.config), options);
    }
    require_option(options.design, "--design");
    require_option(options.out, "--out");

    MrbDesign design = read_design_file(options.design);
    if (options.shots > 0) {
        design.shots_per_circuit = options.shots;
    }
    const fs::path circuits_dir = options.circuits_dir.empty()
        ? fs::path(options.design).parent_path() / "circuits"
        : fs::path(options.circuits_dir);
    const ModelSource source = make_model_source(options.model, options.model_seed);
    const ErrorModel model = realize_model(source, design);

    std::vector<MirrorCircuit> circuits;
    circuits.reserve(design.depths.size() * design.circuits_per_depth);
    for (uint32_t di = 0; di < design.depths.size(); di++) {
        for (uint32_t k = 0; k < design.circuits_per_depth; k++) {
            circuits.push_back(
                read_circuit_file(circuit_file_path(circuits_dir, design.depths[di], k)));
        }
    }
    const ResultsFile results = simulate_circuits(design, circuits, model, options.jobs);
    write_results_file(options.out, results);
    if (!options.model_out.empty()) {
        write_model_file(options.model_out, model);
    }
    out << "simulated " << circuits.size() << " circuits x " << design.shots_per_circuit
        << " shots under " << model_source_name(source) << " -> " << options.out << "\n";
    return kExitSuccess;
}

int cmd_analyze(const AnalyzeOptions& options_in, std::ostream& out, std::ostream& err) {
    (void)err;
    AnalyzeOptions options = options_in;
    if (!options.config.empty()) {
        apply_analyze_config(load_config(options.config), options);
    }
    require_option(options.results, "--results");
    require_option(options.out, "--out");
    require_option(options.seed, "--seed");

    const ResultsFile results = read_results_file(options.results);
    if (results.records.empty()) {
        throw std::invalid_argument("results file has no records");
    }
    const uint32_t n = results.records.front().n;
    for (const ShotRecord& record : results.records) {
        if (record.n != n) {
            throw std::invalid_argument(
                "results file mixes register widths (" + std::to_string(n) + " and " +
                std::to_string(record.n) + ")");
        }
    }
    AnalysisReport report =
        analyze_results(results, n, options.bootstrap, parse_seed(options.seed));

    if (!options.epsilon_file.empty()) {
        if (options.epsilon > 0.0) {
            throw std::invalid_argument("--epsilon and --epsilon-file are mutually exclusive");
        }
        attach_epsilon(report, epsilon_from_json(read_text_file(options.epsilon_file)));
    } else if (options.epsilon > 0.0) {
        EpsilonOmegaEstimate estimate;
        estimate.value = options.epsilon;
        estimate.std_error = options.epsilon_stderr;
        attach_epsilon(report, estimate);
    } else if (options.epsilon < 0.0) {
        throw std::invalid_argument("--epsilon must be positive");
    }

    write_report_file(options.out, report);
    if (!options.csv.empty()) {
        write_csv_file(options.csv, report.means);
    }

    out << "n=" << report.n << " depths=" << report.means.size()
        << " circuits=" << polarization_points(results).size() << "\n";
    out << "A = " << format_estimate(report.fit.amplitude, report.fit.sigma_amplitude)
        << "\n";
    out << "p = " << format_estimate(report.fit.decay, report.fit.sigma_decay) << "\n";
    out << "r = " << format_estimate(report.fit.r, report.fit.sigma_r) << "\n";
    if (report.has_epsilon) {
        out << "epsilon_Omega = "
            << format_estimate(report.epsilon, report.epsilon_std_error)
            << "  delta_rel = " << report.delta_rel << "\n";
    }
    return kExitSuccess;
}

int cmd_epsilon(const EpsilonOptions& options_in, std::ostream& out, std::ostream& err) {
    (void)err;
    EpsilonOptions options = options_in;
    if (!options.config.empty()) {
        apply_epsilon_config(load_config(options.config), options);
    }
    require_option(options.design, "--design");
    require_option(options.seed, "--seed");

    const MrbDesign design = read_design_file(options.design);
    const ModelSource source = make_model_source(options.model, options.model_seed);
    const ErrorModel model = realize_model(source, design);
    Rng rng(derive_seed(parse_seed(options.seed), SeedStream::EpsilonEstimation, 0));
    const EpsilonOmegaEstimate estimate =
        epsilon_omega(design, model, options.layers, options.samples, rng);
    if (!options.out.empty()) {
        write_text_file(options.out, epsilon_to_json(estimate));
    }
    out << "epsilon_Omega = " << format_estimate(estimate.value, estimate.std_error)
        << "  (" << estimate.layer_samples << " layers x " << estimate.per_layer_samples
        << " samples)\n";
    return kExitSuccess;
}

int cmd_validate(const ValidateOptions& options, std::ostream& out, std::ostream& err) {
    (void)err;
    require_option(options.seed, "--seed");
    const std::vector<ValidationCheck> checks = run_validation_suite(parse_seed(options.seed));
    uint32_t passed = 0;
    for (const ValidationCheck& check : checks) {
        out << (check.passed ? "PASS" : "FAIL") << "  " << check.name;
        if (!check.passed && !check.detail.empty()) {
            out << "  (" << check.detail << ")";
        }
        out << "\n";
        passed += check.passed ? 1 : 0;
    }
    out << passed << "/" << checks.size() << " checks passed\n";
    return all_passed(checks) ? kExitSuccess : kExitValidationFailure;
}

int cmd_sweep(const SweepCmdOptions& options_in, std::ostream& out, std::ostream& err) {
    SweepCmdOptions options = options_in;
    if (!options.config.empty()) {
        apply_sweep_config(load_config(options.config), options);
    }
    require_option(options.preset, "--preset");
    require_option(options.seed, "--seed");
    require_option(options.out, "--out");

    mrb::SweepOptions sweep_options;
    sweep_options.jobs = options.jobs;
    sweep_options.bootstrap_replicates = options.bootstrap;
    sweep_options.epsilon_layer_samples = options.epsilon_layers;
    sweep_options.epsilon_samples_per_layer = options.epsilon_samples;
    sweep_options.progress = &err;

    const uint64_t seed = parse_seed(options.seed);
    std::vector<SweepRun> runs;
    if (options.preset == "random-models") {
        runs = run_random_model_sweep(seed, sweep_options);
    } else if (options.preset == "reference-models") {
        runs = run_reference_model_sweep(seed, sweep_options);
    } else {
        throw std::invalid_argument(
            "unknown preset '" + options.preset +
            "' (expected random-models or reference-models)");
    }

    const fs::path dir(options.out);
    fs::create_directories(dir);
    write_sweep_file(dir / "sweep.json", runs);
    write_text_file(dir / "sweep.csv", sweep_to_csv(runs));

    out << "  n  model         r          sigma_r    epsilon    delta_rel\n";
    for (const SweepRun& run : runs) {
        char line[160];
        if (run.report.has_epsilon) {
            std::snprintf(
                line, sizeof(line), "%3u  %-9s  %10.6f %10.6f %10.6f   %+8.4f\n",
                run.n, run.model_label.c_str(), run.report.fit.r, run.report.fit.sigma_r,
                run.report.epsilon, run.report.delta_rel);
        } else {
            std::snprintf(
                line, sizeof(line), "%3u  %-9s  %10.6f %10.6f          -          -\n",
                run.n, run.model_label.c_str(), run.report.fit.r, run.report.fit.sigma_r);
        }
        out << line;
    }
    out << "wrote sweep.json and sweep.csv to " << dir.string() << "\n";
    return kExitSuccess;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "mrb: mirror randomized benchmarking with randomized compiling.\n"
        "Every command is deterministic given its flags; commands that consume\n"
        "randomness require an explicit --seed."};
    app.require_subcommand(1);

    DesignOptions design_options;
    auto* design = app.add_subcommand(
        "design", "Sample a benchmark design and write its circuits");
    design->add_option(
              "--device", design_options.device,
              "Device graph: lattice:RxC, path:N or edges:a-b,...[;sites=N]")
        ->capture_default_str();
    design->add_option(
        "--qubits", design_options.qubits,
        "Benchmarked sites, ascending comma list (default: all sites)");
    design->add_option(
              "--sampler", design_options.sampler, "Layer sampler: edge_grab or single_cnot")
        ->capture_default_str();
    design->add_option(
              "--xi", design_options.xi, "Expected two-qubit gate density (edge_grab)")
        ->capture_default_str();
    design->add_option("--depths", design_options.depths, "Even benchmark depths, comma list")
        ->capture_default_str();
    design->add_option(
              "--circuits", design_options.circuits, "Circuits per depth (K)")
        ->capture_default_str();
    design->add_option("--shots", design_options.shots, "Shots per circuit (N)")
        ->capture_default_str();
    design->add_option(
        "--seed", design_options.seed, "Master seed, decimal or 0x-hex (required)");
    design->add_option("--out", design_options.out, "Output directory (required)");
    design->add_option(
        "--config", design_options.config,
        "JSON config whose keys override same-named flags");

    SimulateOptions simulate_options;
    auto* simulate = app.add_subcommand(
        "simulate", "Simulate the circuits of a design under an error model");
    simulate->add_option("--design", simulate_options.design, "design.json path (required)");
    simulate->add_option(
        "--circuits-dir", simulate_options.circuits_dir,
        "Circuit directory (default: <design dir>/circuits)");
    simulate->add_option(
                "--model", simulate_options.model,
                "noiseless, random, model1, model2 or file:PATH")
        ->capture_default_str();
    simulate->add_option(
        "--model-seed", simulate_options.model_seed, "Model draw seed (random models)");
    simulate->add_option(
        "--model-out", simulate_options.model_out, "Write the realized model JSON here");
    simulate->add_option(
        "--shots", simulate_options.shots, "Override the design's shots per circuit");
    simulate->add_option("--out", simulate_options.out, "results.json path (required)");
    simulate->add_option("--jobs", simulate_options.jobs, "Worker threads")
        ->capture_default_str();
    simulate->add_option(
        "--config", simulate_options.config,
        "JSON config whose keys override same-named flags");

    AnalyzeOptions analyze_options;
    auto* analyze = app.add_subcommand(
        "analyze", "Fit the polarization decay of measured counts");
    analyze->add_option("--results", analyze_options.results, "results.json path (required)");
    analyze->add_option(
               "--bootstrap", analyze_options.bootstrap, "Bootstrap replicates (>= 100)")
        ->capture_default_str();
    analyze->add_option(
        "--seed", analyze_options.seed, "Bootstrap resampling seed (required)");
    analyze->add_option(
        "--epsilon", analyze_options.epsilon,
        "Reference epsilon_Omega to compare against (> 0)");
    analyze->add_option(
        "--epsilon-stderr", analyze_options.epsilon_stderr,
        "Standard error of --epsilon");
    analyze->add_option(
        "--epsilon-file", analyze_options.epsilon_file,
        "Estimate JSON from `mrb epsilon` (exclusive with --epsilon)");
    analyze->add_option("--out", analyze_options.out, "report.json path (required)");
    analyze->add_option("--csv", analyze_options.csv, "Also write per-depth means CSV here");
    analyze->add_option(
        "--config", analyze_options.config,
        "JSON config whose keys override same-named flags");

    EpsilonOptions epsilon_options;
    auto* epsilon = app.add_subcommand(
        "epsilon", "Monte-Carlo estimate of the comparator epsilon_Omega");
    epsilon->add_option("--design", epsilon_options.design, "design.json path (required)");
    epsilon->add_option(
               "--model", epsilon_options.model,
               "noiseless, random, model1, model2 or file:PATH")
        ->capture_default_str();
    epsilon->add_option(
        "--model-seed", epsilon_options.model_seed, "Model draw seed (random models)");
    epsilon->add_option("--layers", epsilon_options.layers, "Sampled layers (J)")
        ->capture_default_str();
    epsilon->add_option(
               "--samples", epsilon_options.samples, "Monte-Carlo samples per layer (M)")
        ->capture_default_str();
    epsilon->add_option(
        "--seed", epsilon_options.seed, "Estimation seed (required)");
    epsilon->add_option("--out", epsilon_options.out, "Write the estimate JSON here");
    epsilon->add_option(
        "--config", epsilon_options.config,
        "JSON config whose keys override same-named flags");

    ValidateOptions validate_options;
    auto* validate = app.add_subcommand(
        "validate", "Run the oracle validation suite");
    validate->add_option(
        "--seed", validate_options.seed, "Suite seed (required)");

    SweepCmdOptions sweep_options;
    auto* sweep = app.add_subcommand(
        "sweep", "Run a full multi-register benchmark sweep preset");
    sweep->add_option(
        "--preset", sweep_options.preset, "random-models or reference-models (required)");
    sweep->add_option("--seed", sweep_options.seed, "Sweep master seed (required)");
    sweep->add_option("--out", sweep_options.out, "Output directory (required)");
    sweep->add_option("--jobs", sweep_options.jobs, "Worker threads")->capture_default_str();
    sweep->add_option(
             "--bootstrap", sweep_options.bootstrap, "Bootstrap replicates per run")
        ->capture_default_str();
    sweep->add_option(
             "--epsilon-layers", sweep_options.epsilon_layers,
             "Sampled layers per epsilon_Omega estimate")
        ->capture_default_str();
    sweep->add_option(
             "--epsilon-samples", sweep_options.epsilon_samples,
             "Monte-Carlo samples per sampled layer")
        ->capture_default_str();
    sweep->add_option(
        "--config", sweep_options.config,
        "JSON config whose keys override same-named flags");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitSuccess;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitSuccess;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (design->parsed()) {
            return cmd_design(design_options, out, err);
        }
        if (simulate->parsed()) {
            return cmd_simulate(simulate_options, out, err);
        }
        if (analyze->parsed()) {
            return cmd_analyze(analyze_options, out, err);
        }
        if (epsilon->parsed()) {
            return cmd_epsilon(epsilon_options, out, err);
        }
        if (validate->parsed()) {
            return cmd_validate(validate_options, out, err);
        }
        if (sweep->parsed()) {
            return cmd_sweep(sweep_options, out, err);
        }
        err << "error: no subcommand given\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

}  // namespace mrb::cli
