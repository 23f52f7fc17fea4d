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

#include "mrb/campaign.hpp"

#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "mrb/circuit_io.hpp"
#include "mrb/frame_sim.hpp"
#include "mrb/parallel.hpp"
#include "mrb/rng.hpp"

namespace mrb {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

}  // namespace

ModelSource model_source_from_string(const std::string& text) {
    ModelSource source;
    if (text == "noiseless") {
        source.kind = ModelSource::Kind::Noiseless;
    } else if (text == "random") {
        source.kind = ModelSource::Kind::Random;
    } else if (text == "model1") {
        source.kind = ModelSource::Kind::Model1;
    } else if (text == "model2") {
        source.kind = ModelSource::Kind::Model2;
    } else if (text.rfind("file:", 0) == 0) {
        source.kind = ModelSource::Kind::File;
        source.file = text.substr(5);
        if (source.file.empty()) {
            throw std::invalid_argument("model source 'file:' needs a path");
        }
    } else {
        throw std::invalid_argument(
            "unknown model source '" + text +
            "' (expected noiseless, random, model1, model2 or file:PATH)");
    }
    return source;
}

std::string model_source_name(const ModelSource& source) {
    switch (source.kind) {
        case ModelSource::Kind::Noiseless:
            return "noiseless";
        case ModelSource::Kind::Random:
            return "random";
        case ModelSource::Kind::Model1:
            return "model1";
        case ModelSource::Kind::Model2:
            return "model2";
        case ModelSource::Kind::File:
            return "file:" + source.file.string();
    }
    throw std::logic_error("unreachable model source kind");
}

ErrorModel realize_model(const ModelSource& source, const MrbDesign& design) {
    switch (source.kind) {
        case ModelSource::Kind::Noiseless:
            return ErrorModel::noiseless(design.n());
        case ModelSource::Kind::Random: {
            Rng rng(derive_seed(source.model_seed, SeedStream::ModelSampling, 0));
            return sample_random_model(design.benchmark_graph(), source.random_spec, rng);
        }
        case ModelSource::Kind::Model1:
            return build_model1(design.device, design.qubits, source.crosstalk);
        case ModelSource::Kind::Model2:
            return build_model2(design.device, design.qubits, source.crosstalk);
        case ModelSource::Kind::File: {
            ErrorModel model = read_model_file(source.file);
            if (model.num_qubits() != design.n()) {
                throw std::invalid_argument(
                    "model file " + source.file.string() + " has " +
                    std::to_string(model.num_qubits()) + " qubits but the design has " +
                    std::to_string(design.n()));
            }
            return model;
        }
    }
    throw std::logic_error("unreachable model source kind");
}

uint64_t circuit_sim_seed(
    const MrbDesign& design, uint32_t depth_index, uint32_t circuit_index) {
    const uint64_t counter =
        (static_cast<uint64_t>(depth_index) << 32) | static_cast<uint64_t>(circuit_index);
    return derive_seed(design.master_seed, SeedStream::ShotSimulation, counter);
}

std::vector<MirrorCircuit> sample_design_circuits(const MrbDesign& design) {
    design.validate();
    std::vector<MirrorCircuit> circuits;
    circuits.reserve(design.depths.size() * design.circuits_per_depth);
    for (uint32_t di = 0; di < design.depths.size(); di++) {
        for (uint32_t k = 0; k < design.circuits_per_depth; k++) {
            circuits.push_back(sample_circuit_at(design, di, k));
        }
    }
    return circuits;
}

ResultsFile simulate_circuits(
    const MrbDesign& design,
    const std::vector<MirrorCircuit>& circuits,
    const ErrorModel& model,
    uint32_t jobs) {
    design.validate();
    const uint64_t expected =
        static_cast<uint64_t>(design.depths.size()) * design.circuits_per_depth;
    if (circuits.size() != expected) {
        throw std::invalid_argument(
            "expected " + std::to_string(expected) + " circuits (depth-major), got " +
            std::to_string(circuits.size()));
    }
    ResultsFile results;
    results.records.resize(circuits.size());
    parallel_for(0, circuits.size(), jobs, [&](uint64_t i) {
        const uint32_t di = static_cast<uint32_t>(i / design.circuits_per_depth);
        const uint32_t k = static_cast<uint32_t>(i % design.circuits_per_depth);
        const MirrorCircuit& circuit = circuits[i];
        if (circuit.n != design.n() || circuit.benchmark_depth != design.depths[di]) {
            throw std::invalid_argument(
                "circuit " + std::to_string(i) + " does not match the design slot " +
                circuit_id(design.depths[di], k));
        }
        const ShotResult shots = simulate_shots(
            circuit, model, design.shots_per_circuit, circuit_sim_seed(design, di, k));
        results.records[i] = make_shot_record(circuit, k, shots);
    });
    return results;
}

ResultsFile simulate_design(const MrbDesign& design, const ErrorModel& model, uint32_t jobs) {
    return simulate_circuits(design, sample_design_circuits(design), model, jobs);
}

AnalysisReport analyze_results(
    const ResultsFile& results,
    uint32_t num_qubits,
    uint32_t bootstrap_replicates,
    uint64_t bootstrap_seed) {
    const std::vector<PolarizationPoint> points = polarization_points(results);
    AnalysisReport report;
    report.n = num_qubits;
    report.means = mean_polarizations(points);
    Rng rng(derive_seed(bootstrap_seed, SeedStream::Bootstrap, 0));
    report.fit = fit_decay_bootstrap(points, num_qubits, bootstrap_replicates, rng);
    return report;
}

void attach_epsilon(AnalysisReport& report, const EpsilonOmegaEstimate& epsilon) {
    if (epsilon.value <= 0.0) {
        throw std::invalid_argument("epsilon_Omega must be positive to compare against");
    }
    report.has_epsilon = true;
    report.epsilon = epsilon.value;
    report.epsilon_std_error = epsilon.std_error;
    report.delta_rel = relative_error(report.fit.r, epsilon.value);
}

CampaignResult run_campaign(
    const MrbDesign& design, const ErrorModel& model, const CampaignOptions& options) {
    CampaignResult out;
    out.results = simulate_design(design, model, options.jobs);
    out.report = analyze_results(
        out.results, design.n(), options.bootstrap_replicates, design.master_seed);
    if (options.compute_epsilon) {
        Rng rng(derive_seed(design.master_seed, SeedStream::EpsilonEstimation, 0));
        const EpsilonOmegaEstimate eps = epsilon_omega(
            design, model, options.epsilon_layer_samples,
            options.epsilon_samples_per_layer, rng);
        // A strictly zero estimate (noiseless model) leaves the comparison out.
        if (eps.value > 0.0) {
            attach_epsilon(out.report, eps);
        }
    }
    return out;
}

const uint32_t kSweepWidths[5] = {1, 2, 4, 8, 16};

std::vector<uint32_t> sweep_qubit_subset(uint32_t num_qubits) {
    switch (num_qubits) {
        case 1:
            return {0};
        case 2:
            return {0, 1};
        case 4:
            return {0, 1, 4, 5};
        case 8:
            return {0, 1, 2, 3, 4, 5, 6, 7};
        case 16: {
            std::vector<uint32_t> all(16);
            std::iota(all.begin(), all.end(), 0u);
            return all;
        }
        default:
            throw std::invalid_argument(
                "sweep register width must be 1, 2, 4, 8 or 16, got " +
                std::to_string(num_qubits));
    }
}

std::vector<uint32_t> sweep_depths() {
    return {0, 2, 4, 8, 16, 32, 64};
}

MrbDesign make_sweep_design(
    uint32_t num_qubits,
    uint32_t circuits_per_depth,
    uint32_t shots_per_circuit,
    uint64_t seed) {
    MrbDesign design;
    design.device = ConnectivityGraph::square_lattice(4, 4);
    design.qubits = sweep_qubit_subset(num_qubits);
    design.sampler.kind = SamplerKind::EdgeGrab;
    design.sampler.xi = 0.125;
    design.depths = sweep_depths();
    design.circuits_per_depth = circuits_per_depth;
    design.shots_per_circuit = shots_per_circuit;
    design.master_seed = seed;
    design.validate();
    return design;
}

namespace {

void report_progress(std::ostream* progress, const SweepRun& run) {
    if (progress == nullptr) {
        return;
    }
    *progress << "n=" << run.n << " " << run.model_label << ": r=" << run.report.fit.r;
    if (run.report.has_epsilon) {
        *progress << " epsilon=" << run.report.epsilon << " delta_rel=" << run.report.delta_rel;
    }
    *progress << "\n" << std::flush;
}

SweepRun run_sweep_entry(
    uint32_t num_qubits,
    const std::string& label,
    uint32_t circuits_per_depth,
    uint32_t shots_per_circuit,
    uint64_t design_seed,
    const ModelSource& source,
    const SweepOptions& options) {
    const MrbDesign design =
        make_sweep_design(num_qubits, circuits_per_depth, shots_per_circuit, design_seed);
    const ErrorModel model = realize_model(source, design);
    CampaignOptions campaign_options;
    campaign_options.bootstrap_replicates = options.bootstrap_replicates;
    campaign_options.epsilon_layer_samples = options.epsilon_layer_samples;
    campaign_options.epsilon_samples_per_layer = options.epsilon_samples_per_layer;
    campaign_options.jobs = options.jobs;
    const CampaignResult result = run_campaign(design, model, campaign_options);
    SweepRun run;
    run.n = num_qubits;
    run.model_label = label;
    run.design_seed = design_seed;
    run.model_seed = source.model_seed;
    run.report = result.report;
    report_progress(options.progress, run);
    return run;
}

}  // namespace

std::vector<SweepRun> run_random_model_sweep(uint64_t master_seed, const SweepOptions& options) {
    std::vector<SweepRun> runs;
    runs.reserve(50);
    uint64_t counter = 0;
    for (uint32_t width : kSweepWidths) {
        for (uint32_t m = 0; m < 10; m++, counter++) {
            ModelSource source;
            source.kind = ModelSource::Kind::Random;
            source.model_seed = derive_seed(master_seed, SeedStream::ModelSampling, counter);
            char label[16];
            std::snprintf(label, sizeof(label), "random%02u", m);
            const uint64_t design_seed =
                derive_seed(master_seed, SeedStream::CircuitSampling, counter);
            runs.push_back(run_sweep_entry(
                width, label, 30, 100, design_seed, source, options));
        }
    }
    return runs;
}

std::vector<SweepRun> run_reference_model_sweep(
    uint64_t master_seed, const SweepOptions& options) {
    std::vector<SweepRun> runs;
    runs.reserve(10);
    uint64_t counter = 0;
    for (uint32_t width : kSweepWidths) {
        for (uint32_t m = 1; m <= 2; m++, counter++) {
            ModelSource source;
            source.kind = m == 1 ? ModelSource::Kind::Model1 : ModelSource::Kind::Model2;
            const uint64_t design_seed =
                derive_seed(master_seed, SeedStream::CircuitSampling, counter);
            runs.push_back(run_sweep_entry(
                width, m == 1 ? "model1" : "model2", 40, 1000, design_seed, source, options));
        }
    }
    return runs;
}

std::string sweep_to_csv(const std::vector<SweepRun>& runs) {
    std::string out = "n,model,amplitude,decay,r,sigma_r,epsilon,epsilon_stderr,delta_rel\n";
    for (const SweepRun& run : runs) {
        out += std::to_string(run.n);
        out += ',';
        out += run.model_label;
        out += ',';
        out += format_double(run.report.fit.amplitude);
        out += ',';
        out += format_double(run.report.fit.decay);
        out += ',';
        out += format_double(run.report.fit.r);
        out += ',';
        out += format_double(run.report.fit.sigma_r);
        out += ',';
        if (run.report.has_epsilon) {
            out += format_double(run.report.epsilon);
            out += ',';
            out += format_double(run.report.epsilon_std_error);
            out += ',';
            out += format_double(run.report.delta_rel);
        } else {
            out += ",,";
        }
        out += '\n';
    }
    return out;
}

std::string sweep_to_json(const std::vector<SweepRun>& runs) {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["runs"] = ordered_json::array();
    for (const SweepRun& run : runs) {
        ordered_json entry;
        entry["n"] = run.n;
        entry["model"] = run.model_label;
        entry["design_seed"] = seed_to_hex(run.design_seed);
        entry["model_seed"] = seed_to_hex(run.model_seed);
        entry["report"] = ordered_json::parse(report_to_json(run.report));
        doc["runs"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

std::vector<SweepRun> sweep_from_json(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const ordered_json::parse_error& e) {
        throw std::invalid_argument(std::string("sweep file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("schema_version") ||
        !doc["schema_version"].is_number_unsigned() || doc["schema_version"] != 1) {
        throw std::invalid_argument("sweep JSON: missing or unsupported schema_version");
    }
    if (!doc.contains("runs") || !doc["runs"].is_array()) {
        throw std::invalid_argument("sweep JSON: missing runs array");
    }
    std::vector<SweepRun> runs;
    for (const auto& entry : doc["runs"]) {
        SweepRun run;
        run.n = entry.at("n").get<uint32_t>();
        run.model_label = entry.at("model").get<std::string>();
        run.design_seed = seed_from_hex(entry.at("design_seed").get<std::string>());
        run.model_seed = seed_from_hex(entry.at("model_seed").get<std::string>());
        run.report = report_from_json(entry.at("report").dump());
        runs.push_back(std::move(run));
    }
    return runs;
}

void write_sweep_file(const std::filesystem::path& path, const std::vector<SweepRun>& runs) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + path.string());
    }
    out << sweep_to_json(runs);
    if (!out) {
        throw std::runtime_error("failed writing file: " + path.string());
    }
}

std::vector<SweepRun> read_sweep_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return sweep_from_json(buffer.str());
}

}  // namespace mrb
