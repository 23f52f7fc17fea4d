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

#include "mrb/results_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "mrb/circuit.hpp"

namespace mrb {

namespace {

using ordered_json = nlohmann::ordered_json;

}  // namespace

uint32_t ShotRecord::total_shots() const {
    uint32_t total = 0;
    for (const auto& [bits, count] : counts) {
        total += count;
    }
    return total;
}

ShotResult ShotRecord::to_shot_result() const {
    ShotResult result;
    result.n = n;
    result.counts = counts;
    result.total_shots = total_shots();
    return result;
}

ShotRecord make_shot_record(
    const MirrorCircuit& circuit, uint32_t circuit_index, const ShotResult& result) {
    ShotRecord record;
    record.id = circuit_id(circuit.benchmark_depth, circuit_index);
    record.n = circuit.n;
    record.depth = circuit.benchmark_depth;
    record.target = circuit.target;
    record.counts = result.counts;
    return record;
}

std::string results_to_json(const ResultsFile& results) {
    ordered_json j;
    j["schema_version"] = 1;
    j["records"] = ordered_json::array();
    for (const ShotRecord& r : results.records) {
        ordered_json counts = ordered_json::object();
        for (const auto& [bits, count] : r.counts) {
            counts[bits] = count;
        }
        j["records"].push_back(ordered_json{
            {"id", r.id},
            {"n", r.n},
            {"d", r.depth},
            {"target", r.target},
            {"counts", std::move(counts)}});
    }
    return j.dump(2) + "\n";
}

ResultsFile results_from_json(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("results file is not valid JSON: ") + e.what());
    }
    if (!j.contains("schema_version") || j.at("schema_version").get<int>() != 1) {
        throw std::invalid_argument("results JSON: unsupported or missing schema_version");
    }
    if (!j.contains("records") || !j.at("records").is_array()) {
        throw std::invalid_argument("results JSON: missing records array");
    }
    ResultsFile results;
    for (const auto& rec : j.at("records")) {
        ShotRecord r;
        r.id = rec.at("id").get<std::string>();
        r.n = rec.at("n").get<uint32_t>();
        r.depth = rec.at("d").get<uint32_t>();
        r.target = rec.at("target").get<std::string>();
        if (r.target.size() != r.n) {
            throw std::invalid_argument("results JSON: target length mismatch in " + r.id);
        }
        for (const auto& [bits, count] : rec.at("counts").items()) {
            if (bits.size() != r.n) {
                throw std::invalid_argument("results JSON: count key length mismatch in " + r.id);
            }
            r.counts[bits] = count.get<uint32_t>();
        }
        if (r.counts.empty()) {
            throw std::invalid_argument("results JSON: record " + r.id + " has no counts");
        }
        results.records.push_back(std::move(r));
    }
    return results;
}

void write_results_file(const std::filesystem::path& path, const ResultsFile& results) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + path.string());
    }
    out << results_to_json(results);
    if (!out) {
        throw std::runtime_error("failed writing file: " + path.string());
    }
}

ResultsFile read_results_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return results_from_json(buffer.str());
}

}  // namespace mrb
