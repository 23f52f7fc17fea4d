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

#ifndef MRB_RESULTS_IO_HPP
#define MRB_RESULTS_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "mrb/frame_sim.hpp"

namespace mrb {

/// Measured counts of one circuit, with enough context to analyze it alone.
struct ShotRecord {
    std::string id;        // e.g. "d0008_k012"
    uint32_t n = 0;
    uint32_t depth = 0;
    std::string target;
    std::map<std::string, uint32_t> counts;

    uint32_t total_shots() const;
    ShotResult to_shot_result() const;
};

struct ResultsFile {
    std::vector<ShotRecord> records;
};

ShotRecord make_shot_record(
    const MirrorCircuit& circuit, uint32_t circuit_index, const ShotResult& result);

/// Results JSON (schema_version 1): one record per circuit. Deterministic
/// field and key order.
std::string results_to_json(const ResultsFile& results);
ResultsFile results_from_json(const std::string& json_text);

void write_results_file(const std::filesystem::path& path, const ResultsFile& results);
ResultsFile read_results_file(const std::filesystem::path& path);

}  // namespace mrb

#endif
