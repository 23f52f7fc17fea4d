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

#include "mrb/circuit_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mrb {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(size_t line_number, const std::string& why) {
    throw std::invalid_argument(
        "circuit parse error on line " + std::to_string(line_number) + ": " + why);
}

/// Parses a decimal number from [pos, end) and advances pos.
uint32_t take_number(const std::string& s, size_t& pos, size_t line_number) {
    const size_t start = pos;
    uint32_t value = 0;
    const auto result = std::from_chars(s.data() + pos, s.data() + s.size(), value);
    if (result.ec != std::errc() || result.ptr == s.data() + start) {
        parse_fail(line_number, "expected a number in '" + s + "'");
    }
    pos = static_cast<size_t>(result.ptr - s.data());
    return value;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + path.string());
    }
    out << content;
    if (!out) {
        throw std::runtime_error("failed writing file: " + path.string());
    }
}

}  // namespace

std::string seed_to_hex(uint64_t seed) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(seed));
    return std::string(buf);
}

uint64_t seed_from_hex(const std::string& text) {
    std::string digits = text;
    if (digits.rfind("0x", 0) == 0 || digits.rfind("0X", 0) == 0) {
        digits = digits.substr(2);
    }
    if (digits.empty() || digits.size() > 16) {
        throw std::invalid_argument("seed hex string must have 1..16 digits: '" + text + "'");
    }
    uint64_t value = 0;
    const auto result =
        std::from_chars(digits.data(), digits.data() + digits.size(), value, 16);
    if (result.ec != std::errc() || result.ptr != digits.data() + digits.size()) {
        throw std::invalid_argument("invalid seed hex string: '" + text + "'");
    }
    return value;
}

std::string serialize_circuit(const MirrorCircuit& circuit) {
    circuit.validate();
    std::ostringstream out;
    out << "#MRB n=" << circuit.n << " d=" << circuit.benchmark_depth
        << " target=" << circuit.target << " seed=" << seed_to_hex(circuit.seed) << "\n";
    for (size_t i = 0; i < circuit.layers.size(); i++) {
        const Layer& layer = circuit.layers[i];
        out << "L " << i << ":";
        for (uint32_t q = 0; q < circuit.n; q++) {
            const Placement& p = layer.at(q);
            switch (p.kind) {
                case PlacementKind::Idle:
                    out << " q" << q << "=I";
                    break;
                case PlacementKind::OneQubit:
                    out << " q" << q << "=C" << static_cast<uint32_t>(p.gate);
                    break;
                case PlacementKind::CnotControl:
                case PlacementKind::CnotTarget: {
                    if (q > p.partner) {
                        break;  // already emitted at the smaller endpoint
                    }
                    const uint32_t control = p.kind == PlacementKind::CnotControl ? q : p.partner;
                    const uint32_t target = p.kind == PlacementKind::CnotControl ? p.partner : q;
                    out << " q" << control << "q" << target << "=CX";
                    break;
                }
            }
        }
        out << "\n";
    }
    return out.str();
}

MirrorCircuit parse_circuit(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    size_t line_number = 0;

    // Header.
    if (!std::getline(in, line)) {
        throw std::invalid_argument("circuit parse error: empty input");
    }
    line_number++;
    uint32_t n = 0;
    uint32_t d = 0;
    char target_buf[1024];
    char seed_buf[64];
    if (std::sscanf(
            line.c_str(), "#MRB n=%u d=%u target=%1023s seed=%63s", &n, &d, target_buf,
            seed_buf) != 4) {
        parse_fail(line_number, "malformed header '" + line + "'");
    }
    if (n == 0 || n > 1023) {
        parse_fail(line_number, "qubit count out of range");
    }
    if (d % 2 != 0) {
        parse_fail(line_number, "benchmark depth must be even");
    }
    const std::string target(target_buf);
    if (target.size() != n) {
        parse_fail(line_number, "target length does not match qubit count");
    }

    MirrorCircuit circuit;
    circuit.n = n;
    circuit.benchmark_depth = d;
    circuit.target = target;
    circuit.seed = seed_from_hex(seed_buf);

    const size_t expected_layers = static_cast<size_t>(2) * d + 3;
    while (std::getline(in, line)) {
        line_number++;
        if (line.empty()) {
            continue;
        }
        size_t pos = 0;
        if (line.rfind("L ", 0) != 0) {
            parse_fail(line_number, "expected a layer line");
        }
        pos = 2;
        const uint32_t index = take_number(line, pos, line_number);
        if (index != circuit.layers.size()) {
            parse_fail(line_number, "layer index out of sequence");
        }
        if (pos >= line.size() || line[pos] != ':') {
            parse_fail(line_number, "expected ':' after layer index");
        }
        pos++;

        Layer layer(n);
        std::vector<bool> seen(n, false);
        auto claim = [&](uint32_t q) {
            if (q >= n) {
                parse_fail(line_number, "qubit index out of range");
            }
            if (seen[q]) {
                parse_fail(line_number, "qubit " + std::to_string(q) + " assigned twice");
            }
            seen[q] = true;
        };
        while (pos < line.size()) {
            if (line[pos] == ' ') {
                pos++;
                continue;
            }
            if (line[pos] != 'q') {
                parse_fail(line_number, "expected a gate token");
            }
            pos++;
            const uint32_t q1 = take_number(line, pos, line_number);
            if (pos < line.size() && line[pos] == 'q') {
                pos++;
                const uint32_t q2 = take_number(line, pos, line_number);
                if (pos + 3 > line.size() || line.compare(pos, 3, "=CX") != 0) {
                    parse_fail(line_number, "expected '=CX' after qubit pair");
                }
                pos += 3;
                claim(q1);
                claim(q2);
                layer.set_cnot(q1, q2);
            } else {
                if (pos >= line.size() || line[pos] != '=') {
                    parse_fail(line_number, "expected '=' after qubit");
                }
                pos++;
                if (pos < line.size() && line[pos] == 'I') {
                    pos++;
                    claim(q1);
                    layer.set_idle(q1);
                } else if (pos < line.size() && line[pos] == 'C') {
                    pos++;
                    const uint32_t gate = take_number(line, pos, line_number);
                    if (gate >= CliffordTable::kNumGates) {
                        parse_fail(line_number, "Clifford gate id out of range");
                    }
                    claim(q1);
                    layer.set_one_qubit(q1, static_cast<uint8_t>(gate));
                } else {
                    parse_fail(line_number, "unknown gate token");
                }
            }
        }
        for (uint32_t q = 0; q < n; q++) {
            if (!seen[q]) {
                parse_fail(line_number, "qubit " + std::to_string(q) + " missing from layer");
            }
        }
        if (circuit.layers.size() >= expected_layers) {
            parse_fail(line_number, "more layers than the header's depth implies");
        }
        circuit.layers.push_back(std::move(layer));
    }
    if (circuit.layers.size() != expected_layers) {
        throw std::invalid_argument(
            "circuit parse error: expected " + std::to_string(expected_layers) +
            " layers, found " + std::to_string(circuit.layers.size()));
    }
    circuit.validate();

    const std::string recomputed = compute_target(n, circuit.layers);
    if (recomputed != circuit.target) {
        throw std::invalid_argument(
            "circuit parse error: stored target " + circuit.target +
            " does not match recomputed target " + recomputed);
    }
    return circuit;
}

void write_circuit_file(const std::filesystem::path& path, const MirrorCircuit& circuit) {
    write_text_file(path, serialize_circuit(circuit));
}

MirrorCircuit read_circuit_file(const std::filesystem::path& path) {
    return parse_circuit(read_text_file(path));
}

std::string design_to_json(const MrbDesign& design) {
    design.validate();
    ordered_json j;
    j["schema_version"] = 1;
    j["device"] = ordered_json{{"num_sites", design.device.num_sites()},
                               {"edges", ordered_json::array()}};
    for (const auto& [a, b] : design.device.edges()) {
        j["device"]["edges"].push_back(ordered_json::array({a, b}));
    }
    j["qubits"] = design.qubits;
    j["sampler"] = ordered_json{{"kind", sampler_kind_name(design.sampler.kind)}};
    if (design.sampler.kind == SamplerKind::EdgeGrab) {
        j["sampler"]["xi"] = design.sampler.xi;
    }
    j["depths"] = design.depths;
    j["circuits_per_depth"] = design.circuits_per_depth;
    j["shots_per_circuit"] = design.shots_per_circuit;
    j["master_seed"] = "0x" + seed_to_hex(design.master_seed);
    return j.dump(2) + "\n";
}

MrbDesign design_from_json(const std::string& json_text) {
    const auto j = ordered_json::parse(json_text);
    if (!j.contains("schema_version") || j.at("schema_version").get<int>() != 1) {
        throw std::invalid_argument("design JSON: unsupported or missing schema_version");
    }
    MrbDesign design;
    const auto& dev = j.at("device");
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (const auto& e : dev.at("edges")) {
        edges.push_back({e.at(0).get<uint32_t>(), e.at(1).get<uint32_t>()});
    }
    design.device = ConnectivityGraph(dev.at("num_sites").get<uint32_t>(), std::move(edges));
    design.qubits = j.at("qubits").get<std::vector<uint32_t>>();
    const auto& sampler = j.at("sampler");
    design.sampler.kind = sampler_kind_from_name(sampler.at("kind").get<std::string>());
    if (design.sampler.kind == SamplerKind::EdgeGrab) {
        design.sampler.xi = sampler.at("xi").get<double>();
    }
    design.depths = j.at("depths").get<std::vector<uint32_t>>();
    design.circuits_per_depth = j.at("circuits_per_depth").get<uint32_t>();
    design.shots_per_circuit = j.at("shots_per_circuit").get<uint32_t>();
    const auto& seed = j.at("master_seed");
    if (seed.is_string()) {
        design.master_seed = seed_from_hex(seed.get<std::string>());
    } else {
        design.master_seed = seed.get<uint64_t>();
    }
    design.validate();
    return design;
}

void write_design_file(const std::filesystem::path& path, const MrbDesign& design) {
    write_text_file(path, design_to_json(design));
}

MrbDesign read_design_file(const std::filesystem::path& path) {
    return design_from_json(read_text_file(path));
}

}  // namespace mrb
