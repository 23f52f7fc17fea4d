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

#include "mrb/error_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "mrb/circuit_io.hpp"
#include "mrb/clifford1q.hpp"

namespace mrb {

const PlacementError ErrorModel::kNoiselessPlacement{};

ErrorModel::ErrorModel(uint32_t num_qubits, bool allow_missing_cnots)
    : n_(num_qubits),
      allow_missing_cnots_(allow_missing_cnots),
      one_qubit_(num_qubits),
      readout_(num_qubits, 0.0) {
}

void ErrorModel::set_readout(uint32_t qubit, double probability) {
    if (qubit >= n_) {
        throw std::out_of_range("error model qubit index out of range");
    }
    if (!(probability >= 0.0) || probability > 1.0) {
        throw std::invalid_argument("readout probability must lie in [0, 1]");
    }
    readout_[qubit] = probability;
}

const PlacementError& ErrorModel::one_qubit(uint32_t qubit, uint8_t gate) const {
    if (qubit >= n_) {
        throw std::out_of_range("error model qubit index out of range");
    }
    if (gate >= CliffordTable::kNumGates) {
        throw std::out_of_range("error model gate id out of range");
    }
    return one_qubit_[qubit][gate];
}

void ErrorModel::set_one_qubit(uint32_t qubit, uint8_t gate, PlacementError error) {
    if (qubit >= n_) {
        throw std::out_of_range("error model qubit index out of range");
    }
    if (gate >= CliffordTable::kNumGates) {
        throw std::out_of_range("error model gate id out of range");
    }
    one_qubit_[qubit][gate] = std::move(error);
}

const PlacementError& ErrorModel::cnot(uint32_t control, uint32_t target) const {
    const auto it = cnot_.find({control, target});
    if (it != cnot_.end()) {
        return it->second;
    }
    if (allow_missing_cnots_) {
        return kNoiselessPlacement;
    }
    throw std::invalid_argument(
        "error model does not cover CNOT(" + std::to_string(control) + ", " +
        std::to_string(target) + ")");
}

void ErrorModel::set_cnot(uint32_t control, uint32_t target, PlacementError error) {
    if (control >= n_ || target >= n_ || control == target) {
        throw std::out_of_range("error model CNOT endpoints invalid");
    }
    cnot_[{control, target}] = std::move(error);
}

bool ErrorModel::has_cnot(uint32_t control, uint32_t target) const {
    return cnot_.count({control, target}) > 0;
}

bool ErrorModel::covers(const Layer& layer) const {
    if (layer.num_qubits() != n_) {
        return false;
    }
    if (allow_missing_cnots_) {
        return true;
    }
    for (uint32_t q = 0; q < n_; q++) {
        const Placement& p = layer.at(q);
        if (p.kind == PlacementKind::CnotControl && !has_cnot(q, p.partner)) {
            return false;
        }
    }
    return true;
}

void ErrorModel::require_covers(const MirrorCircuit& circuit) const {
    if (circuit.n != n_) {
        throw std::invalid_argument(
            "error model acts on " + std::to_string(n_) + " qubits but the circuit has " +
            std::to_string(circuit.n));
    }
    if (allow_missing_cnots_) {
        return;
    }
    for (size_t i = 0; i < circuit.layers.size(); i++) {
        const Layer& layer = circuit.layers[i];
        for (uint32_t q = 0; q < n_; q++) {
            const Placement& p = layer.at(q);
            if (p.kind == PlacementKind::CnotControl && !has_cnot(q, p.partner)) {
                throw std::invalid_argument(
                    "error model coverage gap: CNOT(" + std::to_string(q) + ", " +
                    std::to_string(p.partner) + ") in layer " + std::to_string(i));
            }
        }
    }
}

void RandomModelSpec::validate() const {
    auto check_interval = [](const std::array<double, 2>& iv, double hi_cap, const char* name) {
        if (!(iv[0] >= 0.0) || !(iv[1] >= iv[0]) || iv[1] > hi_cap) {
            throw std::invalid_argument(
                std::string("random model interval ") + name + " is invalid");
        }
    };
    check_interval(gamma_one_qubit, 1.0, "gamma_one_qubit");
    check_interval(gamma_two_qubit, 1.0, "gamma_two_qubit");
    check_interval(kappa, 1.0, "kappa");
    check_interval(readout, 1.0, "readout");
}

namespace {

/// Splits `share` over `targets` proportionally to fresh U(0, 1) draws and
/// appends the resulting entries. Draws exactly targets.size() variates.
void append_proportional_entries(
    std::vector<ChannelEntry>& entries,
    const std::vector<PauliString>& targets,
    double share,
    Rng& rng) {
    std::vector<double> raw(targets.size());
    double sum = 0.0;
    for (double& v : raw) {
        v = rng.real01();
        sum += v;
    }
    if (sum <= 0.0) {
        return;  // all-zero draws: vanishing share (probability-zero event)
    }
    for (size_t i = 0; i < targets.size(); i++) {
        const double p = share * raw[i] / sum;
        if (p > 0.0) {
            entries.push_back({targets[i], p});
        }
    }
}

std::vector<PauliString> one_qubit_xyz_targets(uint32_t n, uint32_t qubit) {
    return {
        PauliString::single(n, qubit, PauliLetter::X),
        PauliString::single(n, qubit, PauliLetter::Y),
        PauliString::single(n, qubit, PauliLetter::Z),
    };
}

/// The 15 non-identity two-qubit Paulis on (a, b), in frozen letter-code
/// order (I, X, Z, Y) x (I, X, Z, Y) minus (I, I).
std::vector<PauliString> two_qubit_pair_targets(uint32_t n, uint32_t a, uint32_t b) {
    std::vector<PauliString> targets;
    targets.reserve(15);
    for (uint8_t ca = 0; ca < 4; ca++) {
        for (uint8_t cb = 0; cb < 4; cb++) {
            if (ca == 0 && cb == 0) {
                continue;
            }
            PauliString p(n);
            p.set(a, static_cast<PauliLetter>(ca));
            p.set(b, static_cast<PauliLetter>(cb));
            targets.push_back(std::move(p));
        }
    }
    return targets;
}

std::vector<PauliString> neighbor_xyz_targets(
    uint32_t n, const std::vector<uint32_t>& neighbors) {
    std::vector<PauliString> targets;
    targets.reserve(3 * neighbors.size());
    for (uint32_t u : neighbors) {
        targets.push_back(PauliString::single(n, u, PauliLetter::X));
        targets.push_back(PauliString::single(n, u, PauliLetter::Y));
        targets.push_back(PauliString::single(n, u, PauliLetter::Z));
    }
    return targets;
}

}  // namespace

ErrorModel sample_random_model(
    const ConnectivityGraph& graph,
    const RandomModelSpec& spec,
    Rng& rng,
    RandomModelDiagnostics* diagnostics) {
    spec.validate();
    const uint32_t n = graph.num_sites();
    if (n == 0) {
        throw std::invalid_argument("random model needs at least one qubit");
    }
    const CliffordTable& table = CliffordTable::instance();
    ErrorModel model(n);

    for (uint32_t q = 0; q < n; q++) {
        model.set_readout(q, rng.uniform(spec.readout[0], spec.readout[1]));
    }

    for (uint32_t q = 0; q < n; q++) {
        const std::vector<uint32_t>& neighbors = graph.neighbors(q);
        for (uint8_t gate = 0; gate < CliffordTable::kNumGates; gate++) {
            const double gamma = rng.uniform(spec.gamma_one_qubit[0], spec.gamma_one_qubit[1]);
            const double kappa = rng.uniform(spec.kappa[0], spec.kappa[1]);
            const bool neighbor_share =
                !table.is_z_basis_rotation(gate) && !neighbors.empty();

            std::vector<ChannelEntry> entries;
            append_proportional_entries(
                entries, one_qubit_xyz_targets(n, q), gamma * kappa, rng);
            if (neighbor_share) {
                append_proportional_entries(
                    entries, neighbor_xyz_targets(n, neighbors), gamma * (1.0 - kappa), rng);
            }
            model.set_one_qubit(
                q, gate,
                PlacementError::single(
                    StochasticPauliChannel::from_entries(n, std::move(entries))));
            if (diagnostics != nullptr) {
                diagnostics->draws.push_back(
                    {RandomModelDraw::Kind::OneQubit, q, 0, gate, gamma, kappa, neighbor_share});
            }
        }
    }

    for (const auto& [a, b] : graph.edges()) {
        for (const auto& [control, target] :
             {std::pair<uint32_t, uint32_t>{a, b}, std::pair<uint32_t, uint32_t>{b, a}}) {
            const double gamma = rng.uniform(spec.gamma_two_qubit[0], spec.gamma_two_qubit[1]);
            const double kappa = rng.uniform(spec.kappa[0], spec.kappa[1]);

            std::vector<uint32_t> spectators;
            for (uint32_t u : graph.neighbors(control)) {
                spectators.push_back(u);
            }
            for (uint32_t u : graph.neighbors(target)) {
                spectators.push_back(u);
            }
            std::sort(spectators.begin(), spectators.end());
            spectators.erase(
                std::unique(spectators.begin(), spectators.end()), spectators.end());
            std::erase_if(spectators, [&](uint32_t u) { return u == control || u == target; });

            std::vector<ChannelEntry> entries;
            append_proportional_entries(
                entries, two_qubit_pair_targets(n, control, target), gamma * kappa, rng);
            if (!spectators.empty()) {
                append_proportional_entries(
                    entries, neighbor_xyz_targets(n, spectators), gamma * (1.0 - kappa), rng);
            }
            model.set_cnot(
                control, target,
                PlacementError::single(
                    StochasticPauliChannel::from_entries(n, std::move(entries))));
            if (diagnostics != nullptr) {
                diagnostics->draws.push_back(
                    {RandomModelDraw::Kind::Cnot, control, target, 0, gamma, kappa,
                     !spectators.empty()});
            }
        }
    }
    return model;
}

ErrorModel build_model1(
    const ConnectivityGraph& device,
    const std::vector<uint32_t>& qubits,
    const CrosstalkSpec& spec) {
    const ConnectivityGraph graph = device.induced(qubits);
    const uint32_t n = graph.num_sites();
    ErrorModel model(n);

    std::vector<StochasticPauliChannel> local(n);
    for (uint32_t q = 0; q < n; q++) {
        model.set_readout(q, spec.readout_probability);
        StochasticPauliChannel dep1(n);
        {
            std::vector<ChannelEntry> entries;
            for (PauliLetter p : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) {
                entries.push_back(
                    {PauliString::single(n, q, p), spec.one_qubit_infidelity / 3.0});
            }
            dep1 = StochasticPauliChannel::from_entries(n, std::move(entries));
        }
        for (uint8_t gate = 0; gate < CliffordTable::kNumGates; gate++) {
            model.set_one_qubit(q, gate, PlacementError::single(dep1));
        }
    }

    for (const auto& [a, b] : graph.edges()) {
        for (const auto& [control, target] :
             {std::pair<uint32_t, uint32_t>{a, b}, std::pair<uint32_t, uint32_t>{b, a}}) {
            std::vector<ChannelEntry> entries;
            for (const PauliString& p : two_qubit_pair_targets(n, control, target)) {
                entries.push_back({p, spec.two_qubit_infidelity / 15.0});
            }
            model.set_cnot(
                control, target,
                PlacementError::single(
                    StochasticPauliChannel::from_entries(n, std::move(entries))));
        }
    }
    return model;
}

ErrorModel build_model2(
    const ConnectivityGraph& device,
    const std::vector<uint32_t>& qubits,
    const CrosstalkSpec& spec) {
    ErrorModel model = build_model1(device, qubits, spec);
    const uint32_t n = model.num_qubits();

    // Device-level BFS distances from each benchmarked qubit's global site.
    std::vector<std::vector<uint32_t>> dist(n);
    for (uint32_t i = 0; i < n; i++) {
        dist[i] = device.distances_from(qubits[i]);
    }

    // Rebuild each CNOT error as [pair depolarizing, crosstalk factors...].
    const auto cnots = model.cnot_errors();
    for (const auto& [key, error] : cnots) {
        const auto [control, target] = key;
        std::vector<StochasticPauliChannel> factors = error.factors();
        for (uint32_t u = 0; u < n; u++) {
            if (u == control || u == target) {
                continue;
            }
            const uint32_t d = std::min(
                dist[u][qubits[control]], dist[u][qubits[target]]);
            if (d == std::numeric_limits<uint32_t>::max()) {
                throw std::invalid_argument(
                    "model 2 requires a connected device lattice");
            }
            const double delta =
                spec.crosstalk_amplitude * std::pow(spec.crosstalk_decay, d);
            std::vector<ChannelEntry> entries;
            for (PauliLetter p : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) {
                entries.push_back({PauliString::single(n, u, p), delta / 3.0});
            }
            factors.push_back(StochasticPauliChannel::from_entries(n, std::move(entries)));
        }
        model.set_cnot(control, target, PlacementError(std::move(factors)));
    }
    return model;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json channel_to_json(const StochasticPauliChannel& channel) {
    ordered_json entries = ordered_json::array();
    for (const ChannelEntry& e : channel.entries()) {
        entries.push_back(ordered_json::array({e.pauli.label(), e.probability}));
    }
    return entries;
}

StochasticPauliChannel channel_from_json(uint32_t n, const ordered_json& j) {
    std::vector<ChannelEntry> entries;
    for (const auto& e : j) {
        entries.push_back(
            {PauliString::from_label(e.at(0).get<std::string>()), e.at(1).get<double>()});
    }
    return StochasticPauliChannel::from_entries(n, std::move(entries));
}

ordered_json placement_to_json(const PlacementError& error) {
    ordered_json factors = ordered_json::array();
    for (const StochasticPauliChannel& f : error.factors()) {
        factors.push_back(channel_to_json(f));
    }
    return factors;
}

PlacementError placement_from_json(uint32_t n, const ordered_json& j) {
    std::vector<StochasticPauliChannel> factors;
    for (const auto& f : j) {
        factors.push_back(channel_from_json(n, f));
    }
    return PlacementError(std::move(factors));
}

}  // namespace

std::string model_to_json(const ErrorModel& model) {
    const uint32_t n = model.num_qubits();
    ordered_json j;
    j["schema_version"] = 1;
    j["n"] = n;
    j["allow_missing_cnots"] = model.allow_missing_cnots();
    j["readout"] = model.readout();
    j["one_qubit"] = ordered_json::array();
    for (uint32_t q = 0; q < n; q++) {
        for (uint32_t gate = 0; gate < CliffordTable::kNumGates; gate++) {
            const PlacementError& e = model.one_qubit(q, static_cast<uint8_t>(gate));
            if (e.is_noiseless()) {
                continue;
            }
            j["one_qubit"].push_back(ordered_json{
                {"qubit", q}, {"gate", gate}, {"factors", placement_to_json(e)}});
        }
    }
    j["cnot"] = ordered_json::array();
    for (const auto& [key, e] : model.cnot_errors()) {
        j["cnot"].push_back(ordered_json{
            {"control", key.first},
            {"target", key.second},
            {"factors", placement_to_json(e)}});
    }
    return j.dump(2) + "\n";
}

ErrorModel model_from_json(const std::string& json_text) {
    const auto j = ordered_json::parse(json_text);
    if (!j.contains("schema_version") || j.at("schema_version").get<int>() != 1) {
        throw std::invalid_argument("model JSON: unsupported or missing schema_version");
    }
    const auto n = j.at("n").get<uint32_t>();
    const bool allow_missing = j.value("allow_missing_cnots", false);
    ErrorModel model(n, allow_missing);
    const auto readout = j.at("readout").get<std::vector<double>>();
    if (readout.size() != n) {
        throw std::invalid_argument("model JSON: readout vector has the wrong length");
    }
    for (uint32_t q = 0; q < n; q++) {
        model.set_readout(q, readout[q]);
    }
    for (const auto& rec : j.at("one_qubit")) {
        model.set_one_qubit(
            rec.at("qubit").get<uint32_t>(),
            static_cast<uint8_t>(rec.at("gate").get<uint32_t>()),
            placement_from_json(n, rec.at("factors")));
    }
    for (const auto& rec : j.at("cnot")) {
        model.set_cnot(
            rec.at("control").get<uint32_t>(),
            rec.at("target").get<uint32_t>(),
            placement_from_json(n, rec.at("factors")));
    }
    return model;
}

void write_model_file(const std::filesystem::path& path, const ErrorModel& model) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + path.string());
    }
    out << model_to_json(model);
    if (!out) {
        throw std::runtime_error("failed writing file: " + path.string());
    }
}

ErrorModel read_model_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return model_from_json(buffer.str());
}

}  // namespace mrb
