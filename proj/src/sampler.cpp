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

#include "mrb/sampler.hpp"

#include <algorithm>
#include <stdexcept>

namespace mrb {

std::string sampler_kind_name(SamplerKind kind) {
    switch (kind) {
        case SamplerKind::EdgeGrab:
            return "edge_grab";
        case SamplerKind::SingleCnot:
            return "single_cnot";
    }
    throw std::logic_error("invalid SamplerKind value");
}

SamplerKind sampler_kind_from_name(const std::string& name) {
    if (name == "edge_grab") {
        return SamplerKind::EdgeGrab;
    }
    if (name == "single_cnot") {
        return SamplerKind::SingleCnot;
    }
    throw std::invalid_argument("unknown sampler kind '" + name + "'");
}

void SamplerSpec::validate(const ConnectivityGraph& graph) const {
    if (kind == SamplerKind::EdgeGrab) {
        if (!(xi >= 0.0) || xi > 1.0) {
            throw std::invalid_argument("edge_grab density xi must lie in [0, 1]");
        }
        if (xi > 0.0 && graph.edges().empty() && graph.num_sites() > 1) {
            throw std::invalid_argument(
                "edge_grab density xi > 0 is unachievable on a graph with no edges");
        }
    }
}

namespace {

void fill_with_random_cliffords(Layer& layer, Rng& rng) {
    for (uint32_t q = 0; q < layer.num_qubits(); q++) {
        if (layer.at(q).kind == PlacementKind::Idle) {
            layer.set_one_qubit(q, static_cast<uint8_t>(rng.below(24)));
        }
    }
}

void place_random_direction_cnot(
    Layer& layer, std::pair<uint32_t, uint32_t> edge, Rng& rng) {
    if (rng.below(2) == 0) {
        layer.set_cnot(edge.first, edge.second);
    } else {
        layer.set_cnot(edge.second, edge.first);
    }
}

Layer sample_edge_grab_layer(
    const ConnectivityGraph& graph, double xi, Rng& rng, SamplerStats* stats) {
    const uint32_t n = graph.num_sites();
    Layer layer(n);

    // Random maximal matching: shuffle the edge list, then greedily keep
    // every edge whose endpoints are still free.
    std::vector<std::pair<uint32_t, uint32_t>> order = graph.edges();
    for (size_t i = order.size(); i > 1; i--) {
        std::swap(order[i - 1], order[rng.below(static_cast<uint32_t>(i))]);
    }
    std::vector<bool> used(n, false);
    std::vector<std::pair<uint32_t, uint32_t>> matching;
    for (const auto& [a, b] : order) {
        if (!used[a] && !used[b]) {
            used[a] = used[b] = true;
            matching.push_back({a, b});
        }
    }

    uint64_t cnots = 0;
    bool clamped = false;
    if (!matching.empty() && xi > 0.0) {
        double p_edge = xi * n / (2.0 * static_cast<double>(matching.size()));
        if (p_edge > 1.0) {
            p_edge = 1.0;
            clamped = true;
        }
        for (const auto& edge : matching) {
            if (rng.bernoulli(p_edge)) {
                place_random_direction_cnot(layer, edge, rng);
                cnots++;
            }
        }
    }
    fill_with_random_cliffords(layer, rng);

    if (stats != nullptr) {
        stats->layers++;
        stats->cnots += cnots;
        stats->clamp_events += clamped ? 1 : 0;
    }
    return layer;
}

Layer sample_single_cnot_layer(const ConnectivityGraph& graph, Rng& rng, SamplerStats* stats) {
    const uint32_t n = graph.num_sites();
    Layer layer(n);
    uint64_t cnots = 0;
    if (!graph.edges().empty() && rng.bernoulli(SamplerSpec::kSingleCnotProbability)) {
        const auto& edge = graph.edges()[rng.below(static_cast<uint32_t>(graph.edges().size()))];
        place_random_direction_cnot(layer, edge, rng);
        cnots = 1;
    }
    fill_with_random_cliffords(layer, rng);
    if (stats != nullptr) {
        stats->layers++;
        stats->cnots += cnots;
    }
    return layer;
}

}  // namespace

Layer sample_layer(
    const ConnectivityGraph& graph, const SamplerSpec& spec, Rng& rng, SamplerStats* stats) {
    spec.validate(graph);
    switch (spec.kind) {
        case SamplerKind::EdgeGrab:
            return sample_edge_grab_layer(graph, spec.xi, rng, stats);
        case SamplerKind::SingleCnot:
            return sample_single_cnot_layer(graph, rng, stats);
    }
    throw std::logic_error("invalid SamplerKind value");
}

Layer sample_pauli_layer(uint32_t num_qubits, Rng& rng) {
    Layer layer(num_qubits);
    for (uint32_t q = 0; q < num_qubits; q++) {
        layer.set_one_qubit(q, static_cast<uint8_t>(rng.below(4)));
    }
    return layer;
}

Layer sample_uniform_clifford_layer(uint32_t num_qubits, Rng& rng) {
    Layer layer(num_qubits);
    for (uint32_t q = 0; q < num_qubits; q++) {
        layer.set_one_qubit(q, static_cast<uint8_t>(rng.below(24)));
    }
    return layer;
}

}  // namespace mrb
