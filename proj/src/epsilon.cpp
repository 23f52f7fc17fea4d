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

#include "mrb/epsilon.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mrb/sampler.hpp"

namespace mrb {

EpsilonEstimate epsilon_layer(
    const Layer& layer,
    const ErrorModel& model,
    bool include_pauli_layer,
    Rng& rng,
    uint64_t samples) {
    if (samples < 100) {
        throw std::invalid_argument("epsilon_layer needs at least 100 samples");
    }
    layer.validate();
    if (!model.covers(layer)) {
        throw std::invalid_argument("error model does not cover the layer");
    }
    const uint32_t n = layer.num_qubits();

    uint64_t failures = 0;
    for (uint64_t s = 0; s < samples; s++) {
        PauliString frame(n);
        if (include_pauli_layer) {
            const Layer pauli_layer = sample_pauli_layer(n, rng);
            for (uint32_t q = 0; q < n; q++) {
                model.one_qubit(q, pauli_layer.at(q).gate).sample_into(frame, rng);
            }
            frame = conjugate_by_layer(frame, layer);
        }
        for (uint32_t q = 0; q < n; q++) {
            const Placement& p = layer.at(q);
            if (p.kind == PlacementKind::OneQubit) {
                model.one_qubit(q, p.gate).sample_into(frame, rng);
            } else if (p.kind == PlacementKind::CnotControl) {
                model.cnot(q, p.partner).sample_into(frame, rng);
            }
        }
        failures += frame.is_identity() ? 0 : 1;
    }

    EpsilonEstimate estimate;
    estimate.samples = samples;
    estimate.value = static_cast<double>(failures) / static_cast<double>(samples);
    estimate.std_error =
        std::sqrt(estimate.value * (1.0 - estimate.value) / static_cast<double>(samples));
    return estimate;
}

EpsilonOmegaEstimate epsilon_omega(
    const MrbDesign& design,
    const ErrorModel& model,
    uint64_t layer_samples,
    uint64_t per_layer_samples,
    Rng& rng) {
    if (layer_samples < 2) {
        throw std::invalid_argument("epsilon_omega needs at least 2 layer samples");
    }
    design.validate();
    const ConnectivityGraph graph = design.benchmark_graph();

    std::vector<double> values;
    values.reserve(layer_samples);
    for (uint64_t j = 0; j < layer_samples; j++) {
        const Layer layer = sample_layer(graph, design.sampler, rng);
        values.push_back(
            epsilon_layer(layer, model, /*include_pauli_layer=*/true, rng, per_layer_samples)
                .value);
    }

    double mean = 0.0;
    for (double v : values) {
        mean += v;
    }
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) {
        var += (v - mean) * (v - mean);
    }
    var /= static_cast<double>(values.size() - 1);

    EpsilonOmegaEstimate estimate;
    estimate.value = mean;
    estimate.std_error = std::sqrt(var / static_cast<double>(values.size()));
    estimate.layer_samples = layer_samples;
    estimate.per_layer_samples = per_layer_samples;
    return estimate;
}

}  // namespace mrb
