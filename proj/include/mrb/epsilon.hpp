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

#ifndef MRB_EPSILON_HPP
#define MRB_EPSILON_HPP

#include <cstdint>

#include "mrb/circuit.hpp"
#include "mrb/error_model.hpp"
#include "mrb/layer.hpp"
#include "mrb/rng.hpp"

namespace mrb {

struct EpsilonEstimate {
    double value = 0.0;
    double std_error = 0.0;
    uint64_t samples = 0;
};

/// Monte-Carlo estimate of the error rate epsilon(L) of one layer: the
/// probability that the layer's composite error operator is not the identity.
/// With `include_pauli_layer` (the benchmark's convention) the layer is
/// dressed by a uniformly random preceding Pauli layer whose gate errors are
/// propagated through L and composed with L's own errors.
///
/// Throws std::invalid_argument when samples < 100 (the estimate would be
/// useless) or on a coverage gap.
EpsilonEstimate epsilon_layer(
    const Layer& layer,
    const ErrorModel& model,
    bool include_pauli_layer,
    Rng& rng,
    uint64_t samples);

struct EpsilonOmegaEstimate {
    double value = 0.0;
    double std_error = 0.0;
    uint64_t layer_samples = 0;
    uint64_t per_layer_samples = 0;
};

/// The benchmark comparator epsilon_Omega: the mean of epsilon(L) over layers
/// L drawn from the design's sampler, estimated from `layer_samples` sampled
/// layers with `per_layer_samples` Monte-Carlo samples each. The standard
/// error is the empirical sd of the per-layer estimates divided by
/// sqrt(layer_samples), which absorbs both sampling levels.
EpsilonOmegaEstimate epsilon_omega(
    const MrbDesign& design,
    const ErrorModel& model,
    uint64_t layer_samples,
    uint64_t per_layer_samples,
    Rng& rng);

}  // namespace mrb

#endif
