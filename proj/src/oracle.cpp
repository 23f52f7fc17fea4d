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

#include "mrb/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <sstream>

#include <boost/math/distributions/chi_squared.hpp>

#include "mrb/clifford1q.hpp"
#include "mrb/epsilon.hpp"
#include "mrb/rng.hpp"

namespace mrb {

namespace {

double four_to_n_minus_1(uint32_t num_qubits) {
    if (num_qubits <= 16) {
        return static_cast<double>((uint64_t{1} << (2 * num_qubits)) - 1);
    }
    return std::exp2(2.0 * num_qubits) - 1.0;
}

}  // namespace

DensePauliDistribution::DensePauliDistribution(uint32_t num_qubits) : n_(num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw std::invalid_argument(
            "dense Pauli distributions are capped at " + std::to_string(kMaxQubits) +
            " qubits; got " + std::to_string(num_qubits));
    }
    probs_.assign(size_t{1} << (2 * num_qubits), 0.0);
    probs_[0] = 1.0;
}

DensePauliDistribution DensePauliDistribution::from_channel(const StochasticPauliChannel& channel) {
    DensePauliDistribution dist(channel.num_qubits());
    dist.probs_[0] = 1.0 - channel.error_probability();
    for (const auto& entry : channel.entries()) {
        dist.probs_[dist.index_of(entry.pauli)] += entry.probability;
    }
    return dist;
}

DensePauliDistribution DensePauliDistribution::from_placement(
    uint32_t num_qubits, const PlacementError& error) {
    DensePauliDistribution dist(num_qubits);
    for (const auto& factor : error.factors()) {
        dist = compose_dense(dist, from_channel(factor));
    }
    return dist;
}

double DensePauliDistribution::error_probability() const {
    double total = 0.0;
    for (size_t i = 1; i < probs_.size(); i++) total += probs_[i];
    return total;
}

double DensePauliDistribution::polarization() const {
    return polarization_from_infidelity(n_, error_probability());
}

size_t DensePauliDistribution::index_of(const PauliString& p) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("Pauli width does not match the distribution");
    }
    const uint64_t mask = (uint64_t{1} << n_) - 1;
    const uint64_t x = p.x_words()[0] & mask;
    const uint64_t z = p.z_words()[0] & mask;
    return static_cast<size_t>((z << n_) | x);
}

PauliString DensePauliDistribution::pauli_at(size_t index) const {
    if (index >= probs_.size()) {
        throw std::invalid_argument("Pauli index out of range");
    }
    const uint64_t x = index & ((uint64_t{1} << n_) - 1);
    const uint64_t z = index >> n_;
    PauliString p(n_);
    for (uint32_t q = 0; q < n_; q++) {
        const uint8_t bits = static_cast<uint8_t>(((x >> q) & 1) | (((z >> q) & 1) << 1));
        p.set(q, static_cast<PauliLetter>(bits));
    }
    return p;
}

void DensePauliDistribution::validate() const {
    double total = 0.0;
    for (double p : probs_) {
        if (p < -1e-12) {
            throw std::invalid_argument("dense distribution has a negative probability");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("dense distribution does not sum to 1");
    }
}

DensePauliDistribution compose_dense(
    const DensePauliDistribution& a, const DensePauliDistribution& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("cannot compose distributions of different widths");
    }
    DensePauliDistribution out(a.num_qubits());
    out.add(0, -1.0);  // clear the identity point mass
    const size_t size = a.size();
    for (size_t i = 0; i < size; i++) {
        const double pa = a.at(i);
        if (pa == 0.0) continue;
        for (size_t j = 0; j < size; j++) {
            out.add(i ^ j, pa * b.at(j));
        }
    }
    return out;
}

DensePauliDistribution conjugate_dense(const DensePauliDistribution& dist, const Layer& layer) {
    if (layer.num_qubits() != dist.num_qubits()) {
        throw std::invalid_argument("layer width does not match the distribution");
    }
    DensePauliDistribution out(dist.num_qubits());
    out.add(0, -1.0);
    for (size_t i = 0; i < dist.size(); i++) {
        const double p = dist.at(i);
        if (p == 0.0) continue;
        const PauliString image = conjugate_by_layer(dist.pauli_at(i), layer);
        out.add(out.index_of(image), p);
    }
    return out;
}

double eta_dense(const DensePauliDistribution& a, const DensePauliDistribution& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("eta needs equal-width distributions");
    }
    double cross = 0.0;
    for (size_t i = 1; i < a.size(); i++) cross += a.at(i) * b.at(i);
    const double m = four_to_n_minus_1(a.num_qubits());
    return cross - a.error_probability() * b.error_probability() / m;
}

double eta_sparse(const StochasticPauliChannel& a, const StochasticPauliChannel& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("eta needs equal-width channels");
    }
    double cross = 0.0;
    for (const auto& ea : a.entries()) {
        for (const auto& eb : b.entries()) {
            if (ea.pauli == eb.pauli) {
                cross += ea.probability * eb.probability;
                break;
            }
        }
    }
    const double m = four_to_n_minus_1(a.num_qubits());
    return cross - a.error_probability() * b.error_probability() / m;
}

double gamma_composition_prefactor(uint32_t num_qubits) {
    const double four_to_minus_n = std::exp2(-2.0 * static_cast<double>(num_qubits));
    return 1.0 / (1.0 - four_to_minus_n);
}

DensePauliDistribution twirl_1q_clifford(const DensePauliDistribution& channel) {
    if (channel.num_qubits() != 1) {
        throw std::invalid_argument("the local Clifford twirl is defined on 1 qubit");
    }
    const CliffordTable& table = CliffordTable::instance();
    DensePauliDistribution out(1);
    out.add(0, -1.0);
    for (uint8_t g = 0; g < CliffordTable::kNumGates; g++) {
        for (size_t code = 0; code < 4; code++) {
            // For n = 1 the Pauli index coincides with the PauliLetter value.
            const PauliLetter image = table.image_letter(g, static_cast<PauliLetter>(code));
            out.add(static_cast<size_t>(image), channel.at(code) / CliffordTable::kNumGates);
        }
    }
    return out;
}

DensePauliDistribution dense_layer_error(const ErrorModel& model, const Layer& layer) {
    const uint32_t n = layer.num_qubits();
    if (model.num_qubits() != n) {
        throw std::invalid_argument("model width does not match the layer");
    }
    DensePauliDistribution out(n);
    for (uint32_t q = 0; q < n; q++) {
        const Placement& placement = layer.at(q);
        if (placement.kind == PlacementKind::OneQubit) {
            out = compose_dense(
                out, DensePauliDistribution::from_placement(n, model.one_qubit(q, placement.gate)));
        } else if (placement.kind == PlacementKind::CnotControl) {
            out = compose_dense(
                out, DensePauliDistribution::from_placement(n, model.cnot(q, placement.partner)));
        }
    }
    return out;
}

WeightTransferMatrix build_weight_transfer(uint32_t num_qubits) {
    if (num_qubits < 1) {
        throw std::invalid_argument("the weight transfer matrix needs n >= 1");
    }
    const uint32_t size = num_qubits + 1;
    // Pascal's triangle, in doubles (exact through n = 16 and far beyond).
    std::vector<std::vector<double>> binomial(size, std::vector<double>(size, 0.0));
    for (uint32_t k = 0; k < size; k++) {
        binomial[k][0] = 1.0;
        for (uint32_t j = 1; j <= k; j++) {
            binomial[k][j] = binomial[k - 1][j - 1] + (j <= k - 1 ? binomial[k - 1][j] : 0.0);
        }
    }
    WeightTransferMatrix matrix;
    matrix.n = num_qubits;
    matrix.m.assign(size, std::vector<double>(size, 0.0));
    for (uint32_t k = 0; k < size; k++) {
        const double three_to_k = std::pow(3.0, static_cast<double>(k));
        for (uint32_t j = 0; j <= k; j++) {
            matrix.m[j][k] = binomial[k][j] * std::exp2(static_cast<double>(j)) / three_to_k;
        }
    }
    return matrix;
}

std::vector<double> apply_weight_transfer(
    const WeightTransferMatrix& matrix, const std::vector<double>& weights) {
    const size_t size = matrix.n + 1;
    if (weights.size() != size) {
        throw std::invalid_argument("weight distribution has the wrong number of bins");
    }
    std::vector<double> h(size, 0.0);
    for (size_t j = 0; j < size; j++) {
        for (size_t k = 0; k < size; k++) {
            h[j] += matrix.m[j][k] * weights[k];
        }
    }
    return h;
}

double recover_p0(const std::vector<double>& h) {
    double total = 0.0;
    double coeff = 1.0;
    for (double hk : h) {
        total += coeff * hk;
        coeff *= -0.5;
    }
    return total;
}

bool weight_transfer_identities_exact(uint32_t num_qubits) {
    if (num_qubits > 16) {
        throw std::invalid_argument("exact integer identities are checked through n = 16");
    }
    // Integer Pascal's triangle.
    std::vector<std::vector<uint64_t>> binomial(
        num_qubits + 1, std::vector<uint64_t>(num_qubits + 1, 0));
    for (uint32_t k = 0; k <= num_qubits; k++) {
        binomial[k][0] = 1;
        for (uint32_t j = 1; j <= k; j++) {
            binomial[k][j] = binomial[k - 1][j - 1] + (j <= k - 1 ? binomial[k - 1][j] : 0);
        }
    }
    for (uint32_t k = 0; k <= num_qubits; k++) {
        uint64_t column_sum = 0;
        uint64_t even_sum = 0;
        uint64_t odd_sum = 0;
        uint64_t three_to_k = 1;
        for (uint32_t i = 0; i < k; i++) three_to_k *= 3;
        for (uint32_t j = 0; j <= k; j++) {
            column_sum += binomial[k][j] << j;
            if (j % 2 == 0) {
                even_sum += binomial[k][j];
            } else {
                odd_sum += binomial[k][j];
            }
        }
        if (column_sum != three_to_k) return false;
        if (k >= 1 && even_sum != odd_sum) return false;
    }
    return true;
}

std::string dense_statevector_run(const MirrorCircuit& circuit) {
    constexpr uint32_t kMaxStatevectorQubits = 4;
    const uint32_t n = circuit.n;
    if (n == 0 || n > kMaxStatevectorQubits) {
        throw std::invalid_argument(
            "the statevector oracle is capped at " + std::to_string(kMaxStatevectorQubits) +
            " qubits; got " + std::to_string(n));
    }
    circuit.validate();
    const CliffordTable& table = CliffordTable::instance();
    std::vector<std::complex<double>> amp(size_t{1} << n, 0.0);
    amp[0] = 1.0;
    for (const Layer& layer : circuit.layers) {
        for (uint32_t q = 0; q < n; q++) {
            const Placement& placement = layer.at(q);
            if (placement.kind == PlacementKind::OneQubit) {
                const auto& u = table.unitary(placement.gate);
                const size_t bit = size_t{1} << q;
                for (size_t i = 0; i < amp.size(); i++) {
                    if (i & bit) continue;
                    const std::complex<double> a0 = amp[i];
                    const std::complex<double> a1 = amp[i | bit];
                    amp[i] = u[0] * a0 + u[1] * a1;
                    amp[i | bit] = u[2] * a0 + u[3] * a1;
                }
            } else if (placement.kind == PlacementKind::CnotControl) {
                const size_t control_bit = size_t{1} << q;
                const size_t target_bit = size_t{1} << placement.partner;
                for (size_t i = 0; i < amp.size(); i++) {
                    if ((i & control_bit) && !(i & target_bit)) {
                        std::swap(amp[i], amp[i | target_bit]);
                    }
                }
            }
        }
    }
    size_t best = 0;
    double best_prob = 0.0;
    for (size_t i = 0; i < amp.size(); i++) {
        const double prob = std::norm(amp[i]);
        if (prob > best_prob) {
            best_prob = prob;
            best = i;
        }
    }
    if (best_prob < 1.0 - 1e-9) {
        std::ostringstream message;
        message << "final state is not a computational basis state (max probability "
                << best_prob << ")";
        throw NonBasisState(message.str());
    }
    std::string bits(n, '0');
    for (uint32_t q = 0; q < n; q++) {
        if (best & (size_t{1} << q)) bits[q] = '1';
    }
    return bits;
}

size_t output_string_index(const std::string& bits) {
    size_t index = 0;
    for (size_t q = 0; q < bits.size(); q++) {
        if (bits[q] == '1') {
            index |= size_t{1} << q;
        } else if (bits[q] != '0') {
            throw std::invalid_argument("bit strings may contain only '0' and '1'");
        }
    }
    return index;
}

std::vector<double> exact_output_distribution(
    const MirrorCircuit& circuit, const ErrorModel& model) {
    const uint32_t n = circuit.n;
    circuit.validate();
    model.require_covers(circuit);
    if (n > DensePauliDistribution::kMaxQubits) {
        throw std::invalid_argument("the exact output oracle is capped at 3 qubits");
    }

    DensePauliDistribution frame(n);
    for (const Layer& layer : circuit.layers) {
        frame = conjugate_dense(frame, layer);
        frame = compose_dense(frame, dense_layer_error(model, layer));
    }

    // Only the frame's X support flips output bits; marginalize z away.
    const size_t num_strings = size_t{1} << n;
    std::vector<double> flips(num_strings, 0.0);
    for (size_t i = 0; i < frame.size(); i++) {
        flips[i & (num_strings - 1)] += frame.at(i);
    }

    for (uint32_t q = 0; q < n; q++) {
        const double flip_prob = model.readout()[q];
        if (flip_prob == 0.0) continue;
        std::vector<double> next(num_strings, 0.0);
        const size_t bit = size_t{1} << q;
        for (size_t mask = 0; mask < num_strings; mask++) {
            next[mask] += flips[mask] * (1.0 - flip_prob);
            next[mask ^ bit] += flips[mask] * flip_prob;
        }
        flips = std::move(next);
    }

    const size_t target_index = output_string_index(circuit.target);
    std::vector<double> out(num_strings, 0.0);
    for (size_t mask = 0; mask < num_strings; mask++) {
        out[mask ^ target_index] = flips[mask];
    }
    return out;
}

double exact_epsilon_layer(
    const Layer& layer, const ErrorModel& model, bool include_pauli_layer) {
    const uint32_t n = layer.num_qubits();
    if (n > DensePauliDistribution::kMaxQubits) {
        throw std::invalid_argument("the exact epsilon oracle is capped at 3 qubits");
    }
    if (!model.covers(layer)) {
        throw std::invalid_argument("the model does not cover every placement in the layer");
    }
    const DensePauliDistribution layer_error = dense_layer_error(model, layer);
    if (!include_pauli_layer) {
        return layer_error.error_probability();
    }
    const size_t num_pauli_layers = size_t{1} << (2 * n);
    double total = 0.0;
    for (size_t combo = 0; combo < num_pauli_layers; combo++) {
        DensePauliDistribution dressed(n);
        for (uint32_t q = 0; q < n; q++) {
            const uint8_t gate = static_cast<uint8_t>((combo >> (2 * q)) & 3);
            dressed = compose_dense(
                dressed, DensePauliDistribution::from_placement(n, model.one_qubit(q, gate)));
        }
        dressed = conjugate_dense(dressed, layer);
        dressed = compose_dense(dressed, layer_error);
        total += dressed.error_probability();
    }
    return total / static_cast<double>(num_pauli_layers);
}

double chi_square_p_value(const ShotResult& observed, const std::vector<double>& expected_probs) {
    if (expected_probs.size() != size_t{1} << observed.n) {
        throw std::invalid_argument("expected distribution has the wrong size");
    }
    const double total_shots = static_cast<double>(observed.total_shots);
    std::vector<double> observed_counts(expected_probs.size(), 0.0);
    for (const auto& [bits, count] : observed.counts) {
        observed_counts.at(output_string_index(bits)) += count;
    }

    double chi2 = 0.0;
    double pooled_observed = 0.0;
    double pooled_expected = 0.0;
    uint32_t cells = 0;
    for (size_t i = 0; i < expected_probs.size(); i++) {
        const double expected = expected_probs[i] * total_shots;
        if (expected >= 5.0) {
            const double delta = observed_counts[i] - expected;
            chi2 += delta * delta / expected;
            cells++;
        } else {
            pooled_observed += observed_counts[i];
            pooled_expected += expected;
        }
    }
    if (pooled_expected > 0.0) {
        const double delta = pooled_observed - pooled_expected;
        chi2 += delta * delta / pooled_expected;
        cells++;
    } else if (pooled_observed > 0.0) {
        return 0.0;  // observed an outcome the model says is impossible
    }
    if (cells < 2) return 1.0;
    const boost::math::chi_squared_distribution<double> dist(cells - 1);
    return boost::math::cdf(boost::math::complement(dist, chi2));
}

namespace {

StochasticPauliChannel random_sparse_channel(
    uint32_t num_qubits, uint32_t max_entries, double max_total, Rng& rng) {
    const size_t num_paulis = size_t{1} << (2 * num_qubits);
    const uint32_t want = 1 + static_cast<uint32_t>(rng.below(max_entries));
    std::set<size_t> picked;
    while (picked.size() < want && picked.size() < num_paulis - 1) {
        const size_t index = 1 + static_cast<size_t>(rng.below(num_paulis - 1));
        picked.insert(index);
    }
    std::vector<ChannelEntry> entries;
    DensePauliDistribution scratch(num_qubits);
    for (size_t index : picked) {
        ChannelEntry entry;
        entry.pauli = scratch.pauli_at(index);
        entry.probability = rng.uniform(0.0, max_total / static_cast<double>(picked.size()));
        entries.push_back(entry);
    }
    return StochasticPauliChannel::from_entries(num_qubits, std::move(entries));
}

MrbDesign tiny_design(uint32_t num_qubits, std::vector<uint32_t> depths, uint64_t master_seed) {
    MrbDesign design;
    design.device = ConnectivityGraph::path(num_qubits);
    design.qubits.resize(num_qubits);
    for (uint32_t q = 0; q < num_qubits; q++) design.qubits[q] = q;
    design.sampler.kind = num_qubits == 1 ? SamplerKind::SingleCnot : SamplerKind::EdgeGrab;
    design.sampler.xi = num_qubits == 1 ? 0.0 : 0.25;
    design.depths = std::move(depths);
    design.circuits_per_depth = 3;
    design.shots_per_circuit = 32;
    design.master_seed = master_seed;
    design.validate();
    return design;
}

using CheckBody = void (*)(uint64_t, std::ostringstream&);

ValidationCheck run_check(const char* name, uint64_t seed, CheckBody body) {
    ValidationCheck check;
    check.name = name;
    std::ostringstream detail;
    try {
        body(seed, detail);
        check.passed = true;
    } catch (const std::exception& e) {
        check.passed = false;
        detail << (detail.tellp() > 0 ? "; " : "") << e.what();
    }
    check.detail = detail.str();
    return check;
}

void require(bool condition, const std::string& message) {
    if (!condition) throw std::runtime_error(message);
}

void check_weight_transfer_exact(uint64_t, std::ostringstream& detail) {
    require(weight_transfer_identities_exact(16),
            "integer column/alternating identities failed");
    detail << "columns of M sum to 3^k and alternating rows cancel, exactly, through n=16";
}

void check_weight_transfer_round_trip(uint64_t seed, std::ostringstream& detail) {
    Rng rng(derive_seed(seed, SeedStream::Validation, 1));
    double worst = 0.0;
    for (uint32_t trial = 0; trial < 100; trial++) {
        const uint32_t n = 1 + static_cast<uint32_t>(rng.below(12));
        const WeightTransferMatrix matrix = build_weight_transfer(n);
        std::vector<double> weights(n + 1);
        double total = 0.0;
        for (auto& w : weights) {
            w = rng.real01();
            total += w;
        }
        for (auto& w : weights) w /= total;
        const std::vector<double> h = apply_weight_transfer(matrix, weights);
        worst = std::max(worst, std::abs(recover_p0(h) - weights[0]));
    }
    require(worst < 1e-12, "round-trip error " + std::to_string(worst));
    detail << "100 random weight distributions, n <= 12, worst |recovered - p0| = " << worst;
}

void check_uniform_asymptote(uint64_t, std::ostringstream& detail) {
    double worst = 0.0;
    for (uint32_t n = 1; n <= 8; n++) {
        std::vector<std::vector<double>> binomial(n + 1, std::vector<double>(n + 1, 0.0));
        for (uint32_t k = 0; k <= n; k++) {
            binomial[k][0] = 1.0;
            for (uint32_t j = 1; j <= k; j++) {
                binomial[k][j] = binomial[k - 1][j - 1] + (j <= k - 1 ? binomial[k - 1][j] : 0.0);
            }
        }
        std::vector<double> h(n + 1);
        for (uint32_t k = 0; k <= n; k++) {
            h[k] = binomial[n][k] * std::exp2(-static_cast<double>(n));
        }
        worst = std::max(worst, std::abs(recover_p0(h) - std::exp2(-2.0 * n)));
    }
    require(worst < 1e-12, "uniform-output asymptote error " + std::to_string(worst));
    detail << "binomial histograms recover 4^-n, worst error " << worst;
}

void check_gamma_composition(uint64_t seed, std::ostringstream& detail) {
    Rng rng(derive_seed(seed, SeedStream::Validation, 2));
    double worst_identity = 0.0;
    double worst_sparse = 0.0;
    for (uint32_t n = 1; n <= 3; n++) {
        for (uint32_t trial = 0; trial < 20; trial++) {
            const auto a = random_sparse_channel(n, 6, 0.3, rng);
            const auto b = random_sparse_channel(n, 6, 0.3, rng);
            const auto da = DensePauliDistribution::from_channel(a);
            const auto db = DensePauliDistribution::from_channel(b);
            const auto composite = compose_dense(da, db);
            composite.validate();
            const double lhs = composite.polarization();
            const double rhs = da.polarization() * db.polarization() +
                               gamma_composition_prefactor(n) * eta_dense(da, db);
            worst_identity = std::max(worst_identity, std::abs(lhs - rhs));
            worst_sparse = std::max(worst_sparse, std::abs(eta_dense(da, db) - eta_sparse(a, b)));
        }
    }
    require(worst_identity < 1e-12, "gamma identity error " + std::to_string(worst_identity));
    require(worst_sparse < 1e-12, "sparse/dense eta mismatch " + std::to_string(worst_sparse));
    detail << "gamma(AB) = gamma(A)gamma(B) + 4^n/(4^n-1) eta on 60 random sparse pairs, "
           << "worst error " << worst_identity;
}

void check_depolarizing_multiplicative(uint64_t, std::ostringstream& detail) {
    const auto depol = DensePauliDistribution::from_channel(
        StochasticPauliChannel::depolarizing(1, 0.01));
    const auto composite = compose_dense(depol, depol);
    const double gamma_error =
        std::abs(composite.polarization() - depol.polarization() * depol.polarization());
    const double eta_value = std::abs(eta_dense(depol, depol));
    require(gamma_error < 1e-14, "depolarizing gamma not multiplicative");
    require(eta_value < 1e-16, "depolarizing eta not zero");

    // K identical uniform errors: eta = eps^2 (1/K - 1/(4^n - 1)).
    const double eps = 0.02;
    std::vector<ChannelEntry> entries;
    for (const char* label : {"XI", "YZ", "ZZ"}) {
        entries.push_back(ChannelEntry{PauliString::from_label(label), eps / 3.0});
    }
    const auto sparse = StochasticPauliChannel::from_entries(2, entries);
    const double expected = eps * eps * (1.0 / 3.0 - 1.0 / 15.0);
    const double k_sparse_error = std::abs(eta_sparse(sparse, sparse) - expected);
    require(k_sparse_error < 1e-15, "K-sparse eta formula violated");
    detail << "depolarizing pairs multiply exactly; K-sparse eta matches eps^2(1/K - 1/(4^n-1))";
}

void check_twirl(uint64_t seed, std::ostringstream& detail) {
    Rng rng(derive_seed(seed, SeedStream::Validation, 3));
    double worst = 0.0;
    for (uint32_t trial = 0; trial < 100; trial++) {
        const auto channel =
            DensePauliDistribution::from_channel(random_sparse_channel(1, 3, 0.9, rng));
        const auto twirled = twirl_1q_clifford(channel);
        twirled.validate();
        worst = std::max(worst, std::abs(twirled.at(1) - twirled.at(2)));
        worst = std::max(worst, std::abs(twirled.at(1) - twirled.at(3)));
        worst = std::max(
            worst, std::abs(twirled.error_probability() - channel.error_probability()));
        const auto twice = twirl_1q_clifford(twirled);
        for (size_t i = 0; i < 4; i++) {
            worst = std::max(worst, std::abs(twice.at(i) - twirled.at(i)));
        }
    }
    require(worst < 1e-12, "twirl symmetry error " + std::to_string(worst));
    detail << "100 random channels: X=Y=Z marginals, eps preserved, idempotent; worst error "
           << worst;
}

void check_mirror_identity(uint64_t seed, std::ostringstream& detail) {
    uint32_t circuits = 0;
    for (uint32_t n = 1; n <= 4; n++) {
        const MrbDesign design = tiny_design(n, {0, 2, 8}, derive_seed(seed, SeedStream::Validation, 10 + n));
        const ErrorModel noiseless = ErrorModel::noiseless(n);
        for (uint32_t depth_index = 0; depth_index < design.depths.size(); depth_index++) {
            for (uint32_t k = 0; k < design.circuits_per_depth; k++) {
                const MirrorCircuit circuit = sample_circuit_at(design, depth_index, k);
                require(dense_statevector_run(circuit) == circuit.target,
                        "statevector output disagrees with the tableau target");
                const ShotResult shots = simulate_shots(circuit, noiseless, 16, circuit.seed);
                require(shots.counts.size() == 1 && shots.counts.count(circuit.target) == 1,
                        "noiseless simulation missed the target");
                circuits++;
            }
        }
    }
    detail << circuits << " random mirror circuits, n <= 4: statevector, tableau target and "
           << "noiseless sampler all agree";
}

void check_frame_tableau_dense(uint64_t seed, std::ostringstream& detail) {
    Rng rng(derive_seed(seed, SeedStream::Validation, 4));
    double min_p = 1.0;
    for (uint32_t instance = 0; instance < 4; instance++) {
        const uint32_t n = 1 + instance % 3;
        const MrbDesign design =
            tiny_design(n, {0, 4}, derive_seed(seed, SeedStream::Validation, 20 + instance));
        const MirrorCircuit circuit = sample_circuit_at(design, 1, instance % 3);
        const ErrorModel model =
            sample_random_model(design.benchmark_graph(), RandomModelSpec{}, rng);
        const uint64_t sim_seed = derive_seed(seed, SeedStream::Validation, 30 + instance);
        const ShotResult frame = simulate_shots(circuit, model, 20000, sim_seed);
        const ShotResult tableau = simulate_shots_tableau(circuit, model, 20000, sim_seed);
        require(frame.counts == tableau.counts,
                "frame and tableau executors disagree on identical draws");
        const std::vector<double> exact = exact_output_distribution(circuit, model);
        const double p = chi_square_p_value(frame, exact);
        min_p = std::min(min_p, p);
    }
    require(min_p > 0.001, "chi-square p-value " + std::to_string(min_p));
    detail << "frame == tableau shot-for-shot; frame vs dense oracle min p-value " << min_p;
}

void check_epsilon_oracle(uint64_t seed, std::ostringstream& detail) {
    const MrbDesign design = tiny_design(2, {0, 2}, derive_seed(seed, SeedStream::Validation, 40));
    const ErrorModel model = build_model1(design.device, design.qubits, CrosstalkSpec{});
    Layer layer(2);
    layer.set_cnot(0, 1);
    double worst_sigma = 0.0;
    for (bool include_pauli : {false, true}) {
        const double exact = exact_epsilon_layer(layer, model, include_pauli);
        Rng rng(derive_seed(seed, SeedStream::Validation, include_pauli ? 41 : 42));
        const EpsilonEstimate estimate = epsilon_layer(layer, model, include_pauli, rng, 200000);
        const double sigma = std::max(estimate.std_error, 1e-12);
        worst_sigma = std::max(worst_sigma, std::abs(estimate.value - exact) / sigma);
    }
    require(worst_sigma < 4.0,
            "Monte-Carlo epsilon " + std::to_string(worst_sigma) + " sigma from the dense value");
    detail << "epsilon(L) Monte-Carlo within " << worst_sigma << " sigma of dense composition";
}

}  // namespace

std::vector<ValidationCheck> run_validation_suite(uint64_t seed) {
    std::vector<ValidationCheck> checks;
    checks.push_back(run_check("weight_transfer_exact_identities", seed, check_weight_transfer_exact));
    checks.push_back(run_check("weight_transfer_round_trip", seed, check_weight_transfer_round_trip));
    checks.push_back(run_check("uniform_output_asymptote", seed, check_uniform_asymptote));
    checks.push_back(run_check("gamma_composition_identity", seed, check_gamma_composition));
    checks.push_back(run_check("depolarizing_multiplicativity", seed, check_depolarizing_multiplicative));
    checks.push_back(run_check("clifford_twirl_symmetrizes", seed, check_twirl));
    checks.push_back(run_check("mirror_identity_noiseless", seed, check_mirror_identity));
    checks.push_back(run_check("frame_tableau_dense_agreement", seed, check_frame_tableau_dense));
    checks.push_back(run_check("epsilon_layer_oracle", seed, check_epsilon_oracle));
    return checks;
}

bool all_passed(const std::vector<ValidationCheck>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) {
        return c.passed;
    });
}

}  // namespace mrb
