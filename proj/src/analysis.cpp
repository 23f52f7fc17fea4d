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

#include "mrb/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "mrb/channel.hpp"

namespace mrb {

double effective_polarization(const HammingHistogram& histogram) {
    if (histogram.h.size() != static_cast<size_t>(histogram.n) + 1) {
        throw std::invalid_argument("histogram has wrong number of bins");
    }
    double alternating = 0.0;
    double coeff = 1.0;
    for (uint32_t k = 0; k <= histogram.n; k++) {
        alternating += coeff * histogram.h[k];
        coeff *= -0.5;
    }
    const double four_to_minus_n = std::exp2(-2.0 * static_cast<double>(histogram.n));
    const double f = 1.0 / (1.0 - four_to_minus_n);
    return f * alternating - (f - 1.0);
}

std::vector<PolarizationPoint> polarization_points(const ResultsFile& results) {
    std::vector<PolarizationPoint> points;
    points.reserve(results.records.size());
    for (const auto& record : results.records) {
        const ShotResult shots = record.to_shot_result();
        const HammingHistogram hist = hamming_histogram(shots, record.target);
        points.push_back(PolarizationPoint{record.id, record.depth, effective_polarization(hist)});
    }
    return points;
}

std::vector<DepthMean> mean_polarizations(const std::vector<PolarizationPoint>& points) {
    std::map<uint32_t, std::vector<double>> by_depth;
    for (const auto& point : points) {
        by_depth[point.depth].push_back(point.s);
    }
    std::vector<DepthMean> means;
    means.reserve(by_depth.size());
    for (const auto& [depth, values] : by_depth) {
        DepthMean m;
        m.depth = depth;
        m.k = static_cast<uint32_t>(values.size());
        double sum = 0.0;
        for (double v : values) sum += v;
        m.s_mean = sum / static_cast<double>(values.size());
        if (values.size() > 1) {
            double ss = 0.0;
            for (double v : values) {
                const double d = v - m.s_mean;
                ss += d * d;
            }
            const double variance = ss / static_cast<double>(values.size() - 1);
            m.s_std_error = std::sqrt(variance / static_cast<double>(values.size()));
        }
        means.push_back(m);
    }
    return means;
}

namespace {

constexpr double kAmplitudeCap = 1.05;
constexpr uint32_t kGridPoints = 512;

struct FitData {
    std::vector<double> depth;
    std::vector<double> s;
    std::vector<double> weight;
};

/// Closed-form profiled amplitude at fixed decay, clamped to [0, cap].
double profiled_amplitude(const FitData& data, double p) {
    double num = 0.0;
    double den = 0.0;
    for (size_t i = 0; i < data.s.size(); i++) {
        const double pd = std::pow(p, data.depth[i]);
        num += data.weight[i] * data.s[i] * pd;
        den += data.weight[i] * pd * pd;
    }
    if (den <= 0.0) return 0.0;
    return std::clamp(num / den, 0.0, kAmplitudeCap);
}

double chi_square(const FitData& data, double p) {
    const double a = profiled_amplitude(data, p);
    double chi2 = 0.0;
    for (size_t i = 0; i < data.s.size(); i++) {
        const double resid = data.s[i] - a * std::pow(p, data.depth[i]);
        chi2 += data.weight[i] * resid * resid;
    }
    return chi2;
}

/// Brent's method (golden section + parabolic interpolation) on [a, b].
double brent_minimize(const std::function<double(double)>& f, double a, double b, double tol) {
    const double golden = 0.3819660112501051;
    double x = a + golden * (b - a);
    double w = x;
    double v = x;
    double fx = f(x);
    double fw = fx;
    double fv = fx;
    double step = 0.0;
    double prev_step = 0.0;
    for (int iter = 0; iter < 200; iter++) {
        const double mid = 0.5 * (a + b);
        const double tol1 = tol * std::abs(x) + 1e-15;
        const double tol2 = 2.0 * tol1;
        if (std::abs(x - mid) <= tol2 - 0.5 * (b - a)) break;
        bool parabolic = false;
        if (std::abs(prev_step) > tol1) {
            const double r = (x - w) * (fx - fv);
            double q = (x - v) * (fx - fw);
            double p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0) p = -p;
            q = std::abs(q);
            const double saved = prev_step;
            prev_step = step;
            if (std::abs(p) < std::abs(0.5 * q * saved) && p > q * (a - x) && p < q * (b - x)) {
                parabolic = true;
                step = p / q;
                const double u = x + step;
                if (u - a < tol2 || b - u < tol2) step = x < mid ? tol1 : -tol1;
            }
        }
        if (!parabolic) {
            prev_step = (x < mid ? b : a) - x;
            step = golden * prev_step;
        }
        const double u = std::abs(step) >= tol1 ? x + step : x + (step > 0.0 ? tol1 : -tol1);
        const double fu = f(u);
        if (fu <= fx) {
            if (u < x) {
                b = x;
            } else {
                a = x;
            }
            v = w;
            fv = fw;
            w = x;
            fw = fx;
            x = u;
            fx = fu;
        } else {
            if (u < x) {
                a = u;
            } else {
                b = u;
            }
            if (fu <= fw || w == x) {
                v = w;
                fv = fw;
                w = u;
                fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u;
                fv = fu;
            }
        }
    }
    return x;
}

/// Log-linear least-squares seed from the points with clearly positive means.
/// Returns -1 when fewer than two such points exist.
double log_linear_seed(const FitData& data) {
    double sum_d = 0.0;
    double sum_d2 = 0.0;
    double sum_y = 0.0;
    double sum_dy = 0.0;
    uint32_t count = 0;
    for (size_t i = 0; i < data.s.size(); i++) {
        if (data.s[i] <= 0.02) continue;
        const double y = std::log(data.s[i]);
        sum_d += data.depth[i];
        sum_d2 += data.depth[i] * data.depth[i];
        sum_y += y;
        sum_dy += data.depth[i] * y;
        count++;
    }
    if (count < 2) return -1.0;
    const double denom = count * sum_d2 - sum_d * sum_d;
    if (denom <= 0.0) return -1.0;
    const double slope = (count * sum_dy - sum_d * sum_y) / denom;
    return std::clamp(std::exp(slope), 0.0, 1.0);
}

DecayFit fit_core(const FitData& data, uint32_t num_qubits, bool weighted) {
    const auto objective = [&data](double p) { return chi_square(data, p); };

    double best_p = 0.0;
    double best_chi2 = objective(0.0);
    for (uint32_t i = 1; i <= kGridPoints; i++) {
        const double p = static_cast<double>(i) / kGridPoints;
        const double c = objective(p);
        if (c < best_chi2) {
            best_chi2 = c;
            best_p = p;
        }
    }
    const double seed = log_linear_seed(data);
    if (seed >= 0.0) {
        const double c = objective(seed);
        if (c < best_chi2) {
            best_chi2 = c;
            best_p = seed;
        }
    }
    const double half_width = 1.0 / kGridPoints;
    const double lo = std::max(0.0, best_p - half_width);
    const double hi = std::min(1.0, best_p + half_width);
    const double refined = brent_minimize(objective, lo, hi, 1e-12);
    if (objective(refined) < best_chi2) {
        best_p = refined;
        best_chi2 = objective(refined);
    }

    DecayFit fit;
    fit.decay = best_p;
    fit.amplitude = profiled_amplitude(data, best_p);
    fit.r = infidelity_from_polarization(num_qubits, best_p);
    fit.weighted = weighted;
    double rss = 0.0;
    for (size_t i = 0; i < data.s.size(); i++) {
        const double resid = data.s[i] - fit.amplitude * std::pow(best_p, data.depth[i]);
        rss += resid * resid;
    }
    fit.residual_rms = std::sqrt(rss / static_cast<double>(data.s.size()));
    return fit;
}

FitData prepare_fit_data(std::vector<DepthMean> means, bool* weighted_out) {
    if (means.empty()) {
        throw FitError("cannot fit an empty set of depth means");
    }
    std::sort(means.begin(), means.end(), [](const DepthMean& a, const DepthMean& b) {
        return std::tie(a.depth, a.s_mean, a.s_std_error, a.k) <
               std::tie(b.depth, b.s_mean, b.s_std_error, b.k);
    });
    // Exact duplicates carry no information; dropping them makes the fit
    // invariant under accidental double submission of a depth row.
    means.erase(std::unique(means.begin(), means.end()), means.end());
    uint32_t distinct = 1;
    for (size_t i = 1; i < means.size(); i++) {
        if (means[i].depth != means[i - 1].depth) distinct++;
    }
    if (distinct < 2) {
        throw FitError("decay fit requires at least 2 distinct depths");
    }
    double max_abs = 0.0;
    for (const auto& m : means) max_abs = std::max(max_abs, std::abs(m.s_mean));
    if (max_abs < 1e-9) {
        throw FitError("decay fit is degenerate: every mean polarization is zero");
    }

    bool weighted = true;
    for (const auto& m : means) {
        if (m.k < 5 || m.s_std_error <= 0.0) {
            weighted = false;
            break;
        }
    }
    FitData data;
    data.depth.reserve(means.size());
    data.s.reserve(means.size());
    data.weight.reserve(means.size());
    for (const auto& m : means) {
        data.depth.push_back(static_cast<double>(m.depth));
        data.s.push_back(m.s_mean);
        data.weight.push_back(weighted ? 1.0 / (m.s_std_error * m.s_std_error) : 1.0);
    }
    *weighted_out = weighted;
    return data;
}

}  // namespace

DecayFit fit_decay(std::vector<DepthMean> means, uint32_t num_qubits) {
    bool weighted = false;
    const FitData data = prepare_fit_data(std::move(means), &weighted);
    return fit_core(data, num_qubits, weighted);
}

DecayFit fit_decay_bootstrap(
    const std::vector<PolarizationPoint>& points,
    uint32_t num_qubits,
    uint32_t replicates,
    Rng& rng) {
    if (replicates < 100) {
        throw std::invalid_argument("bootstrap requires at least 100 replicates");
    }
    DecayFit fit = fit_decay(mean_polarizations(points), num_qubits);

    std::map<uint32_t, std::vector<double>> by_depth;
    for (const auto& point : points) {
        by_depth[point.depth].push_back(point.s);
    }

    std::vector<double> amplitudes;
    std::vector<double> decays;
    std::vector<double> rates;
    uint32_t degenerate = 0;
    for (uint32_t b = 0; b < replicates; b++) {
        std::vector<PolarizationPoint> resampled;
        resampled.reserve(points.size());
        for (const auto& [depth, values] : by_depth) {
            const uint64_t k = values.size();
            for (uint64_t i = 0; i < k; i++) {
                const uint64_t pick = rng.below(k);
                resampled.push_back(PolarizationPoint{"", depth, values[pick]});
            }
        }
        try {
            const DecayFit replicate = fit_decay(mean_polarizations(resampled), num_qubits);
            amplitudes.push_back(replicate.amplitude);
            decays.push_back(replicate.decay);
            rates.push_back(replicate.r);
        } catch (const FitError&) {
            degenerate++;
        }
    }
    if (amplitudes.size() < std::max<size_t>(2, replicates / 2)) {
        throw FitError("bootstrap failed: more than half of the resamples were degenerate");
    }

    const auto sample_sd = [](const std::vector<double>& values) {
        // A constant vector has exactly zero spread; computing it through the
        // mean would round the result away from 0.
        if (std::all_of(values.begin(), values.end(),
                        [&values](double v) { return v == values.front(); })) {
            return 0.0;
        }
        double mean = 0.0;
        for (double v : values) mean += v;
        mean /= static_cast<double>(values.size());
        double ss = 0.0;
        for (double v : values) {
            const double d = v - mean;
            ss += d * d;
        }
        return std::sqrt(ss / static_cast<double>(values.size() - 1));
    };
    fit.sigma_amplitude = sample_sd(amplitudes);
    fit.sigma_decay = sample_sd(decays);
    fit.sigma_r = sample_sd(rates);
    fit.bootstrap_replicates = static_cast<uint32_t>(amplitudes.size());
    fit.degenerate_resamples = degenerate;
    return fit;
}

double relative_error(double r, double epsilon) {
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("relative error needs a positive reference epsilon");
    }
    return (r - epsilon) / epsilon;
}

std::string report_to_json(const AnalysisReport& report) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["n"] = report.n;
    auto& means = j["means"];
    means = nlohmann::ordered_json::array();
    for (const auto& m : report.means) {
        nlohmann::ordered_json row;
        row["d"] = m.depth;
        row["s_mean"] = m.s_mean;
        row["s_stderr"] = m.s_std_error;
        row["k"] = m.k;
        means.push_back(row);
    }
    auto& fit = j["fit"];
    fit["amplitude"] = report.fit.amplitude;
    fit["decay"] = report.fit.decay;
    fit["r"] = report.fit.r;
    fit["sigma_amplitude"] = report.fit.sigma_amplitude;
    fit["sigma_decay"] = report.fit.sigma_decay;
    fit["sigma_r"] = report.fit.sigma_r;
    fit["residual_rms"] = report.fit.residual_rms;
    fit["weighted"] = report.fit.weighted;
    fit["bootstrap_replicates"] = report.fit.bootstrap_replicates;
    fit["degenerate_resamples"] = report.fit.degenerate_resamples;
    if (report.has_epsilon) {
        auto& eps = j["epsilon_comparison"];
        eps["epsilon"] = report.epsilon;
        eps["epsilon_stderr"] = report.epsilon_std_error;
        eps["delta_rel"] = report.delta_rel;
    }
    return j.dump(2) + "\n";
}

AnalysisReport report_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("report is not valid JSON: ") + e.what());
    }
    try {
        if (j.at("schema_version").get<int>() != 1) {
            throw std::runtime_error("unsupported report schema_version");
        }
        AnalysisReport report;
        report.n = j.at("n").get<uint32_t>();
        for (const auto& row : j.at("means")) {
            DepthMean m;
            m.depth = row.at("d").get<uint32_t>();
            m.s_mean = row.at("s_mean").get<double>();
            m.s_std_error = row.at("s_stderr").get<double>();
            m.k = row.at("k").get<uint32_t>();
            report.means.push_back(m);
        }
        const auto& fit = j.at("fit");
        report.fit.amplitude = fit.at("amplitude").get<double>();
        report.fit.decay = fit.at("decay").get<double>();
        report.fit.r = fit.at("r").get<double>();
        report.fit.sigma_amplitude = fit.at("sigma_amplitude").get<double>();
        report.fit.sigma_decay = fit.at("sigma_decay").get<double>();
        report.fit.sigma_r = fit.at("sigma_r").get<double>();
        report.fit.residual_rms = fit.at("residual_rms").get<double>();
        report.fit.weighted = fit.at("weighted").get<bool>();
        report.fit.bootstrap_replicates = fit.at("bootstrap_replicates").get<uint32_t>();
        report.fit.degenerate_resamples = fit.at("degenerate_resamples").get<uint32_t>();
        if (j.contains("epsilon_comparison")) {
            const auto& eps = j.at("epsilon_comparison");
            report.has_epsilon = true;
            report.epsilon = eps.at("epsilon").get<double>();
            report.epsilon_std_error = eps.at("epsilon_stderr").get<double>();
            report.delta_rel = eps.at("delta_rel").get<double>();
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("report JSON has a bad field: ") + e.what());
    }
}

std::string means_to_csv(const std::vector<DepthMean>& means) {
    std::ostringstream out;
    out << "d,s_mean,s_stderr,k\n";
    char buffer[64];
    for (const auto& m : means) {
        out << m.depth << ",";
        std::snprintf(buffer, sizeof buffer, "%.17g", m.s_mean);
        out << buffer << ",";
        std::snprintf(buffer, sizeof buffer, "%.17g", m.s_std_error);
        out << buffer << "," << m.k << "\n";
    }
    return out.str();
}

namespace {

std::string read_text_file_local(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("could not open file for reading: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file_local(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("could not open file for writing: " + path.string());
    }
    out << text;
    if (!out) {
        throw std::runtime_error("failed while writing file: " + path.string());
    }
}

}  // namespace

void write_report_file(const std::filesystem::path& path, const AnalysisReport& report) {
    write_text_file_local(path, report_to_json(report));
}

AnalysisReport read_report_file(const std::filesystem::path& path) {
    return report_from_json(read_text_file_local(path));
}

void write_csv_file(const std::filesystem::path& path, const std::vector<DepthMean>& means) {
    write_text_file_local(path, means_to_csv(means));
}

}  // namespace mrb
