// Copyright 2026 The rpqaoa Authors
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

#include "rpqaoa/metrics.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "rpqaoa/errors.h"

namespace rpqaoa {

std::string_view to_string(AverageMethod method) {
    return method == AverageMethod::analytic_eq5 ? "analytic_eq5" : "mc_average";
}

AverageMethod parse_average_method(std::string_view name) {
    if (name == "analytic_eq5") {
        return AverageMethod::analytic_eq5;
    }
    if (name == "mc_average") {
        return AverageMethod::mc_average;
    }
    throw FormatError("unknown averaging method '" + std::string(name) + "'");
}

double shannon_entropy(std::span<const double> probs) {
    double s = 0;
    for (double p : probs) {
        if (p > 0) {
            s -= p * std::log2(p);
        }
    }
    return s;
}

double shannon_entropy(const EnergyDistribution &dist) { return shannon_entropy(dist.probs); }

std::vector<double> qmp(const EnergyDistribution &dist_q, const EnergyDistribution &dist_rs) {
    if (dist_q.levels != dist_rs.levels || dist_q.probs.size() != dist_rs.probs.size()) {
        throw InvalidInputError("QMP needs two distributions over the same levels");
    }
    std::vector<double> out;
    out.reserve(dist_q.size());
    for (std::size_t k = 0; k < dist_q.size(); ++k) {
        if (!(dist_rs.probs[k] > 0)) {
            throw InvalidInputError("reference distribution has an empty level");
        }
        out.push_back(dist_q.probs[k] / dist_rs.probs[k]);
    }
    return out;
}

double approx_ratio(const EnergyDistribution &dist) {
    if (dist.levels.size() < 2) {
        return 1.0;
    }
    const double lo = dist.levels.front();
    const double hi = dist.levels.back();
    double mean = 0;
    for (std::size_t k = 0; k < dist.size(); ++k) {
        mean += dist.probs[k] * dist.levels[k];
    }
    return std::clamp((hi - mean) / (hi - lo), 0.0, 1.0);
}

double t_of_n(double p_min) {
    if (!(p_min > 0 && p_min < 1)) {
        throw DomainError("ground-level probability must lie in (0, 1)");
    }
    return -1.0 / std::log1p(-p_min);
}

double shots_to_goal(double p_min, double goal) {
    if (!(p_min > 0 && p_min < 1) || !(goal > 0 && goal < 1)) {
        throw DomainError("probabilities must lie in (0, 1)");
    }
    return std::log1p(-goal) / std::log1p(-p_min);
}

ExponentFit fit_exponent(std::span<const ScalingPoint> points) {
    std::set<int> distinct;
    for (const auto &pt : points) {
        if (!(pt.t > 0)) {
            throw InvalidInputError("scaling fit needs T > 0");
        }
        distinct.insert(pt.n);
    }
    if (distinct.size() < 2) {
        throw InvalidInputError("scaling fit needs at least two distinct n");
    }
    double mean_x = 0;
    double mean_y = 0;
    for (const auto &pt : points) {
        mean_x += pt.n;
        mean_y += std::log2(pt.t);
    }
    mean_x /= static_cast<double>(points.size());
    mean_y /= static_cast<double>(points.size());
    double sxx = 0;
    double sxy = 0;
    for (const auto &pt : points) {
        sxx += (pt.n - mean_x) * (pt.n - mean_x);
        sxy += (pt.n - mean_x) * (std::log2(pt.t) - mean_y);
    }
    ExponentFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    return fit;
}

double percentile(std::vector<double> values, double q) {
    if (values.empty()) {
        throw InvalidInputError("percentile of an empty sample");
    }
    std::sort(values.begin(), values.end());
    const double pos = std::clamp(q, 0.0, 1.0) * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

double median(std::vector<double> values) { return percentile(std::move(values), 0.5); }

std::vector<double> MetricsRecord::qmp_per_level() const {
    std::vector<double> out;
    for (const auto &l : levels) {
        out.push_back(l.p_avg / l.p_rs);
    }
    return out;
}

MetricsRecord compute_metrics(std::string id, ProblemKind kind, std::uint64_t seed,
                              const LevelSpectrum &spectrum, const EnergyDistribution &dist_q,
                              const EnergyDistribution &dist_rs, int p, AverageMethod method) {
    if (dist_q.levels != spectrum.values) {
        throw InvalidInputError("distribution is not aligned with the spectrum");
    }
    const auto ratios = qmp(dist_q, dist_rs);
    MetricsRecord r;
    r.id = std::move(id);
    r.kind = kind;
    r.n = spectrum.n;
    r.p = p;
    r.method = method;
    r.seed = seed;
    r.c_min = spectrum.c_min();
    r.c_max = spectrum.c_max();
    r.S_c = shannon_entropy(dist_rs);
    r.S_q = shannon_entropy(dist_q);
    r.delta_S = r.S_q - r.S_c;
    r.qmp_min = ratios.front();
    r.approx_ratio_rs = approx_ratio(dist_rs);
    r.approx_ratio_q = approx_ratio(dist_q);
    for (std::size_t k = 0; k < spectrum.num_levels(); ++k) {
        r.levels.push_back({spectrum.values[k], spectrum.weights[k], dist_rs.probs[k], dist_q.probs[k]});
    }
    return r;
}

}  // namespace rpqaoa
