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

#ifndef RPQAOA_METRICS_H
#define RPQAOA_METRICS_H

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rpqaoa/problems.h"
#include "rpqaoa/qaoa_sim.h"

namespace rpqaoa {

enum class AverageMethod { analytic_eq5, mc_average };

std::string_view to_string(AverageMethod method);
AverageMethod parse_average_method(std::string_view name);

/// -sum p log2 p, with 0 log 0 = 0.
double shannon_entropy(std::span<const double> probs);
double shannon_entropy(const EnergyDistribution &dist);

/// P_q(c) / P_rs(c) per level. Both distributions must share levels.
std::vector<double> qmp(const EnergyDistribution &dist_q, const EnergyDistribution &dist_rs);

/// (c_max - E[c]) / (c_max - c_min); 1 for a single-level spectrum.
double approx_ratio(const EnergyDistribution &dist);

/// -1 / ln(1 - p_min), proportional to the expected number of shots needed to
/// hit the ground level. Requires 0 < p_min < 1.
double t_of_n(double p_min);

/// Shots needed to see the ground level at least once with probability
/// `goal`: log(1 - goal) / log(1 - p_min).
double shots_to_goal(double p_min, double goal);

struct ExponentFit {
    double slope = 0;      // bits per variable
    double intercept = 0;  // log2 T at n = 0
};

struct ScalingPoint {
    int n = 0;
    double t = 0;
};

/// Ordinary least squares of log2(T) on n. Needs two distinct n and T > 0.
ExponentFit fit_exponent(std::span<const ScalingPoint> points);

/// Linearly interpolated quantile (q in [0, 1]) of an unsorted sample.
double percentile(std::vector<double> values, double q);
double median(std::vector<double> values);

struct LevelRecord {
    double c = 0;
    std::uint64_t w = 0;
    double p_rs = 0;
    double p_avg = 0;

    friend bool operator==(const LevelRecord &, const LevelRecord &) = default;
};

/// Per-instance summary. qmp_per_level and the entropies are recomputable from
/// `levels`, which is why the full level table travels with the record.
struct MetricsRecord {
    std::string id;
    ProblemKind kind = ProblemKind::custom;
    int n = 0;
    int p = 1;
    AverageMethod method = AverageMethod::analytic_eq5;
    std::uint64_t seed = 0;
    double c_min = 0;
    double c_max = 0;
    double S_c = 0;
    double S_q = 0;
    double delta_S = 0;
    double qmp_min = 0;
    double approx_ratio_rs = 0;
    double approx_ratio_q = 0;
    std::vector<LevelRecord> levels;

    std::vector<double> qmp_per_level() const;
    double p_min() const { return levels.front().p_avg; }

    friend bool operator==(const MetricsRecord &, const MetricsRecord &) = default;
};

MetricsRecord compute_metrics(std::string id, ProblemKind kind, std::uint64_t seed,
                              const LevelSpectrum &spectrum, const EnergyDistribution &dist_q,
                              const EnergyDistribution &dist_rs, int p, AverageMethod method);

}  // namespace rpqaoa

#endif  // RPQAOA_METRICS_H
