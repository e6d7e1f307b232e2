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

#include "rpqaoa_app/counterexample.h"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "rpqaoa/analytic.h"
#include "rpqaoa/errors.h"
#include "rpqaoa/qaoa_sim.h"
#include "rpqaoa/random.h"
#include "rpqaoa/records.h"

namespace rpqaoa::app {

namespace {

constexpr double kMaxZ = 5.0;

void verify_hit(Counterexample &hit, std::size_t samples) {
    const CostTable table = build_cost_table(hit.instance);
    const LevelSpectrum spectrum = level_decomposition(table);
    const EnergyDistribution rs = uniform_distribution(spectrum);
    const McAverage mc = mc_average_distribution(table, spectrum, 1, samples, hit.instance_seed);
    hit.mc_record = compute_metrics(hit.record.id, hit.instance.kind(), hit.instance_seed, spectrum, mc.dist, rs, 1,
                                    AverageMethod::mc_average);
    hit.max_z = 0;
    for (std::size_t k = 0; k < spectrum.num_levels(); ++k) {
        hit.max_z = std::max(hit.max_z, mc_z_score(hit.record.levels[k].p_avg, mc.dist.probs[k], mc.std_error[k]));
    }
    hit.verified = hit.max_z <= kMaxZ;
}

}  // namespace

CounterexampleResult find_counterexample(const CounterexampleConfig &config) {
    if (config.budget < 1) {
        throw ConfigError("counterexample budget must be at least 1");
    }
    if (config.n_min < 2 || config.n_max < config.n_min) {
        throw ConfigError("counterexample size range must satisfy 2 <= n_min <= n_max");
    }
    if (config.verify_samples < 2) {
        throw ConfigError("verification needs at least 2 samples");
    }
    const auto span = static_cast<std::uint64_t>(config.n_max - config.n_min + 1);
    CounterexampleResult result;
    for (std::size_t k = 0; k < config.budget; ++k) {
        Rng rng(derive_seed(config.seed, k));
        const int n = config.n_min + static_cast<int>(rng.below(span));
        const std::uint64_t instance_seed = rng.next();
        Counterexample hit;
        hit.trial = k;
        hit.instance_seed = instance_seed;
        hit.instance = make_instance(config.family, n, instance_seed);
        const CostTable table = build_cost_table(hit.instance);
        const LevelSpectrum spectrum = level_decomposition(table);
        const EnergyDistribution q = rp_avg_distribution(table, spectrum);
        const EnergyDistribution rs = uniform_distribution(spectrum);
        const double delta_s = shannon_entropy(q) - shannon_entropy(rs);
        result.trials = k + 1;
        if (!(delta_s < 0)) {
            continue;
        }
        const std::string id = std::string(to_string(config.family)) + "-n" + std::to_string(n) + "-trial" +
                               std::to_string(k);
        hit.record =
            compute_metrics(id, hit.instance.kind(), instance_seed, spectrum, q, rs, 1, AverageMethod::analytic_eq5);
        verify_hit(hit, config.verify_samples);
        if (hit.verified) {
            result.hit = std::move(hit);
            return result;
        }
        ++result.rejected;
    }
    return result;
}

void print_counterexample(std::ostream &out, const CounterexampleResult &result) {
    if (!result.hit) {
        out << "exhausted: no delta_S < 0 instance in " << result.trials << " trials";
        if (result.rejected > 0) {
            out << " (" << result.rejected << " candidates failed Monte Carlo verification)";
        }
        out << '\n';
        return;
    }
    const Counterexample &hit = *result.hit;
    out << to_json_line(InstanceRecord{hit.record.id, hit.instance, hit.instance_seed}) << '\n'
        << to_json_line(hit.record) << '\n'
        << to_json_line(hit.mc_record) << '\n';
    out << "found at trial " << hit.trial << ": delta_S=" << hit.record.delta_S
        << " (monte carlo " << hit.mc_record.delta_S << "), max level z=" << hit.max_z << '\n';
}

}  // namespace rpqaoa::app
