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

#ifndef RPQAOA_APP_COUNTEREXAMPLE_H
#define RPQAOA_APP_COUNTEREXAMPLE_H

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "rpqaoa/metrics.h"
#include "rpqaoa/problems.h"
#include "rpqaoa_app/corpus.h"

namespace rpqaoa::app {

struct CounterexampleConfig {
    Family family = Family::maxcut_weights_1_2;
    int n_min = 4;
    int n_max = 8;
    std::size_t budget = 100000;
    std::uint64_t seed = 0;
    /// Monte Carlo samples used to re-verify a hit.
    std::size_t verify_samples = 10000;
};

struct Counterexample {
    std::size_t trial = 0;  // zero-based index of the hit
    std::uint64_t instance_seed = 0;
    QuboInstance instance;
    MetricsRecord record;     // closed-form average
    MetricsRecord mc_record;  // Monte Carlo re-evaluation
    /// Largest |P_avg - P_mc| / SE over levels.
    double max_z = 0;
    bool verified = false;
};

struct CounterexampleResult {
    std::size_t trials = 0;
    /// Hits discarded because the Monte Carlo check disagreed.
    std::size_t rejected = 0;
    std::optional<Counterexample> hit;
};

/// Random search for delta_S < 0. Trial k draws its size and instance seed
/// from derive_seed(seed, k), so the trajectory is fixed by the seed. A hit is
/// accepted only if every level of the Monte Carlo average lies within 5
/// standard errors of the closed form.
CounterexampleResult find_counterexample(const CounterexampleConfig &config);

/// Instance JSON line, then the metrics line, then the MC line; or an
/// exhaustion notice.
void print_counterexample(std::ostream &out, const CounterexampleResult &result);

}  // namespace rpqaoa::app

#endif  // RPQAOA_APP_COUNTEREXAMPLE_H
