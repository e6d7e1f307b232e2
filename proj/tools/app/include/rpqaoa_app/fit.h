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

#ifndef RPQAOA_APP_FIT_H
#define RPQAOA_APP_FIT_H

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rpqaoa/metrics.h"

namespace rpqaoa::app {

inline constexpr double kDefaultGoal = 0.99;

struct InstanceScaling {
    std::string id;
    int n = 0;
    double p_min = 0;
    double t = 0;
    double shots = 0;  // measurements to reach the goal probability
};

struct FitReport {
    double goal = kDefaultGoal;
    std::vector<InstanceScaling> instances;
    std::vector<ScalingPoint> median_t;  // one per n, ascending
    ExponentFit fit;
};

/// Scaling fit of log2(median T) against n. Needs records spanning at least
/// three sizes (ConfigError otherwise). Single-level records (constant cost)
/// enter the medians with T = 0; any other p_min outside (0, 1) is a
/// DomainError.
FitReport fit_records(const std::vector<MetricsRecord> &records, double goal = kDefaultGoal);

FitReport fit_files(const std::vector<std::filesystem::path> &paths, double goal = kDefaultGoal);

void print_fit_report(std::ostream &out, const FitReport &report, bool per_instance = false);

}  // namespace rpqaoa::app

#endif  // RPQAOA_APP_FIT_H
