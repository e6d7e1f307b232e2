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

#ifndef RPQAOA_APP_DEPTH_SCAN_H
#define RPQAOA_APP_DEPTH_SCAN_H

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rpqaoa_app/corpus.h"
#include "rpqaoa_app/sweep.h"

namespace rpqaoa::app {

struct DepthScanConfig {
    CorpusSource source = EnumerateSource{7};
    std::vector<int> depths{1, 2, 3, 4, 5};
    std::size_t samples = kDefaultSamples;
    std::uint64_t master_seed = 0;
    int jobs = 1;
    bool allow_large = false;
};

struct DepthRow {
    int p = 0;
    std::size_t count = 0;
    QmpPercentiles qmp;
    /// Root-mean-square Monte Carlo standard error of qmp_min over instances.
    double qmp_std_error_rms = 0;
    /// Per-instance qmp_min and its standard error, in corpus order.
    std::vector<double> qmp_min;
    std::vector<double> qmp_std_error;
};

/// Monte Carlo qmp_min per instance and depth. The same instance seeds, and
/// therefore the same angle-sample seeds, are used at every depth.
std::vector<DepthRow> run_depth_scan(const DepthScanConfig &config);

/// Columns: p,count,qmp_min,qmp_p1,qmp_q1,qmp_median,qmp_q3,qmp_p99,qmp_max,qmp_se_rms
void write_depth_csv(std::ostream &out, const std::vector<DepthRow> &rows);

}  // namespace rpqaoa::app

#endif  // RPQAOA_APP_DEPTH_SCAN_H
