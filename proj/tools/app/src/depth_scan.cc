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

#include "rpqaoa_app/depth_scan.h"

#include <cmath>
#include <ostream>

#include "rpqaoa/errors.h"
#include "rpqaoa/qaoa_sim.h"
#include "rpqaoa_app/parallel.h"

namespace rpqaoa::app {

std::vector<DepthRow> run_depth_scan(const DepthScanConfig &config) {
    if (config.depths.empty()) {
        throw ConfigError("depth scan needs at least one depth");
    }
    for (int p : config.depths) {
        if (p < 1) {
            throw ConfigError("depths must be >= 1");
        }
    }
    if (config.samples < 2) {
        throw ConfigError("depth scan needs at least 2 samples");
    }
    const auto corpus = load_corpus(config.source, config.master_seed, config.allow_large);
    if (corpus.empty()) {
        throw ConfigError("depth scan corpus is empty");
    }

    struct Prepared {
        CostTable table;
        LevelSpectrum spectrum;
    };
    std::vector<Prepared> prepared(corpus.size());
    parallel_for(corpus.size(), config.jobs, [&](std::size_t i) {
        prepared[i].table = build_cost_table(corpus[i].instance);
        prepared[i].spectrum = level_decomposition(prepared[i].table);
    });

    std::vector<DepthRow> rows;
    for (int p : config.depths) {
        DepthRow row;
        row.p = p;
        row.count = corpus.size();
        row.qmp_min.resize(corpus.size());
        row.qmp_std_error.resize(corpus.size());
        parallel_for(corpus.size(), config.jobs, [&](std::size_t i) {
            const auto &[table, spectrum] = prepared[i];
            const McAverage mc = mc_average_distribution(table, spectrum, p, config.samples, corpus[i].seed);
            const double p_rs = uniform_distribution(spectrum).probs[0];
            row.qmp_min[i] = mc.dist.probs[0] / p_rs;
            row.qmp_std_error[i] = mc.std_error[0] / p_rs;
        });
        row.qmp = qmp_percentiles(row.qmp_min);
        double ss = 0;
        for (double se : row.qmp_std_error) {
            ss += se * se;
        }
        row.qmp_std_error_rms = std::sqrt(ss / static_cast<double>(corpus.size()));
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_depth_csv(std::ostream &out, const std::vector<DepthRow> &rows) {
    out << "p,count,qmp_min,qmp_p1,qmp_q1,qmp_median,qmp_q3,qmp_p99,qmp_max,qmp_se_rms\n";
    const auto old_precision = out.precision(17);
    for (const auto &r : rows) {
        out << r.p << ',' << r.count << ',' << r.qmp.min << ',' << r.qmp.p1 << ',' << r.qmp.q1 << ','
            << r.qmp.median << ',' << r.qmp.q3 << ',' << r.qmp.p99 << ',' << r.qmp.max << ','
            << r.qmp_std_error_rms << '\n';
    }
    out.precision(old_precision);
}

}  // namespace rpqaoa::app
