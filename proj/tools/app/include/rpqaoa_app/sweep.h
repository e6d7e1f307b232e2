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

#ifndef RPQAOA_APP_SWEEP_H
#define RPQAOA_APP_SWEEP_H

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rpqaoa/metrics.h"
#include "rpqaoa_app/corpus.h"

namespace rpqaoa::app {

inline constexpr std::size_t kDefaultSamples = 200;

struct SweepConfig {
    CorpusSource source = EnumerateSource{4};
    AverageMethod method = AverageMethod::analytic_eq5;
    int p = 1;
    std::size_t samples = kDefaultSamples;
    std::uint64_t master_seed = 0;
    std::filesystem::path output;   // JSONL; empty = do not write
    std::filesystem::path summary;  // CSV; empty = <output stem>.summary.csv
    int jobs = 1;
    bool allow_large = false;
};

/// ConfigError on analytic_eq5 with p != 1, p < 1, or samples < 2 for mc_average.
void validate(const SweepConfig &config);

/// Reads and validates a SweepConfig from a JSON file:
///   {"source": {"enumerate": 5} | {"graph6": "path"} | {"instances": "path"}
///              | {"ensemble": {"family": "maxcut", "n": [5, 6], "count": 100}},
///    "method": "analytic_eq5", "p": 1, "samples": 200, "master_seed": 0,
///    "output": "out.jsonl", "summary": "out.csv", "jobs": 1, "allow_large": false}
/// Every key except "source" is optional.
SweepConfig load_sweep_config(const std::filesystem::path &path);

/// Metrics for one instance: closed-form average for analytic_eq5, otherwise
/// Monte Carlo over `samples` angle sets seeded from item.seed.
MetricsRecord evaluate_instance(const CorpusItem &item, AverageMethod method, int p, std::size_t samples);

std::vector<MetricsRecord> evaluate_corpus(const std::vector<CorpusItem> &corpus, AverageMethod method, int p,
                                           std::size_t samples, int jobs);

/// Five-number-plus summary of qmp_min used for the violin figures.
struct QmpPercentiles {
    double min = 0, p1 = 0, q1 = 0, median = 0, q3 = 0, p99 = 0, max = 0;
};

QmpPercentiles qmp_percentiles(const std::vector<double> &values);

struct SummaryRow {
    std::string family;  // problem kind of the records
    int n = 0;
    std::size_t count = 0;
    double delta_s_min = 0;
    double delta_s_avg = 0;
    double delta_s_max = 0;
    QmpPercentiles qmp;
};

/// One row per (kind, n), sorted by kind then n. Independent of record order.
std::vector<SummaryRow> summarize(const std::vector<MetricsRecord> &records);

/// Header of the summary CSV, in column order.
const std::vector<std::string> &summary_columns();

void write_summary_csv(std::ostream &out, const std::vector<SummaryRow> &rows);
/// FormatError naming the first missing column or unparsable cell.
std::vector<SummaryRow> read_summary_csv(std::istream &in);

void write_jsonl(std::ostream &out, const std::vector<MetricsRecord> &records);

struct SweepResult {
    std::vector<MetricsRecord> records;
    std::vector<SummaryRow> summary;
};

/// Validates, loads the corpus, evaluates, and writes output files if set.
SweepResult run_sweep(const SweepConfig &config);

}  // namespace rpqaoa::app

#endif  // RPQAOA_APP_SWEEP_H
