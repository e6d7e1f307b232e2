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

#include "rpqaoa_app/sweep.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "rpqaoa/analytic.h"
#include "rpqaoa/errors.h"
#include "rpqaoa/records.h"
#include "rpqaoa_app/parallel.h"

namespace rpqaoa::app {

namespace {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string &cell, const std::string &column) {
    double v = 0;
    auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
        throw FormatError("column '" + column + "': cannot parse '" + cell + "'");
    }
    return v;
}

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        if (!cell.empty() && cell.back() == '\r') {
            cell.pop_back();
        }
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

}  // namespace

void validate(const SweepConfig &config) {
    if (config.p < 1) {
        throw ConfigError("depth p must be >= 1");
    }
    if (config.method == AverageMethod::analytic_eq5 && config.p != 1) {
        throw ConfigError("the closed-form average exists only for p = 1; use --method mc_average");
    }
    if (config.method == AverageMethod::mc_average && config.samples < 2) {
        throw ConfigError("mc_average needs at least 2 samples");
    }
    if (config.jobs < 1) {
        throw ConfigError("jobs must be >= 1");
    }
}

SweepConfig load_sweep_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config " + path.string());
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    SweepConfig c;
    try {
        if (!j.contains("source") || !j["source"].is_object() || j["source"].size() != 1) {
            throw ConfigError("config needs a 'source' object with exactly one key");
        }
        const auto &src = j["source"];
        if (src.contains("enumerate")) {
            c.source = EnumerateSource{src["enumerate"].get<int>()};
        } else if (src.contains("graph6")) {
            c.source = Graph6Source{src["graph6"].get<std::string>()};
        } else if (src.contains("instances")) {
            c.source = InstancesSource{src["instances"].get<std::string>()};
        } else if (src.contains("ensemble")) {
            const auto &e = src["ensemble"];
            EnsembleSource ens;
            ens.family = parse_family(e.at("family").get<std::string>());
            ens.sizes = e.at("n").get<std::vector<int>>();
            ens.count = e.value("count", std::size_t{100});
            c.source = ens;
        } else {
            throw ConfigError("unknown source kind in config");
        }
        if (j.contains("method")) {
            c.method = parse_average_method(j["method"].get<std::string>());
        }
        c.p = j.value("p", 1);
        c.samples = j.value("samples", kDefaultSamples);
        c.master_seed = j.value("master_seed", std::uint64_t{0});
        c.output = j.value("output", std::string());
        c.summary = j.value("summary", std::string());
        c.jobs = j.value("jobs", 1);
        c.allow_large = j.value("allow_large", false);
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    } catch (const FormatError &e) {
        throw ConfigError(e.what());
    }
    validate(c);
    return c;
}

MetricsRecord evaluate_instance(const CorpusItem &item, AverageMethod method, int p, std::size_t samples) {
    const CostTable table = build_cost_table(item.instance);
    const LevelSpectrum spectrum = level_decomposition(table);
    const EnergyDistribution rs = uniform_distribution(spectrum);
    EnergyDistribution q;
    if (method == AverageMethod::analytic_eq5) {
        q = rp_avg_distribution(table, spectrum);
    } else {
        q = mc_average_distribution(table, spectrum, p, samples, item.seed).dist;
    }
    return compute_metrics(item.id, item.instance.kind(), item.seed, spectrum, q, rs, p, method);
}

std::vector<MetricsRecord> evaluate_corpus(const std::vector<CorpusItem> &corpus, AverageMethod method, int p,
                                           std::size_t samples, int jobs) {
    std::vector<MetricsRecord> records(corpus.size());
    parallel_for(corpus.size(), jobs,
                 [&](std::size_t i) { records[i] = evaluate_instance(corpus[i], method, p, samples); });
    return records;
}

QmpPercentiles qmp_percentiles(const std::vector<double> &values) {
    QmpPercentiles q;
    q.min = percentile(values, 0.0);
    q.p1 = percentile(values, 0.01);
    q.q1 = percentile(values, 0.25);
    q.median = percentile(values, 0.5);
    q.q3 = percentile(values, 0.75);
    q.p99 = percentile(values, 0.99);
    q.max = percentile(values, 1.0);
    return q;
}

std::vector<SummaryRow> summarize(const std::vector<MetricsRecord> &records) {
    std::map<std::pair<std::string, int>, std::pair<std::vector<double>, std::vector<double>>> groups;
    for (const auto &r : records) {
        auto &[ds, qm] = groups[{std::string(to_string(r.kind)), r.n}];
        ds.push_back(r.delta_S);
        qm.push_back(r.qmp_min);
    }
    std::vector<SummaryRow> rows;
    for (auto &[key, values] : groups) {
        auto &[ds, qm] = values;
        // Sorted before summing so the mean does not depend on record order.
        std::sort(ds.begin(), ds.end());
        SummaryRow row;
        row.family = key.first;
        row.n = key.second;
        row.count = ds.size();
        row.delta_s_min = ds.front();
        row.delta_s_max = ds.back();
        double total = 0;
        for (double v : ds) {
            total += v;
        }
        row.delta_s_avg = total / static_cast<double>(ds.size());
        row.qmp = qmp_percentiles(qm);
        rows.push_back(row);
    }
    return rows;
}

const std::vector<std::string> &summary_columns() {
    static const std::vector<std::string> kColumns{
        "family",  "n",      "count",  "delta_S_min", "delta_S_avg", "delta_S_max", "qmp_min",
        "qmp_p1", "qmp_q1", "qmp_median", "qmp_q3",   "qmp_p99",     "qmp_max"};
    return kColumns;
}

void write_summary_csv(std::ostream &out, const std::vector<SummaryRow> &rows) {
    const auto &cols = summary_columns();
    for (std::size_t k = 0; k < cols.size(); ++k) {
        out << (k ? "," : "") << cols[k];
    }
    out << '\n';
    for (const auto &r : rows) {
        out << r.family << ',' << r.n << ',' << r.count << ',' << format_double(r.delta_s_min) << ','
            << format_double(r.delta_s_avg) << ',' << format_double(r.delta_s_max) << ','
            << format_double(r.qmp.min) << ',' << format_double(r.qmp.p1) << ',' << format_double(r.qmp.q1) << ','
            << format_double(r.qmp.median) << ',' << format_double(r.qmp.q3) << ','
            << format_double(r.qmp.p99) << ',' << format_double(r.qmp.max) << '\n';
    }
}

std::vector<SummaryRow> read_summary_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw FormatError("summary CSV is empty");
    }
    const auto header = split_csv_line(line);
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < header.size(); ++k) {
        index[header[k]] = k;
    }
    for (const auto &col : summary_columns()) {
        if (!index.contains(col)) {
            throw FormatError("summary CSV is missing column '" + col + "'");
        }
    }
    std::vector<SummaryRow> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") {
            continue;
        }
        const auto cells = split_csv_line(line);
        if (cells.size() != header.size()) {
            throw FormatError("summary CSV row has " + std::to_string(cells.size()) + " cells, expected " +
                              std::to_string(header.size()));
        }
        auto num = [&](const std::string &col) { return parse_double(cells[index[col]], col); };
        SummaryRow r;
        r.family = cells[index["family"]];
        r.n = static_cast<int>(num("n"));
        r.count = static_cast<std::size_t>(num("count"));
        r.delta_s_min = num("delta_S_min");
        r.delta_s_avg = num("delta_S_avg");
        r.delta_s_max = num("delta_S_max");
        r.qmp = {num("qmp_min"), num("qmp_p1"), num("qmp_q1"), num("qmp_median"),
                 num("qmp_q3"),  num("qmp_p99"), num("qmp_max")};
        rows.push_back(r);
    }
    return rows;
}

void write_jsonl(std::ostream &out, const std::vector<MetricsRecord> &records) {
    for (const auto &r : records) {
        out << to_json_line(r) << '\n';
    }
}

SweepResult run_sweep(const SweepConfig &config) {
    validate(config);
    const auto corpus = load_corpus(config.source, config.master_seed, config.allow_large);
    SweepResult result;
    result.records = evaluate_corpus(corpus, config.method, config.p, config.samples, config.jobs);
    result.summary = summarize(result.records);
    if (!config.output.empty()) {
        std::ofstream out(config.output);
        if (!out) {
            throw IoError("cannot write " + config.output.string());
        }
        write_jsonl(out, result.records);
        std::filesystem::path summary = config.summary;
        if (summary.empty()) {
            summary = config.output;
            summary.replace_extension(".summary.csv");
        }
        std::ofstream csv(summary);
        if (!csv) {
            throw IoError("cannot write " + summary.string());
        }
        write_summary_csv(csv, result.summary);
    }
    return result;
}

}  // namespace rpqaoa::app
