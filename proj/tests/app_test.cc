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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "rpqaoa/errors.h"
#include "rpqaoa/records.h"
#include "rpqaoa_app/counterexample.h"
#include "rpqaoa_app/depth_scan.h"
#include "rpqaoa_app/fit.h"
#include "rpqaoa_app/plot.h"
#include "rpqaoa_app/sweep.h"
#include "rpqaoa_app/verify.h"

using namespace rpqaoa;
using namespace rpqaoa::app;

namespace {

std::filesystem::path scratch(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / "rpqaoa_app_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string jsonl(const std::vector<MetricsRecord> &records) {
    std::ostringstream out;
    write_jsonl(out, records);
    return out.str();
}

std::string csv(const std::vector<SummaryRow> &rows) {
    std::ostringstream out;
    write_summary_csv(out, rows);
    return out.str();
}

SummaryRow row(const std::string &family, int n, double base) {
    SummaryRow r;
    r.family = family;
    r.n = n;
    r.count = 10;
    r.delta_s_min = 0.01;
    r.delta_s_avg = 0.1;
    r.delta_s_max = 0.2;
    r.qmp = {base, base + 0.01, base + 0.1, base + 0.2, base + 0.3, base + 0.5, base + 0.6};
    return r;
}

std::size_t count_of(const std::string &haystack, const std::string &needle) {
    std::size_t hits = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) {
        ++hits;
    }
    return hits;
}

MetricsRecord synthetic_record(int n, double t) {
    MetricsRecord r;
    r.id = "synthetic-" + std::to_string(n);
    r.n = n;
    const double p_min = -std::expm1(-1.0 / t);
    r.levels.push_back({0, 1, std::ldexp(1.0, -n), p_min});
    r.levels.push_back({1, (std::uint64_t{1} << n) - 1, 1 - std::ldexp(1.0, -n), 1 - p_min});
    return r;
}

}  // namespace

TEST(Sweep, enumerate_n4_summary) {
    SweepConfig cfg;
    cfg.source = EnumerateSource{4};
    const SweepResult res = run_sweep(cfg);
    ASSERT_EQ(res.records.size(), 6u);
    ASSERT_EQ(res.summary.size(), 1u);
    const SummaryRow &r = res.summary.front();
    EXPECT_EQ(r.family, "maxcut_unweighted");
    EXPECT_EQ(r.count, 6u);
    EXPECT_NEAR(r.delta_s_min, 0.046, 1e-3);
    EXPECT_NEAR(r.delta_s_avg, 0.145, 1e-3);
    EXPECT_NEAR(r.delta_s_max, 0.295, 1e-3);
}

TEST(Sweep, byte_identical_across_reruns_and_jobs) {
    for (AverageMethod method : {AverageMethod::analytic_eq5, AverageMethod::mc_average}) {
        const auto corpus = load_corpus(EnsembleSource{Family::qubo_unweighted, {4, 6}, 5}, 77);
        const int p = method == AverageMethod::mc_average ? 2 : 1;
        const std::string a = jsonl(evaluate_corpus(corpus, method, p, 40, 1));
        EXPECT_EQ(a, jsonl(evaluate_corpus(corpus, method, p, 40, 1)));
        EXPECT_EQ(a, jsonl(evaluate_corpus(corpus, method, p, 40, 3)));
    }
}

TEST(Sweep, writes_files) {
    SweepConfig cfg;
    cfg.source = EnsembleSource{Family::maxcut, {4, 5}, 3};
    cfg.output = scratch("sweep.jsonl");
    run_sweep(cfg);
    EXPECT_EQ(read_metrics_jsonl(cfg.output).size(), 6u);
    std::ifstream in(scratch("sweep.summary.csv"));
    ASSERT_TRUE(in);
    EXPECT_EQ(read_summary_csv(in).size(), 2u);
}

TEST(Sweep, summary_ignores_record_order) {
    const auto corpus = load_corpus(EnsembleSource{Family::qubo_weighted, {4, 5}, 12}, 3);
    auto records = evaluate_corpus(corpus, AverageMethod::analytic_eq5, 1, 0, 1);
    const std::string expected = csv(summarize(records));
    std::mt19937 shuffle_rng(5);
    for (int i = 0; i < 5; ++i) {
        std::shuffle(records.begin(), records.end(), shuffle_rng);
        EXPECT_EQ(csv(summarize(records)), expected);
    }
}

TEST(SweepConfig, contradictions_are_config_errors) {
    SweepConfig cfg;
    cfg.p = 2;
    EXPECT_THROW(validate(cfg), ConfigError);
    cfg.method = AverageMethod::mc_average;
    EXPECT_NO_THROW(validate(cfg));
    cfg.samples = 1;
    EXPECT_THROW(validate(cfg), ConfigError);
    cfg.samples = 10;
    cfg.jobs = 0;
    EXPECT_THROW(validate(cfg), ConfigError);
}

TEST(SweepConfig, loads_json) {
    const auto path = scratch("cfg.json");
    std::ofstream(path) << R"({"source": {"ensemble": {"family": "qubo_weighted", "n": [5, 6], "count": 7}},
                              "method": "mc_average", "p": 3, "samples": 50, "master_seed": 9, "jobs": 2})";
    const SweepConfig cfg = load_sweep_config(path);
    ASSERT_TRUE(std::holds_alternative<EnsembleSource>(cfg.source));
    const auto &src = std::get<EnsembleSource>(cfg.source);
    EXPECT_EQ(src.family, Family::qubo_weighted);
    EXPECT_EQ(src.sizes, (std::vector<int>{5, 6}));
    EXPECT_EQ(src.count, 7u);
    EXPECT_EQ(cfg.method, AverageMethod::mc_average);
    EXPECT_EQ(cfg.p, 3);
    EXPECT_EQ(cfg.samples, 50u);
    EXPECT_EQ(cfg.master_seed, 9u);
    EXPECT_EQ(cfg.jobs, 2);

    std::ofstream(path) << R"({"source": {"enumerate": 4}, "method": "analytic_eq5", "p": 2})";
    EXPECT_THROW(load_sweep_config(path), ConfigError);
    std::ofstream(path) << R"({"source": {"carrier_pigeon": 1}})";
    EXPECT_THROW(load_sweep_config(path), ConfigError);
}

TEST(Corpus, large_enumeration_points_at_graph6) {
    try {
        load_corpus(EnumerateSource{8}, 0);
        FAIL() << "expected ConfigError";
    } catch (const ConfigError &e) {
        EXPECT_NE(std::string(e.what()).find("graph6"), std::string::npos);
    }
}

TEST(Corpus, missing_file_is_io_error) {
    EXPECT_THROW(load_corpus(Graph6Source{scratch("absent.g6")}, 0), IoError);
    EXPECT_THROW(load_corpus(InstancesSource{scratch("absent.jsonl")}, 0), IoError);
}

TEST(Corpus, ensemble_ids_and_seeds) {
    const auto a = load_corpus(EnsembleSource{Family::maxcut_weights_1_2, {5}, 3}, 11);
    const auto b = load_corpus(EnsembleSource{Family::maxcut_weights_1_2, {5}, 3}, 11);
    ASSERT_EQ(a.size(), 3u);
    EXPECT_EQ(a[1].id, "maxcut_weights_1_2-n5-1");
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].seed, b[i].seed);
        EXPECT_EQ(a[i].instance, b[i].instance);
    }
}

TEST(SummaryCsv, round_trips) {
    const std::vector<SummaryRow> rows{row("maxcut", 4, 1.1), row("qubo_unweighted", 5, 0.95)};
    std::istringstream in(csv(rows));
    const auto back = read_summary_csv(in);
    EXPECT_EQ(csv(back), csv(rows));
}

TEST(SummaryCsv, missing_column_is_named) {
    std::string text = csv({row("maxcut", 4, 1.1)});
    const auto pos = text.find(",qmp_p99");
    text.erase(pos, std::string(",qmp_p99").size());
    std::istringstream in(text);
    try {
        read_summary_csv(in);
        FAIL() << "expected FormatError";
    } catch (const FormatError &e) {
        EXPECT_NE(std::string(e.what()).find("qmp_p99"), std::string::npos);
    }
}

TEST(Plot, one_glyph_per_size) {
    std::vector<SummaryRow> rows;
    for (int n = 4; n <= 9; ++n) {
        rows.push_back(row("maxcut", n, 1.0 + 0.05 * n));
    }
    const std::string svg = render_qmp_svg("maxcut", rows);
    EXPECT_EQ(count_of(svg, "class=\"violin\""), 6u);
    EXPECT_EQ(count_of(svg, "class=\"median\""), 6u);
    EXPECT_EQ(count_of(svg, "class=\"reference\""), 1u);
    EXPECT_EQ(count_of(render_qmp_svg("maxcut", {row("maxcut", 5, 0.9)}), "class=\"violin\""), 1u);
}

TEST(Plot, writes_one_file_per_family) {
    const auto path = scratch("plot.csv");
    std::ofstream(path) << csv({row("maxcut", 4, 1.1), row("maxcut", 5, 1.2), row("qubo_unweighted", 5, 0.9)});
    const auto files = plot_summary(path, scratch("plots"));
    ASSERT_EQ(files.size(), 2u);
    EXPECT_EQ(files[0].path.filename(), "qmp_maxcut.svg");
    EXPECT_EQ(files[0].groups, 2u);
    EXPECT_EQ(files[1].groups, 1u);
    EXPECT_TRUE(std::filesystem::exists(files[1].path));

    std::ofstream(path) << "family,n\nmaxcut,4\n";
    EXPECT_THROW(plot_summary(path, scratch("plots")), FormatError);
}

TEST(Fit, synthetic_exponential_has_unit_slope) {
    std::vector<MetricsRecord> records;
    for (int n = 3; n <= 10; ++n) {
        records.push_back(synthetic_record(n, std::ldexp(1.0, n)));
    }
    const FitReport rep = fit_records(records);
    EXPECT_NEAR(rep.fit.slope, 1.0, 1e-9);
    EXPECT_NEAR(rep.fit.intercept, 0.0, 1e-8);
    ASSERT_EQ(rep.instances.size(), records.size());
    const auto &first = rep.instances.front();
    EXPECT_NEAR(first.shots, std::log(0.01) / std::log1p(-first.p_min), 1e-9);
}

TEST(Fit, constant_cost_instances_count_as_zero_shots) {
    std::vector<MetricsRecord> records;
    for (int n = 4; n <= 6; ++n) {
        for (int i = 0; i < 3; ++i) {
            records.push_back(synthetic_record(n, std::ldexp(1.0, n)));
        }
        MetricsRecord flat = synthetic_record(n, 1);
        flat.levels = {{0, std::uint64_t{1} << n, 1, 1}};
        records.push_back(flat);
    }
    const FitReport rep = fit_records(records);
    EXPECT_EQ(rep.instances.back().t, 0.0);
    EXPECT_EQ(rep.instances.back().shots, 0.0);
    EXPECT_NEAR(rep.fit.slope, 1.0, 1e-9);
}

TEST(Fit, needs_three_sizes) {
    const std::vector<MetricsRecord> records{synthetic_record(4, 16), synthetic_record(5, 32),
                                             synthetic_record(5, 30)};
    EXPECT_THROW(fit_records(records), ConfigError);
}

TEST(Fit, reads_files) {
    const auto path = scratch("fit.jsonl");
    {
        std::ofstream out(path);
        for (int n = 4; n <= 6; ++n) {
            out << to_json_line(synthetic_record(n, 3 * std::exp2(0.86 * n))) << '\n';
        }
    }
    const FitReport rep = fit_files({path});
    EXPECT_NEAR(rep.fit.slope, 0.86, 1e-9);
    EXPECT_NEAR(rep.fit.intercept, std::log2(3.0), 1e-9);
}

TEST(Counterexample, deterministic_per_seed) {
    CounterexampleConfig cfg;
    cfg.family = Family::qubo_weighted;
    cfg.n_min = 3;
    cfg.n_max = 5;
    cfg.budget = 300;
    cfg.seed = 4;
    cfg.verify_samples = 2000;
    const auto a = find_counterexample(cfg);
    const auto b = find_counterexample(cfg);
    EXPECT_EQ(a.trials, b.trials);
    ASSERT_EQ(a.hit.has_value(), b.hit.has_value());
    if (a.hit) {
        EXPECT_EQ(a.hit->instance, b.hit->instance);
        EXPECT_EQ(a.hit->record, b.hit->record);
        EXPECT_LT(a.hit->record.delta_S, 0);
    }
}

TEST(Counterexample, unweighted_maxcut_exhausts) {
    CounterexampleConfig cfg;
    cfg.family = Family::maxcut;
    cfg.n_min = 4;
    cfg.n_max = 7;
    cfg.budget = 200;
    const auto res = find_counterexample(cfg);
    EXPECT_FALSE(res.hit.has_value());
    EXPECT_EQ(res.trials, 200u);
    std::ostringstream out;
    print_counterexample(out, res);
    EXPECT_NE(out.str().find("exhausted"), std::string::npos);
}

TEST(Counterexample, rejects_zero_budget) {
    CounterexampleConfig cfg;
    cfg.budget = 0;
    EXPECT_THROW(find_counterexample(cfg), ConfigError);
}

TEST(DepthScan, empty_depth_list_is_config_error) {
    DepthScanConfig cfg;
    cfg.depths.clear();
    EXPECT_THROW(run_depth_scan(cfg), ConfigError);
}

TEST(DepthScan, depth_one_matches_closed_form) {
    DepthScanConfig cfg;
    cfg.source = EnumerateSource{5};
    cfg.depths = {1};
    cfg.samples = 400;
    const auto rows = run_depth_scan(cfg);
    ASSERT_EQ(rows.size(), 1u);
    const auto exact = evaluate_corpus(load_corpus(cfg.source, 0), AverageMethod::analytic_eq5, 1, 0, 1);
    std::vector<double> qmins;
    for (const auto &r : exact) {
        qmins.push_back(r.qmp_min);
    }
    const double exact_median = median(qmins);
    EXPECT_LE(std::abs(rows[0].qmp.median - exact_median), 3 * rows[0].qmp_std_error_rms);
    std::ostringstream out;
    write_depth_csv(out, rows);
    EXPECT_EQ(out.str().substr(0, out.str().find('\n')),
              "p,count,qmp_min,qmp_p1,qmp_q1,qmp_median,qmp_q3,qmp_p99,qmp_max,qmp_se_rms");
}

TEST(Verify, passes_and_reports_every_check) {
    const auto results = run_verify();
    EXPECT_GE(results.size(), 10u);
    for (const auto &r : results) {
        EXPECT_TRUE(r.passed) << r.name << " observed " << r.observed << " tol " << r.tolerance;
    }
    std::ostringstream out;
    print_verify_report(out, results);
    EXPECT_EQ(count_of(out.str(), "PASS"), results.size());
}

TEST(Verify, corrupt_kernel_is_caught) {
    VerifyOptions opt;
    opt.corrupt_kernel = true;
    opt.mc_samples = 2000;
    const auto results = run_verify(opt);
    const auto kernel = std::find_if(results.begin(), results.end(),
                                     [](const auto &r) { return r.name.starts_with("kernel_vs_wallis"); });
    ASSERT_NE(kernel, results.end());
    EXPECT_FALSE(kernel->passed);
}
