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

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "rpqaoa/enumerate.h"
#include "rpqaoa/errors.h"
#include "rpqaoa/graph6.h"
#include "rpqaoa/records.h"
#include "rpqaoa_app/counterexample.h"
#include "rpqaoa_app/depth_scan.h"
#include "rpqaoa_app/fit.h"
#include "rpqaoa_app/plot.h"
#include "rpqaoa_app/sweep.h"
#include "rpqaoa_app/verify.h"

namespace {

using namespace rpqaoa;
using namespace rpqaoa::app;

struct SourceFlags {
    std::vector<int> n;
    std::string graph6;
    std::string instances;
    std::string family;
    std::size_t count = 100;

    void attach(CLI::App *cmd) {
        cmd->add_option("--n", n, "Size(s): enumerate size, or ensemble sizes with --family");
        cmd->add_option("--graph6", graph6, "Graph corpus in graph6 format");
        cmd->add_option("--instances", instances, "Instance JSONL corpus");
        cmd->add_option("--family", family, "Random ensemble: maxcut, maxcut_weights_1_2, qubo_unweighted, qubo_weighted");
        cmd->add_option("--count", count, "Ensemble instances per size")->capture_default_str();
    }

    CorpusSource resolve() const {
        const int given = !graph6.empty() + !instances.empty() + !family.empty();
        if (given > 1) {
            throw ConfigError("choose one of --graph6, --instances, --family");
        }
        if (!graph6.empty()) {
            return Graph6Source{graph6};
        }
        if (!instances.empty()) {
            return InstancesSource{instances};
        }
        if (!family.empty()) {
            if (n.empty()) {
                throw ConfigError("--family needs at least one --n");
            }
            return EnsembleSource{parse_family(family), n, count};
        }
        if (n.size() != 1) {
            throw ConfigError("enumeration needs exactly one --n (or use --graph6/--instances/--family)");
        }
        return EnumerateSource{n.front()};
    }
};

std::ofstream open_output(const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }
    return out;
}

void print_summary(const std::vector<MetricsRecord> &records, const std::vector<SummaryRow> &rows) {
    write_summary_csv(std::cout, rows);
    std::map<std::pair<std::string, int>, std::vector<double>> change;
    for (const auto &r : records) {
        if (r.approx_ratio_rs > 0) {
            change[{std::string(to_string(r.kind)), r.n}].push_back(r.approx_ratio_q / r.approx_ratio_rs - 1);
        }
    }
    for (auto &[key, values] : change) {
        std::cout << "# " << key.first << " n=" << key.second
                  << " median relative approx-ratio change: " << median(values) << '\n';
    }
}

int run(int argc, char **argv) {
    CLI::App app{"Random-parameter QAOA analysis"};
    app.require_subcommand(1);

    // sweep
    auto *sweep = app.add_subcommand("sweep", "Per-instance metrics (JSONL) and per-size summary (CSV)");
    SourceFlags sweep_src;
    sweep_src.attach(sweep);
    std::string config_path, method = "analytic_eq5", out, summary;
    int p = 1, jobs = 1;
    std::size_t samples = kDefaultSamples;
    std::uint64_t seed = 0;
    bool allow_large = false;
    sweep->add_option("--config", config_path, "JSON file mirroring SweepConfig; other flags are ignored");
    sweep->add_option("--method", method, "analytic_eq5 or mc_average")->capture_default_str();
    sweep->add_option("--p", p, "Circuit depth")->capture_default_str();
    sweep->add_option("--samples", samples, "Angle samples for mc_average")->capture_default_str();
    sweep->add_option("--seed", seed, "Master seed")->capture_default_str();
    sweep->add_option("--out", out, "Metrics JSONL path");
    sweep->add_option("--summary", summary, "Summary CSV path (default <out>.summary.csv)");
    sweep->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
    sweep->add_flag("--allow-large", allow_large, "Permit graph corpora beyond n = 7");

    // depth-scan
    auto *depth = app.add_subcommand("depth-scan", "Monte Carlo qmp_min percentiles per circuit depth");
    SourceFlags depth_src;
    depth_src.attach(depth);
    std::vector<int> depths{1, 2, 3, 4, 5};
    depth->add_option("--p", depths, "Depths to scan")->capture_default_str();
    depth->add_option("--samples", samples, "Angle samples per instance and depth")->capture_default_str();
    depth->add_option("--seed", seed, "Master seed")->capture_default_str();
    depth->add_option("--out", out, "CSV path (default stdout)");
    depth->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
    depth->add_flag("--allow-large", allow_large, "Permit graph corpora beyond n = 7");

    // verify
    auto *verify = app.add_subcommand("verify", "Run every cross-oracle and invariant check");
    VerifyOptions vopt;
    bool corrupt = false;
    verify->add_option("--seed", vopt.seed, "Seed for the randomized checks")->capture_default_str();
    verify->add_option("--samples", vopt.mc_samples, "Monte Carlo samples")->capture_default_str();
    verify->add_flag("--corrupt-kernel", corrupt)->group("");

    // fit
    auto *fit = app.add_subcommand("fit", "Scaling fit of log2 median T(n)");
    std::vector<std::string> fit_paths;
    double goal = kDefaultGoal;
    bool per_instance = false;
    fit->add_option("records", fit_paths, "Metrics JSONL files")->required();
    fit->add_option("--goal", goal, "Target success probability for shots-to-goal")->capture_default_str();
    fit->add_flag("--per-instance", per_instance, "Also list p_min, T and shots per instance");

    // counterexample
    auto *cex = app.add_subcommand("counterexample", "Random search for an instance with delta_S < 0");
    CounterexampleConfig cex_cfg;
    std::string cex_family = "maxcut_weights_1_2";
    cex->add_option("--family", cex_family, "maxcut_weights_1_2, qubo_weighted, qubo_unweighted, maxcut")
        ->capture_default_str();
    cex->add_option("--n-min", cex_cfg.n_min)->capture_default_str();
    cex->add_option("--n-max", cex_cfg.n_max)->capture_default_str();
    cex->add_option("--budget", cex_cfg.budget, "Number of random instances")->capture_default_str();
    cex->add_option("--seed", cex_cfg.seed)->capture_default_str();
    cex->add_option("--samples", cex_cfg.verify_samples, "Monte Carlo samples for re-verification")
        ->capture_default_str();
    cex->add_option("--out", out, "Write the report here instead of stdout");

    // plot
    auto *plot = app.add_subcommand("plot", "SVG qmp_min figure per family from a summary CSV");
    std::string csv, out_dir = ".";
    plot->add_option("summary", csv, "Summary CSV")->required();
    plot->add_option("--out", out_dir, "Output directory")->capture_default_str();

    // gen
    auto *gen = app.add_subcommand("gen", "Emit a random ensemble as instance JSONL");
    std::string gen_family;
    std::vector<int> gen_n;
    std::size_t gen_count = 100;
    gen->add_option("--family", gen_family)->required();
    gen->add_option("--n", gen_n)->required();
    gen->add_option("--count", gen_count, "Instances per size")->capture_default_str();
    gen->add_option("--seed", seed, "Master seed")->capture_default_str();
    gen->add_option("--out", out, "JSONL path (default stdout)");

    // enumerate
    auto *enumerate = app.add_subcommand("enumerate", "Emit all non-isomorphic graphs on n vertices as graph6");
    int enum_n = 4;
    bool all_graphs = false;
    enumerate->add_option("--n", enum_n)->required();
    enumerate->add_flag("--all", all_graphs, "Include disconnected graphs");
    enumerate->add_flag("--allow-large", allow_large, "Raise the size cap to " +
                                                          std::to_string(kMaxEnumerationVertices));
    enumerate->add_option("--out", out, "graph6 path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    if (*sweep) {
        SweepConfig cfg;
        if (!config_path.empty()) {
            cfg = load_sweep_config(config_path);
        } else {
            cfg.source = sweep_src.resolve();
            cfg.method = parse_average_method(method);
            cfg.p = p;
            cfg.samples = samples;
            cfg.master_seed = seed;
            cfg.output = out;
            cfg.summary = summary;
            cfg.jobs = jobs;
            cfg.allow_large = allow_large;
        }
        const SweepResult result = run_sweep(cfg);
        print_summary(result.records, result.summary);
        return 0;
    }
    if (*depth) {
        DepthScanConfig cfg;
        cfg.source = depth_src.resolve();
        cfg.depths = depths;
        cfg.samples = samples;
        cfg.master_seed = seed;
        cfg.jobs = jobs;
        cfg.allow_large = allow_large;
        const auto rows = run_depth_scan(cfg);
        if (out.empty()) {
            write_depth_csv(std::cout, rows);
        } else {
            auto file = open_output(out);
            write_depth_csv(file, rows);
        }
        return 0;
    }
    if (*verify) {
        vopt.corrupt_kernel = corrupt;
        const auto results = run_verify(vopt);
        print_verify_report(std::cout, results);
        const bool ok = std::all_of(results.begin(), results.end(), [](const auto &r) { return r.passed; });
        std::cout << (ok ? "all checks passed" : "some checks FAILED") << '\n';
        return ok ? 0 : 1;
    }
    if (*fit) {
        std::vector<std::filesystem::path> paths(fit_paths.begin(), fit_paths.end());
        print_fit_report(std::cout, fit_files(paths, goal), per_instance);
        return 0;
    }
    if (*cex) {
        cex_cfg.family = parse_family(cex_family);
        const auto result = find_counterexample(cex_cfg);
        if (out.empty()) {
            print_counterexample(std::cout, result);
        } else {
            auto file = open_output(out);
            print_counterexample(file, result);
            std::cout << (result.hit ? "counterexample written to " + out : "exhausted") << '\n';
        }
        return 0;
    }
    if (*plot) {
        for (const auto &f : plot_summary(csv, out_dir)) {
            std::cout << f.path.string() << " (" << f.groups << " groups)\n";
        }
        return 0;
    }
    if (*gen) {
        const auto corpus = load_corpus(EnsembleSource{parse_family(gen_family), gen_n, gen_count}, seed, true);
        std::ofstream file;
        if (!out.empty()) {
            file = open_output(out);
        }
        std::ostream &dst = out.empty() ? std::cout : file;
        for (const auto &item : corpus) {
            dst << to_json_line(InstanceRecord{item.id, item.instance, item.seed}) << '\n';
        }
        return 0;
    }
    if (*enumerate) {
        const int cap = allow_large ? kMaxEnumerationVertices : kDefaultEnumerationCap;
        const auto graphs = all_graphs ? enumerate_graphs(enum_n, cap) : enumerate_connected_graphs(enum_n, cap);
        if (out.empty()) {
            for (const auto &g : graphs) {
                std::cout << to_graph6(g) << '\n';
            }
        } else {
            write_graph6_file(out, graphs, false);
            std::cout << graphs.size() << " graphs written to " << out << '\n';
        }
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const rpqaoa::ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
