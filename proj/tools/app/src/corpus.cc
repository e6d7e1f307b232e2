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

#include "rpqaoa_app/corpus.h"

#include <array>

#include "rpqaoa/enumerate.h"
#include "rpqaoa/errors.h"
#include "rpqaoa/graph6.h"
#include "rpqaoa/random.h"
#include "rpqaoa/records.h"

namespace rpqaoa::app {

std::string_view to_string(Family f) {
    switch (f) {
        case Family::maxcut:
            return "maxcut";
        case Family::maxcut_weights_1_2:
            return "maxcut_weights_1_2";
        case Family::qubo_unweighted:
            return "qubo_unweighted";
        case Family::qubo_weighted:
            return "qubo_weighted";
    }
    return "maxcut";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::maxcut, Family::maxcut_weights_1_2, Family::qubo_unweighted, Family::qubo_weighted}) {
        if (to_string(f) == name) {
            return f;
        }
    }
    throw ConfigError("unknown family '" + std::string(name) +
                      "' (expected maxcut, maxcut_weights_1_2, qubo_unweighted, qubo_weighted)");
}

QuboInstance make_instance(Family family, int n, std::uint64_t seed) {
    static constexpr std::array<std::int64_t, 2> kOneTwo{1, 2};
    switch (family) {
        case Family::maxcut:
            return maxcut_from_graph(random_connected_graph(n, seed));
        case Family::maxcut_weights_1_2: {
            // An all-ones draw is still tagged weighted: it belongs to the family.
            Graph g = random_weighted_connected_graph(n, kOneTwo, seed);
            std::vector<Coupling> c;
            for (const Edge &e : g.edges()) {
                c.push_back({e.u, e.v, e.weight});
            }
            return QuboInstance(n, std::move(c), {}, ProblemKind::maxcut_weighted);
        }
        case Family::qubo_unweighted:
            return random_qubo(n, false, seed);
        case Family::qubo_weighted:
            return random_qubo(n, true, seed);
    }
    throw ConfigError("unknown family");
}

namespace {

void check_size(int n, bool allow_large, std::string_view what) {
    if (n > kDefaultSweepMaxN && !allow_large) {
        throw ConfigError(std::string(what) + " contains n=" + std::to_string(n) + " > " +
                          std::to_string(kDefaultSweepMaxN) + "; pass the large-n flag to run it");
    }
}

std::vector<CorpusItem> from_graphs(const std::vector<Graph> &graphs, std::uint64_t master_seed, bool allow_large,
                                    std::string_view what) {
    std::vector<CorpusItem> items;
    items.reserve(graphs.size());
    for (std::size_t k = 0; k < graphs.size(); ++k) {
        check_size(graphs[k].num_vertices(), allow_large, what);
        items.push_back({to_graph6(graphs[k]), maxcut_from_graph(graphs[k]), derive_seed(master_seed, k)});
    }
    return items;
}

}  // namespace

std::vector<CorpusItem> load_corpus(const CorpusSource &source, std::uint64_t master_seed, bool allow_large) {
    if (const auto *e = std::get_if<EnumerateSource>(&source)) {
        if (e->n > kDefaultSweepMaxN) {
            throw ConfigError("exhaustive enumeration is limited to n <= " + std::to_string(kDefaultSweepMaxN) +
                              "; emit a corpus with `rpqaoa enumerate --allow-large` and pass it with --graph6");
        }
        try {
            return from_graphs(enumerate_connected_graphs(e->n), master_seed, allow_large, "enumeration");
        } catch (const InvalidInputError &err) {
            throw ConfigError(err.what());
        }
    }
    if (const auto *g = std::get_if<Graph6Source>(&source)) {
        return from_graphs(read_graph6_file(g->path), master_seed, allow_large, "graph6 corpus");
    }
    if (const auto *f = std::get_if<InstancesSource>(&source)) {
        std::vector<CorpusItem> items;
        for (auto &rec : read_instances_jsonl(f->path)) {
            check_size(rec.instance.num_variables(), allow_large, "instance file");
            items.push_back({std::move(rec.id), std::move(rec.instance), rec.seed});
        }
        return items;
    }
    const auto &ens = std::get<EnsembleSource>(source);
    if (ens.sizes.empty() || ens.count == 0) {
        throw ConfigError("ensemble needs at least one size and a positive count");
    }
    std::vector<CorpusItem> items;
    std::uint64_t k = 0;
    for (int n : ens.sizes) {
        if (n < 2) {
            throw ConfigError("ensemble sizes must be >= 2");
        }
        if (n > kDefaultMaxVariables) {
            throw ConfigError("ensemble size " + std::to_string(n) + " exceeds the simulation limit");
        }
        for (std::size_t i = 0; i < ens.count; ++i, ++k) {
            const std::uint64_t seed = derive_seed(master_seed, k);
            items.push_back({std::string(to_string(ens.family)) + "-n" + std::to_string(n) + "-" + std::to_string(i),
                             make_instance(ens.family, n, seed), seed});
        }
    }
    return items;
}

}  // namespace rpqaoa::app
