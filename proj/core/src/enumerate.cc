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

#include "rpqaoa/enumerate.h"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "rpqaoa/errors.h"

namespace rpqaoa {

namespace {

constexpr int kCodeVertexLimit = 11;

using AdjacencyMasks = std::vector<std::uint32_t>;

AdjacencyMasks masks_of(const Graph &g) {
    AdjacencyMasks adj(g.num_vertices(), 0);
    for (const Edge &e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    return adj;
}

// Stable coloring by iterated refinement. Colors are ranks of sorted
// signatures, so the coloring is invariant under relabeling.
std::vector<int> refine_colors(const AdjacencyMasks &adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) {
        color[v] = std::popcount(adj[v]);
    }
    int num_colors = -1;
    while (true) {
        std::vector<std::vector<int>> signature(n);
        for (int v = 0; v < n; ++v) {
            signature[v].push_back(color[v]);
            std::vector<int> nb;
            for (int w = 0; w < n; ++w) {
                if ((adj[v] >> w) & 1) {
                    nb.push_back(color[w]);
                }
            }
            std::sort(nb.begin(), nb.end());
            signature[v].insert(signature[v].end(), nb.begin(), nb.end());
        }
        std::map<std::vector<int>, int> rank;
        for (const auto &s : signature) {
            rank.emplace(s, 0);
        }
        int next = 0;
        for (auto &[sig, r] : rank) {
            r = next++;
        }
        for (int v = 0; v < n; ++v) {
            color[v] = rank[signature[v]];
        }
        if (next == num_colors) {
            return color;
        }
        num_colors = next;
    }
}

std::uint64_t code_for_order(const AdjacencyMasks &adj, const std::vector<int> &order) {
    const int n = static_cast<int>(order.size());
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j) {
        const std::uint32_t row = adj[order[j]];
        for (int i = 0; i < j; ++i) {
            code = (code << 1) | ((row >> order[i]) & 1u);
        }
    }
    return code;
}

// Best vertex order: order[k] is the original vertex placed at position k.
std::pair<std::uint64_t, std::vector<int>> canonical_order(const Graph &g) {
    const int n = g.num_vertices();
    if (n > kCodeVertexLimit) {
        throw CapacityError("canonical_code supports at most " + std::to_string(kCodeVertexLimit) +
                            " vertices");
    }
    const AdjacencyMasks adj = masks_of(g);
    const std::vector<int> color = refine_colors(adj);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return color[a] < color[b]; });
    // Cell boundaries in `order`.
    std::vector<std::pair<int, int>> cells;
    for (int start = 0; start < n;) {
        int end = start;
        while (end < n && color[order[end]] == color[order[start]]) {
            ++end;
        }
        cells.emplace_back(start, end);
        start = end;
    }

    std::uint64_t best_code = code_for_order(adj, order);
    std::vector<int> best_order = order;
    // Odometer over the per-cell permutations; every cell starts sorted.
    while (true) {
        std::size_t c = 0;
        for (; c < cells.size(); ++c) {
            auto [s, e] = cells[c];
            if (std::next_permutation(order.begin() + s, order.begin() + e)) {
                break;
            }
        }
        if (c == cells.size()) {
            break;
        }
        std::uint64_t code = code_for_order(adj, order);
        if (code > best_code) {
            best_code = code;
            best_order = order;
        }
    }
    return {best_code, best_order};
}

Graph relabel(const Graph &g, const std::vector<int> &order) {
    std::vector<int> position(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        position[order[k]] = static_cast<int>(k);
    }
    Graph out(g.num_vertices());
    for (const Edge &e : g.edges()) {
        out.add_edge(position[e.u], position[e.v], e.weight);
    }
    return out;
}

void check_cap(int n, int cap) {
    if (cap > kMaxEnumerationVertices) {
        throw CapacityError("enumeration cap " + std::to_string(cap) + " exceeds the hard limit of " +
                            std::to_string(kMaxEnumerationVertices) + " vertices");
    }
    if (n < 1) {
        throw InvalidInputError("enumeration requires n >= 1");
    }
    if (n > cap) {
        throw CapacityError("built-in enumeration is capped at n=" + std::to_string(cap) +
                            "; supply a graph6 corpus for n=" + std::to_string(n));
    }
}

}  // namespace

std::uint64_t canonical_code(const Graph &g) { return canonical_order(g).first; }

Graph canonical_form(const Graph &g) { return relabel(g, canonical_order(g).second); }

std::vector<Graph> enumerate_graphs(int n, int cap) {
    check_cap(n, cap);
    // Grow one vertex at a time: every graph on k+1 vertices is some graph on
    // k vertices plus a new vertex with an arbitrary neighborhood.
    std::vector<Graph> level{Graph(1)};
    for (int k = 1; k < n; ++k) {
        std::unordered_map<std::uint64_t, Graph> seen;
        for (const Graph &base : level) {
            for (std::uint32_t nb = 0; nb < (1u << k); ++nb) {
                Graph g(k + 1);
                for (const Edge &e : base.edges()) {
                    g.add_edge(e.u, e.v);
                }
                for (int v = 0; v < k; ++v) {
                    if ((nb >> v) & 1) {
                        g.add_edge(v, k);
                    }
                }
                auto [code, order] = canonical_order(g);
                if (!seen.contains(code)) {
                    seen.emplace(code, relabel(g, order));
                }
            }
        }
        std::vector<std::pair<std::uint64_t, Graph>> sorted(seen.begin(), seen.end());
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto &a, const auto &b) { return a.first < b.first; });
        level.clear();
        for (auto &[code, g] : sorted) {
            level.push_back(std::move(g));
        }
    }
    return level;
}

std::vector<Graph> enumerate_connected_graphs(int n, int cap) {
    std::vector<Graph> all = enumerate_graphs(n, cap);
    std::erase_if(all, [](const Graph &g) { return !is_connected(g); });
    return all;
}

}  // namespace rpqaoa
