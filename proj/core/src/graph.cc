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

#include "rpqaoa/graph.h"

#include <algorithm>
#include <string>
#include <utility>

#include "rpqaoa/errors.h"
#include "rpqaoa/random.h"

namespace rpqaoa {

Graph::Graph(int num_vertices) : n_(num_vertices) {
    if (num_vertices < 0) {
        throw InvalidInputError("graph vertex count must be non-negative");
    }
}

void Graph::add_edge(int u, int v, std::int64_t weight) {
    if (u == v) {
        throw InvalidInputError("self-loop at vertex " + std::to_string(u));
    }
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw InvalidInputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "} out of range for " + std::to_string(n_) + " vertices");
    }
    if (u > v) {
        std::swap(u, v);
    }
    Edge e{u, v, weight};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e, [](const Edge &a, const Edge &b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    if (it != edges_.end() && it->u == u && it->v == v) {
        throw InvalidInputError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "}");
    }
    edges_.insert(it, e);
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) {
        std::swap(u, v);
    }
    return std::any_of(edges_.begin(), edges_.end(),
                       [&](const Edge &e) { return e.u == u && e.v == v; });
}

bool Graph::is_weighted() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge &e) { return e.weight != 1; });
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
    std::vector<std::vector<int>> adj(n_);
    for (const Edge &e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

bool is_connected(const Graph &g) {
    const int n = g.num_vertices();
    if (n <= 1) {
        return true;
    }
    auto adj = g.adjacency_lists();
    std::vector<char> seen(n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int w : adj[queue[head]]) {
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return static_cast<int>(queue.size()) == n;
}

namespace {

Graph draw_connected(int n, Rng &rng) {
    if (n < 2) {
        throw InvalidInputError("random_connected_graph requires n >= 2");
    }
    while (true) {
        Graph g(n);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (rng.coin()) {
                    g.add_edge(i, j);
                }
            }
        }
        if (is_connected(g)) {
            return g;
        }
    }
}

}  // namespace

Graph random_connected_graph(int n, std::uint64_t seed) {
    Rng rng(seed);
    return draw_connected(n, rng);
}

Graph random_weighted_connected_graph(int n, std::span<const std::int64_t> weights,
                                      std::uint64_t seed) {
    if (weights.empty()) {
        throw InvalidInputError("weight alphabet must be nonempty");
    }
    Rng rng(seed);
    Graph topology = draw_connected(n, rng);
    Graph g(n);
    for (const Edge &e : topology.edges()) {
        g.add_edge(e.u, e.v, weights[rng.below(weights.size())]);
    }
    return g;
}

}  // namespace rpqaoa
