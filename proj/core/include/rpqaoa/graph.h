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

#ifndef RPQAOA_GRAPH_H
#define RPQAOA_GRAPH_H

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace rpqaoa {

struct Edge {
    int u = 0;  // always u < v
    int v = 0;
    std::int64_t weight = 1;

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Simple undirected graph with optional integer edge weights. Edges are kept
/// sorted by (u, v), so two graphs with the same edge set compare equal
/// regardless of insertion order.
class Graph {
   public:
    Graph() = default;
    explicit Graph(int num_vertices);

    int num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    std::span<const Edge> edges() const { return edges_; }

    /// Adds {u, v}. Rejects self-loops, duplicates, and out-of-range vertices
    /// with InvalidInputError.
    void add_edge(int u, int v, std::int64_t weight = 1);
    bool has_edge(int u, int v) const;

    /// True if any edge weight differs from 1.
    bool is_weighted() const;

    std::vector<std::vector<int>> adjacency_lists() const;

    friend bool operator==(const Graph &, const Graph &) = default;

   private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

/// Single connected component test by breadth-first search. Graphs with zero
/// or one vertex count as connected.
bool is_connected(const Graph &g);

/// Erdős–Rényi G(n, 1/2), resampled until connected. Pairs are drawn in
/// lexicographic (i, j) order, one fair coin each.
Graph random_connected_graph(int n, std::uint64_t seed);

/// random_connected_graph(n, seed) with each edge weight drawn uniformly from
/// `weights` using the same generator stream.
Graph random_weighted_connected_graph(int n, std::span<const std::int64_t> weights,
                                      std::uint64_t seed);

}  // namespace rpqaoa

#endif  // RPQAOA_GRAPH_H
