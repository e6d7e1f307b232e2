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

#ifndef RPQAOA_ENUMERATE_H
#define RPQAOA_ENUMERATE_H

#include <cstdint>
#include <vector>

#include "rpqaoa/graph.h"

namespace rpqaoa {

/// Default vertex cap of the built-in enumerator. Larger corpora are expected
/// to come from graph6 files.
inline constexpr int kDefaultEnumerationCap = 7;

/// Hard ceiling; canonical codes are packed into 64 bits.
inline constexpr int kMaxEnumerationVertices = 9;

/// Canonical adjacency code of an unweighted graph with at most 11 vertices.
///
/// Vertices are first partitioned by iterated color refinement (degree, then
/// multiset of neighbor colors). The code is the maximum, over all vertex
/// orders that list the refined cells in color order, of the upper-triangle
/// adjacency bits read in graph6 order (x01, x02, x12, x03, ...), first bit
/// most significant. Isomorphic graphs have equal codes.
std::uint64_t canonical_code(const Graph &g);

/// Graph with vertices relabeled so that its graph6 bit pattern equals
/// canonical_code(g).
Graph canonical_form(const Graph &g);

/// One representative (in canonical form) per isomorphism class of simple
/// graphs on n vertices, sorted by canonical code.
std::vector<Graph> enumerate_graphs(int n, int cap = kDefaultEnumerationCap);

/// enumerate_graphs(n) restricted to connected graphs. n above `cap` raises
/// CapacityError; `cap` itself may not exceed kMaxEnumerationVertices.
std::vector<Graph> enumerate_connected_graphs(int n, int cap = kDefaultEnumerationCap);

}  // namespace rpqaoa

#endif  // RPQAOA_ENUMERATE_H
