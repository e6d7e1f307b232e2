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

#include "rpqaoa/graph6.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "rpqaoa/enumerate.h"
#include "rpqaoa/errors.h"
#include "test_util.h"

using namespace rpqaoa;

// Expected edge sets below were produced by networkx's graph6 codec.

TEST(Graph6, decodes_k4) {
    Graph g = parse_graph6("C~");
    EXPECT_EQ(g, test_util::complete_graph(4));
}

TEST(Graph6, decodes_single_vertex) {
    Graph g = parse_graph6("@");
    EXPECT_EQ(g.num_vertices(), 1);
    EXPECT_EQ(g.num_edges(), 0u);
}

TEST(Graph6, decodes_reference_records) {
    EXPECT_EQ(parse_graph6("Bw"), test_util::complete_graph(3));
    EXPECT_EQ(parse_graph6("Ch"), test_util::path_graph(4));

    Graph expected(5);
    expected.add_edge(0, 2);
    expected.add_edge(0, 4);
    expected.add_edge(1, 3);
    expected.add_edge(3, 4);
    EXPECT_EQ(parse_graph6("DQc"), expected);
}

TEST(Graph6, encodes_reference_records) {
    EXPECT_EQ(to_graph6(test_util::path_graph(5)), "DhC");
    EXPECT_EQ(to_graph6(test_util::complete_graph(3)), "Bw");
    EXPECT_EQ(to_graph6(Graph(0)), "?");
}

TEST(Graph6, header_and_line_endings_are_ignored) {
    EXPECT_EQ(parse_graph6(">>graph6<<C~\r\n"), test_util::complete_graph(4));
}

TEST(Graph6, rejects_malformed_records) {
    EXPECT_THROW(parse_graph6("C~x"), FormatError);  // trailing byte
    EXPECT_THROW(parse_graph6("C"), FormatError);    // payload missing
    EXPECT_THROW(parse_graph6("C\x7f"), FormatError);
    EXPECT_THROW(parse_graph6("C "), FormatError);
    EXPECT_THROW(parse_graph6(""), FormatError);
}

TEST(Graph6, refuses_weighted_graphs) {
    Graph g(2);
    g.add_edge(0, 1, 2);
    EXPECT_THROW(to_graph6(g), InvalidInputError);
}

TEST(Graph6, long_size_field_round_trips) {
    Graph g(70);
    g.add_edge(0, 69);
    g.add_edge(33, 34);
    const std::string s = to_graph6(g);
    EXPECT_EQ(s[0], '~');
    EXPECT_EQ(parse_graph6(s), g);
}

TEST(Graph6, parse_inverts_encode_on_enumerated_graphs) {
    for (int n = 1; n <= 7; ++n) {
        for (const Graph &g : enumerate_connected_graphs(n)) {
            ASSERT_EQ(parse_graph6(to_graph6(g)), g);
        }
    }
}

TEST(Graph6, parse_inverts_encode_on_random_graphs) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Graph g = random_connected_graph(2 + static_cast<int>(seed % 30), seed);
        ASSERT_EQ(parse_graph6(to_graph6(g)), g);
    }
}

TEST(Graph6, file_round_trip) {
    const auto path = std::filesystem::temp_directory_path() / "rpqaoa_graph6_test.g6";
    std::vector<Graph> graphs = enumerate_connected_graphs(4);
    write_graph6_file(path, graphs, true);
    EXPECT_EQ(read_graph6_file(path), graphs);
    std::filesystem::remove(path);
}

TEST(Graph6, file_errors) {
    EXPECT_THROW(read_graph6_file("/nonexistent/corpus.g6"), IoError);
    const auto path = std::filesystem::temp_directory_path() / "rpqaoa_graph6_bad.g6";
    {
        std::ofstream out(path);
        out << "C~\nC~x\n";
    }
    try {
        read_graph6_file(path);
        FAIL() << "expected FormatError";
    } catch (const FormatError &e) {
        EXPECT_NE(std::string(e.what()).find(":2:"), std::string::npos);
    }
    std::filesystem::remove(path);
}
