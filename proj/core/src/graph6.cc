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

#include <cstdint>
#include <fstream>

#include "rpqaoa/errors.h"

namespace rpqaoa {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int decode_byte(char c) {
    int v = static_cast<unsigned char>(c);
    if (v < 63 || v > 126) {
        throw FormatError("graph6 byte " + std::to_string(v) + " outside [63,126]");
    }
    return v - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    if (line.starts_with(kHeader)) {
        line.remove_prefix(kHeader.size());
    }
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
        line.remove_suffix(1);
    }
    if (line.empty()) {
        throw FormatError("empty graph6 record");
    }
    for (char c : line) {
        decode_byte(c);
    }

    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (decode_byte(line[0]) < 63) {
        n = decode_byte(line[0]);
        pos = 1;
    } else if (line.size() >= 2 && decode_byte(line[1]) < 63) {
        if (line.size() < 4) {
            throw FormatError("truncated graph6 size field");
        }
        for (std::size_t k = 1; k <= 3; ++k) {
            n = (n << 6) | decode_byte(line[k]);
        }
        pos = 4;
    } else {
        if (line.size() < 8) {
            throw FormatError("truncated graph6 size field");
        }
        for (std::size_t k = 2; k <= 7; ++k) {
            n = (n << 6) | decode_byte(line[k]);
        }
        pos = 8;
    }
    if (n > 4096) {
        throw CapacityError("graph6 record with " + std::to_string(n) + " vertices");
    }

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (line.size() - pos < bytes) {
        throw FormatError("truncated graph6 payload");
    }
    if (line.size() - pos > bytes) {
        throw FormatError("trailing bytes after graph6 payload");
    }

    Graph g(static_cast<int>(n));
    std::uint64_t k = 0;
    for (std::uint64_t j = 1; j < n; ++j) {
        for (std::uint64_t i = 0; i < j; ++i, ++k) {
            int byte = decode_byte(line[pos + k / 6]);
            if ((byte >> (5 - k % 6)) & 1) {
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph &g) {
    if (g.is_weighted()) {
        throw InvalidInputError("graph6 cannot encode edge weights");
    }
    const std::uint64_t n = g.num_vertices();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
        }
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
        }
    }

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::vector<int> payload((bits + 5) / 6, 0);
    for (const Edge &e : g.edges()) {
        // Column-major upper triangle: index of x(u, v) with u < v.
        std::uint64_t k = static_cast<std::uint64_t>(e.v) * (e.v - 1) / 2 + e.u;
        payload[k / 6] |= 1 << (5 - k % 6);
    }
    for (int b : payload) {
        out.push_back(static_cast<char>(b + 63));
    }
    return out;
}

std::vector<Graph> read_graph6_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open graph6 file " + path.string());
    }
    std::vector<Graph> graphs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line == kHeader || line.empty() || line == "\r") {
            continue;
        }
        try {
            graphs.push_back(parse_graph6(line));
        } catch (const FormatError &e) {
            throw FormatError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return graphs;
}

void write_graph6_file(const std::filesystem::path &path, const std::vector<Graph> &graphs,
                       bool with_header) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write graph6 file " + path.string());
    }
    for (const Graph &g : graphs) {
        if (with_header) {
            out << kHeader;
        }
        out << to_graph6(g) << '\n';
    }
}

}  // namespace rpqaoa
