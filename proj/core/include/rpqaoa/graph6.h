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

#ifndef RPQAOA_GRAPH6_H
#define RPQAOA_GRAPH6_H

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rpqaoa/graph.h"

namespace rpqaoa {

/// Decodes one graph6 record. A leading ">>graph6<<" header and trailing
/// line terminators are ignored. Bytes outside [63, 126], a short payload, or
/// trailing bytes after the payload raise FormatError.
Graph parse_graph6(std::string_view line);

/// Encodes an unweighted graph (no header, no newline).
std::string to_graph6(const Graph &g);

/// Reads every nonempty line of a graph6 file. Missing file raises IoError;
/// a bad line raises FormatError naming the line number.
std::vector<Graph> read_graph6_file(const std::filesystem::path &path);

void write_graph6_file(const std::filesystem::path &path, const std::vector<Graph> &graphs,
                       bool with_header = false);

}  // namespace rpqaoa

#endif  // RPQAOA_GRAPH6_H
