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

#ifndef RPQAOA_APP_PLOT_H
#define RPQAOA_APP_PLOT_H

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "rpqaoa_app/sweep.h"

namespace rpqaoa::app {

/// Summary rows keyed by family, each list sorted by n.
std::map<std::string, std::vector<SummaryRow>> group_by_family(const std::vector<SummaryRow> &rows);

/// Schematic qmp_min figure: one violin/box glyph per row (shape drawn from
/// the percentile spacing), orange median, red min/max, whiskers at p1/p99,
/// and a dashed reference line with black dots at qmp = 1.
std::string render_qmp_svg(const std::string &family, const std::vector<SummaryRow> &rows);

struct PlotFile {
    std::string family;
    std::filesystem::path path;
    std::size_t groups = 0;
};

/// Reads a summary CSV and writes qmp_<family>.svg into out_dir.
std::vector<PlotFile> plot_summary(const std::filesystem::path &csv, const std::filesystem::path &out_dir);

}  // namespace rpqaoa::app

#endif  // RPQAOA_APP_PLOT_H
