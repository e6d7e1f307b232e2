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

#include "rpqaoa_app/plot.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "rpqaoa/errors.h"

namespace rpqaoa::app {

namespace {

constexpr double kGroupWidth = 70;
constexpr double kLeft = 60;
constexpr double kTop = 40;
constexpr double kPlotHeight = 280;
constexpr double kHalfWidth = 26;

struct Frame {
    double lo;
    double hi;
    double y(double v) const { return kTop + (hi - v) / (hi - lo) * kPlotHeight; }
};

Frame make_frame(const std::vector<SummaryRow> &rows) {
    double lo = 1.0;
    double hi = 1.0;
    for (const auto &r : rows) {
        lo = std::min(lo, r.qmp.min);
        hi = std::max(hi, r.qmp.max);
    }
    const double pad = std::max(0.05 * (hi - lo), 0.01);
    return {lo - pad, hi + pad};
}

// Half-widths at the seven quantile nodes, from piecewise-constant density
// between neighbouring quantiles.
std::array<double, 7> violin_widths(const QmpPercentiles &q, double scale) {
    const std::array<double, 7> v{q.min, q.p1, q.q1, q.median, q.q3, q.p99, q.max};
    const std::array<double, 6> mass{0.01, 0.24, 0.25, 0.25, 0.24, 0.01};
    const double floor = std::max(1e-3 * (q.max - q.min), 1e-12);
    std::array<double, 6> density{};
    for (int k = 0; k < 6; ++k) {
        density[k] = mass[k] / std::max(v[k + 1] - v[k], floor);
    }
    const double peak = *std::max_element(density.begin(), density.end());
    std::array<double, 7> w{};
    for (int k = 0; k < 7; ++k) {
        const double left = k > 0 ? density[k - 1] : 0;
        const double right = k < 6 ? density[k] : 0;
        w[k] = scale * std::max(0.08, 0.5 * (left + right) / peak);
    }
    return w;
}

void glyph(std::ostringstream &svg, const SummaryRow &row, double cx, const Frame &f) {
    const QmpPercentiles &q = row.qmp;
    const std::array<double, 7> v{q.min, q.p1, q.q1, q.median, q.q3, q.p99, q.max};
    const auto w = violin_widths(q, kHalfWidth);
    svg << "<g class=\"violin\" data-n=\"" << row.n << "\">\n<polygon fill=\"#8fb5e8\" fill-opacity=\"0.6\" "
        << "stroke=\"#3a6fb0\" points=\"";
    for (int k = 0; k < 7; ++k) {
        svg << cx + w[k] << ',' << f.y(v[k]) << ' ';
    }
    for (int k = 6; k >= 0; --k) {
        svg << cx - w[k] << ',' << f.y(v[k]) << ' ';
    }
    svg << "\"/>\n";
    svg << "<line stroke=\"black\" x1=\"" << cx << "\" x2=\"" << cx << "\" y1=\"" << f.y(q.p1) << "\" y2=\""
        << f.y(q.p99) << "\"/>\n";
    svg << "<rect fill=\"#3a6fb0\" x=\"" << cx - 4 << "\" y=\"" << f.y(q.q3) << "\" width=\"8\" height=\""
        << std::max(f.y(q.q1) - f.y(q.q3), 0.5) << "\"/>\n";
    svg << "<circle class=\"median\" fill=\"orange\" r=\"4\" cx=\"" << cx << "\" cy=\"" << f.y(q.median) << "\"/>\n";
    for (double extreme : {q.min, q.max}) {
        svg << "<circle fill=\"red\" r=\"2.5\" cx=\"" << cx << "\" cy=\"" << f.y(extreme) << "\"/>\n";
    }
    svg << "<circle class=\"advantage\" fill=\"black\" r=\"2.5\" cx=\"" << cx << "\" cy=\"" << f.y(1.0) << "\"/>\n";
    svg << "<text text-anchor=\"middle\" font-size=\"12\" x=\"" << cx << "\" y=\"" << kTop + kPlotHeight + 18
        << "\">" << row.n << "</text>\n</g>\n";
}

}  // namespace

std::map<std::string, std::vector<SummaryRow>> group_by_family(const std::vector<SummaryRow> &rows) {
    std::map<std::string, std::vector<SummaryRow>> groups;
    for (const auto &r : rows) {
        groups[r.family].push_back(r);
    }
    for (auto &[family, list] : groups) {
        std::stable_sort(list.begin(), list.end(), [](const auto &a, const auto &b) { return a.n < b.n; });
    }
    return groups;
}

std::string render_qmp_svg(const std::string &family, const std::vector<SummaryRow> &rows) {
    const double width = kLeft + kGroupWidth * static_cast<double>(rows.size()) + 20;
    const double height = kTop + kPlotHeight + 50;
    const Frame f = make_frame(rows);
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" font-family=\"sans-serif\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << kLeft << "\" y=\"22\" font-size=\"14\">qmp_min, " << family << "</text>\n";
    svg << "<line stroke=\"black\" x1=\"" << kLeft << "\" x2=\"" << kLeft << "\" y1=\"" << kTop << "\" y2=\""
        << kTop + kPlotHeight << "\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        const double v = f.lo + (f.hi - f.lo) * t / 4;
        svg << "<text text-anchor=\"end\" font-size=\"11\" x=\"" << kLeft - 4 << "\" y=\"" << f.y(v) + 4 << "\">"
            << std::setprecision(3) << v << "</text>\n";
    }
    svg << "<line class=\"reference\" stroke=\"gray\" stroke-dasharray=\"4 3\" x1=\"" << kLeft << "\" x2=\""
        << width - 10 << "\" y1=\"" << f.y(1.0) << "\" y2=\"" << f.y(1.0) << "\"/>\n";
    svg << std::setprecision(6);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        glyph(svg, rows[i], kLeft + kGroupWidth * (static_cast<double>(i) + 0.5), f);
    }
    svg << "<text text-anchor=\"middle\" font-size=\"12\" x=\"" << (kLeft + width) / 2 << "\" y=\"" << height - 8
        << "\">n</text>\n</svg>\n";
    return svg.str();
}

std::vector<PlotFile> plot_summary(const std::filesystem::path &csv, const std::filesystem::path &out_dir) {
    std::ifstream in(csv);
    if (!in) {
        throw IoError("cannot open summary " + csv.string());
    }
    const auto rows = read_summary_csv(in);
    if (rows.empty()) {
        throw FormatError(csv.string() + ": summary has no rows");
    }
    std::filesystem::create_directories(out_dir);
    std::vector<PlotFile> files;
    for (const auto &[family, list] : group_by_family(rows)) {
        PlotFile file{family, out_dir / ("qmp_" + family + ".svg"), list.size()};
        std::ofstream out(file.path);
        out << render_qmp_svg(family, list);
        if (!out) {
            throw IoError("cannot write " + file.path.string());
        }
        files.push_back(std::move(file));
    }
    return files;
}

}  // namespace rpqaoa::app
