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

#include "rpqaoa_app/fit.h"

#include <map>
#include <ostream>

#include "rpqaoa/errors.h"
#include "rpqaoa/records.h"

namespace rpqaoa::app {

FitReport fit_records(const std::vector<MetricsRecord> &records, double goal) {
    if (!(goal > 0 && goal < 1)) {
        throw ConfigError("goal probability must lie in (0, 1)");
    }
    FitReport report;
    report.goal = goal;
    std::map<int, std::vector<double>> by_n;
    for (const auto &rec : records) {
        if (rec.levels.empty()) {
            throw InvalidInputError("record " + rec.id + " has no levels");
        }
        InstanceScaling s{rec.id, rec.n, rec.p_min(), 0, 0};
        // A constant cost function has one level and T = 0 in the limit.
        if (rec.levels.size() > 1) {
            s.t = t_of_n(s.p_min);
            s.shots = shots_to_goal(s.p_min, goal);
        }
        by_n[rec.n].push_back(s.t);
        report.instances.push_back(std::move(s));
    }
    if (by_n.size() < 3) {
        throw ConfigError("scaling fit needs records spanning at least 3 values of n, got " +
                          std::to_string(by_n.size()));
    }
    for (auto &[n, ts] : by_n) {
        report.median_t.push_back({n, median(std::move(ts))});
    }
    report.fit = fit_exponent(report.median_t);
    return report;
}

FitReport fit_files(const std::vector<std::filesystem::path> &paths, double goal) {
    std::vector<MetricsRecord> records;
    for (const auto &path : paths) {
        auto part = read_metrics_jsonl(path);
        records.insert(records.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return fit_records(records, goal);
}

void print_fit_report(std::ostream &out, const FitReport &report, bool per_instance) {
    out << "n,median_T\n";
    for (const auto &pt : report.median_t) {
        out << pt.n << ',' << pt.t << '\n';
    }
    out << "slope " << report.fit.slope << " (T ~ 2^(" << report.fit.slope << " n)), intercept "
        << report.fit.intercept << '\n';
    if (per_instance) {
        out << "id,n,p_min,T,shots_to_goal_" << report.goal << '\n';
        for (const auto &s : report.instances) {
            out << s.id << ',' << s.n << ',' << s.p_min << ',' << s.t << ',' << s.shots << '\n';
        }
    }
}

}  // namespace rpqaoa::app
