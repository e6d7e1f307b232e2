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

#include "rpqaoa/records.h"

#include <cmath>
#include <fstream>

#include "json.hpp"
#include "rpqaoa/errors.h"

namespace rpqaoa {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json cost_value(double c) {
    if (c == std::nearbyint(c) && std::abs(c) < 0x1.0p53) {
        return static_cast<std::int64_t>(c);
    }
    return c;
}

template <typename T>
T field(const ordered_json &j, const char *key) {
    if (!j.contains(key)) {
        throw FormatError(std::string("record is missing '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw FormatError(std::string("bad value for '") + key + "': " + e.what());
    }
}

ordered_json parse_object(std::string_view line) {
    ordered_json j;
    try {
        j = ordered_json::parse(line);
    } catch (const nlohmann::json::parse_error &e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw FormatError("JSON record must be an object");
    }
    return j;
}

template <typename Record, typename Parse>
std::vector<Record> read_lines(const std::filesystem::path &path, Parse parse) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::vector<Record> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        try {
            out.push_back(parse(line));
        } catch (const FormatError &e) {
            throw FormatError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace

std::string to_json_line(const InstanceRecord &rec) {
    ordered_json j;
    j["id"] = rec.id;
    j["kind"] = std::string(to_string(rec.instance.kind()));
    j["n"] = rec.instance.num_variables();
    j["couplings"] = ordered_json::array();
    for (const Coupling &c : rec.instance.couplings()) {
        j["couplings"].push_back({c.i, c.j, c.s});
    }
    j["linears"] = ordered_json::array();
    for (const Linear &l : rec.instance.linears()) {
        j["linears"].push_back({l.i, l.s});
    }
    j["seed"] = rec.seed;
    return j.dump();
}

InstanceRecord parse_instance_line(std::string_view line) {
    const ordered_json j = parse_object(line);
    InstanceRecord rec;
    rec.id = field<std::string>(j, "id");
    rec.seed = field<std::uint64_t>(j, "seed");
    const int n = field<int>(j, "n");
    const ProblemKind kind = parse_problem_kind(field<std::string>(j, "kind"));
    std::vector<Coupling> couplings;
    for (const auto &c : field<std::vector<std::vector<std::int64_t>>>(j, "couplings")) {
        if (c.size() != 3) {
            throw FormatError("coupling entries are [i, j, s]");
        }
        couplings.push_back({static_cast<int>(c[0]), static_cast<int>(c[1]), c[2]});
    }
    std::vector<Linear> linears;
    for (const auto &l : field<std::vector<std::vector<std::int64_t>>>(j, "linears")) {
        if (l.size() != 2) {
            throw FormatError("linear entries are [i, s]");
        }
        linears.push_back({static_cast<int>(l[0]), l[1]});
    }
    try {
        rec.instance = QuboInstance(n, std::move(couplings), std::move(linears), kind);
    } catch (const InvalidInputError &e) {
        throw FormatError(std::string("inconsistent instance: ") + e.what());
    }
    return rec;
}

std::vector<InstanceRecord> read_instances_jsonl(const std::filesystem::path &path) {
    return read_lines<InstanceRecord>(path, parse_instance_line);
}

std::string to_json_line(const MetricsRecord &rec) {
    ordered_json j;
    j["id"] = rec.id;
    j["kind"] = std::string(to_string(rec.kind));
    j["n"] = rec.n;
    j["p"] = rec.p;
    j["method"] = std::string(to_string(rec.method));
    j["seed"] = rec.seed;
    j["c_min"] = cost_value(rec.c_min);
    j["c_max"] = cost_value(rec.c_max);
    j["S_c"] = rec.S_c;
    j["S_q"] = rec.S_q;
    j["delta_S"] = rec.delta_S;
    j["qmp_min"] = rec.qmp_min;
    j["approx_ratio_rs"] = rec.approx_ratio_rs;
    j["approx_ratio_q"] = rec.approx_ratio_q;
    j["levels"] = ordered_json::array();
    for (const LevelRecord &l : rec.levels) {
        ordered_json level;
        level["c"] = cost_value(l.c);
        level["w"] = l.w;
        level["p_rs"] = l.p_rs;
        level["p_avg"] = l.p_avg;
        j["levels"].push_back(std::move(level));
    }
    return j.dump();
}

MetricsRecord parse_metrics_line(std::string_view line) {
    const ordered_json j = parse_object(line);
    MetricsRecord r;
    r.id = field<std::string>(j, "id");
    r.kind = parse_problem_kind(field<std::string>(j, "kind"));
    r.n = field<int>(j, "n");
    r.p = field<int>(j, "p");
    r.method = parse_average_method(field<std::string>(j, "method"));
    r.seed = field<std::uint64_t>(j, "seed");
    r.c_min = field<double>(j, "c_min");
    r.c_max = field<double>(j, "c_max");
    r.S_c = field<double>(j, "S_c");
    r.S_q = field<double>(j, "S_q");
    r.delta_S = field<double>(j, "delta_S");
    r.qmp_min = field<double>(j, "qmp_min");
    r.approx_ratio_rs = field<double>(j, "approx_ratio_rs");
    r.approx_ratio_q = field<double>(j, "approx_ratio_q");
    if (!j.contains("levels") || !j["levels"].is_array() || j["levels"].empty()) {
        throw FormatError("record needs a nonempty 'levels' array");
    }
    for (const auto &level : j["levels"]) {
        r.levels.push_back({field<double>(level, "c"), field<std::uint64_t>(level, "w"),
                            field<double>(level, "p_rs"), field<double>(level, "p_avg")});
    }
    return r;
}

std::vector<MetricsRecord> read_metrics_jsonl(const std::filesystem::path &path) {
    return read_lines<MetricsRecord>(path, parse_metrics_line);
}

}  // namespace rpqaoa
