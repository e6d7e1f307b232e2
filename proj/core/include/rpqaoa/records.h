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

#ifndef RPQAOA_RECORDS_H
#define RPQAOA_RECORDS_H

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rpqaoa/metrics.h"
#include "rpqaoa/problems.h"

namespace rpqaoa {

/// Instance line: {"id","kind","n","couplings":[[i,j,s]],"linears":[[i,s]],"seed"}.
struct InstanceRecord {
    std::string id;
    QuboInstance instance;
    std::uint64_t seed = 0;

    friend bool operator==(const InstanceRecord &, const InstanceRecord &) = default;
};

std::string to_json_line(const InstanceRecord &rec);
InstanceRecord parse_instance_line(std::string_view line);
std::vector<InstanceRecord> read_instances_jsonl(const std::filesystem::path &path);

/// Metrics line with keys, in order: id, kind, n, p, method, seed, c_min,
/// c_max, S_c, S_q, delta_S, qmp_min, approx_ratio_rs, approx_ratio_q,
/// levels: [{c, w, p_rs, p_avg}]. Integral costs are written as integers.
std::string to_json_line(const MetricsRecord &rec);
MetricsRecord parse_metrics_line(std::string_view line);
std::vector<MetricsRecord> read_metrics_jsonl(const std::filesystem::path &path);

}  // namespace rpqaoa

#endif  // RPQAOA_RECORDS_H
