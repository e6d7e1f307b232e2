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

#ifndef RPQAOA_APP_CORPUS_H
#define RPQAOA_APP_CORPUS_H

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rpqaoa/problems.h"

namespace rpqaoa::app {

/// Random instance families.
enum class Family {
    maxcut,              // G(n, 1/2) conditioned on connectivity, unit weights
    maxcut_weights_1_2,  // same topology model, weights uniform on {1, 2}
    qubo_unweighted,
    qubo_weighted,
};

std::string_view to_string(Family f);
/// Accepts the names above; ConfigError otherwise.
Family parse_family(std::string_view name);

/// Builds one member of `family` from its instance seed.
QuboInstance make_instance(Family family, int n, std::uint64_t seed);

struct EnumerateSource {
    int n = 4;
};

struct Graph6Source {
    std::filesystem::path path;
};

struct EnsembleSource {
    Family family = Family::maxcut;
    std::vector<int> sizes;
    std::size_t count = 100;  // per size
};

struct InstancesSource {
    std::filesystem::path path;
};

using CorpusSource = std::variant<EnumerateSource, Graph6Source, EnsembleSource, InstancesSource>;

struct CorpusItem {
    std::string id;
    QuboInstance instance;
    /// Instance seed; also the parent of its angle-sample seeds.
    std::uint64_t seed = 0;
};

/// Largest graph size a sweep accepts without the explicit large-n flag.
inline constexpr int kDefaultSweepMaxN = 7;

/// Materializes a corpus. Item k gets seed derive_seed(master_seed, k), except
/// instance files, which carry their own seeds. Ensemble items are numbered
/// size by size, in the order sizes are listed. Graph items are unweighted
/// Max-Cut instances with the graph6 string as id.
///
/// Enumeration beyond kDefaultSweepMaxN is refused (ConfigError pointing at
/// graph6 input); graph6 and instance corpora with larger graphs need
/// allow_large.
std::vector<CorpusItem> load_corpus(const CorpusSource &source, std::uint64_t master_seed,
                                    bool allow_large = false);

}  // namespace rpqaoa::app

#endif  // RPQAOA_APP_CORPUS_H
