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

#include "rpqaoa/problems.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

#include "rpqaoa/errors.h"
#include "rpqaoa/random.h"

namespace rpqaoa {

std::string_view to_string(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::maxcut_unweighted:
            return "maxcut_unweighted";
        case ProblemKind::maxcut_weighted:
            return "maxcut_weighted";
        case ProblemKind::qubo_unweighted:
            return "qubo_unweighted";
        case ProblemKind::qubo_weighted:
            return "qubo_weighted";
        case ProblemKind::custom:
            return "custom";
    }
    return "custom";
}

ProblemKind parse_problem_kind(std::string_view name) {
    for (ProblemKind k : {ProblemKind::maxcut_unweighted, ProblemKind::maxcut_weighted,
                          ProblemKind::qubo_unweighted, ProblemKind::qubo_weighted,
                          ProblemKind::custom}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    throw FormatError("unknown problem kind '" + std::string(name) + "'");
}

QuboInstance::QuboInstance(int n, std::vector<Coupling> couplings, std::vector<Linear> linears,
                           ProblemKind kind)
    : n_(n), kind_(kind) {
    if (n < 0 || n > 63) {
        throw InvalidInputError("variable count must be in [0, 63], got " + std::to_string(n));
    }
    for (Coupling c : couplings) {
        if (c.i > c.j) {
            std::swap(c.i, c.j);
        }
        if (c.i == c.j) {
            throw InvalidInputError("coupling on the diagonal; use a linear term");
        }
        if (c.i < 0 || c.j >= n) {
            throw InvalidInputError("coupling index out of range");
        }
        if (c.s != 0) {
            couplings_.push_back(c);
        }
    }
    for (const Linear &l : linears) {
        if (l.i < 0 || l.i >= n) {
            throw InvalidInputError("linear index out of range");
        }
        if (l.s != 0) {
            linears_.push_back(l);
        }
    }
    std::sort(couplings_.begin(), couplings_.end(),
              [](const Coupling &a, const Coupling &b) { return std::pair(a.i, a.j) < std::pair(b.i, b.j); });
    std::sort(linears_.begin(), linears_.end(),
              [](const Linear &a, const Linear &b) { return a.i < b.i; });
    for (std::size_t k = 1; k < couplings_.size(); ++k) {
        if (couplings_[k].i == couplings_[k - 1].i && couplings_[k].j == couplings_[k - 1].j) {
            throw InvalidInputError("duplicate coupling");
        }
    }
    for (std::size_t k = 1; k < linears_.size(); ++k) {
        if (linears_[k].i == linears_[k - 1].i) {
            throw InvalidInputError("duplicate linear term");
        }
    }

    const bool maxcut = kind == ProblemKind::maxcut_unweighted || kind == ProblemKind::maxcut_weighted;
    const bool unweighted =
        kind == ProblemKind::maxcut_unweighted || kind == ProblemKind::qubo_unweighted;
    if (maxcut && !linears_.empty()) {
        throw InvalidInputError("Max-Cut instances carry no linear terms");
    }
    if (unweighted) {
        bool ok = std::all_of(couplings_.begin(), couplings_.end(), [](const Coupling &c) { return c.s == 1; }) &&
                  std::all_of(linears_.begin(), linears_.end(), [](const Linear &l) { return l.s == 1; });
        if (!ok) {
            throw InvalidInputError("unweighted instance with a coefficient other than 1");
        }
    }
}

QuboInstance QuboInstance::permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) {
        throw InvalidInputError("permutation length differs from variable count");
    }
    std::vector<Coupling> c;
    for (const Coupling &x : couplings_) {
        c.push_back({perm[x.i], perm[x.j], x.s});
    }
    std::vector<Linear> l;
    for (const Linear &x : linears_) {
        l.push_back({perm[x.i], x.s});
    }
    return QuboInstance(n_, std::move(c), std::move(l), kind_);
}

CostTable::CostTable(int n, std::vector<double> values) : n_(n), costs_(std::move(values)) {
    if (n < 0 || n > 40) {
        throw CapacityError("cost table with " + std::to_string(n) + " variables");
    }
    if (costs_.size() != (std::size_t{1} << n)) {
        throw InvalidInputError("cost table length must be 2^n");
    }
}

bool CostTable::is_integer_valued() const {
    return std::all_of(costs_.begin(), costs_.end(), [](double c) {
        return std::isfinite(c) && c == std::nearbyint(c) && std::abs(c) < 0x1.0p52;
    });
}

std::int64_t cost_eval(const QuboInstance &inst, std::uint64_t x) {
    const int n = inst.num_variables();
    if (n < 64 && (x >> n) != 0) {
        throw InvalidInputError("bitstring has more than " + std::to_string(n) + " bits");
    }
    auto z = [x](int i) -> std::int64_t { return ((x >> i) & 1) ? 1 : -1; };
    std::int64_t total = 0;
    for (const Coupling &c : inst.couplings()) {
        total += c.s * z(c.i) * z(c.j);
    }
    for (const Linear &l : inst.linears()) {
        total += l.s * z(l.i);
    }
    return total;
}

std::int64_t cost_eval(const QuboInstance &inst, std::string_view bits) {
    const int n = inst.num_variables();
    if (static_cast<int>(bits.size()) != n) {
        throw InvalidInputError("bitstring length " + std::to_string(bits.size()) +
                                " differs from variable count " + std::to_string(n));
    }
    std::uint64_t x = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw InvalidInputError("bitstring characters must be 0 or 1");
        }
        x = (x << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return cost_eval(inst, x);
}

CostTable build_cost_table(const QuboInstance &inst, int max_variables) {
    const int n = inst.num_variables();
    if (n > max_variables) {
        throw CapacityError("cost table for " + std::to_string(n) + " variables exceeds the limit of " +
                            std::to_string(max_variables));
    }
    std::vector<std::vector<std::pair<int, std::int64_t>>> nbrs(n);
    std::vector<std::int64_t> field(n, 0);
    for (const Coupling &c : inst.couplings()) {
        nbrs[c.i].emplace_back(c.j, c.s);
        nbrs[c.j].emplace_back(c.i, c.s);
    }
    for (const Linear &l : inst.linears()) {
        field[l.i] = l.s;
    }

    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<double> costs(size);
    std::vector<std::int64_t> z(n, -1);
    std::int64_t cost = cost_eval(inst, std::uint64_t{0});
    costs[0] = static_cast<double>(cost);
    // Gray-code walk: step k flips variable ctz(k).
    for (std::uint64_t k = 1; k < size; ++k) {
        const int i = std::countr_zero(k);
        std::int64_t local = field[i];
        for (auto [j, s] : nbrs[i]) {
            local += s * z[j];
        }
        cost -= 2 * z[i] * local;
        z[i] = -z[i];
        costs[k ^ (k >> 1)] = static_cast<double>(cost);
    }
    return CostTable(n, std::move(costs));
}

LevelSpectrum level_decomposition(const CostTable &table) {
    LevelSpectrum spec;
    spec.n = table.num_variables();
    std::vector<double> sorted(table.costs().begin(), table.costs().end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size();) {
        std::size_t end = k;
        while (end < sorted.size() && sorted[end] == sorted[k]) {
            ++end;
        }
        spec.values.push_back(sorted[k]);
        spec.weights.push_back(end - k);
        k = end;
    }
    spec.level_of.resize(table.size());
    for (std::size_t x = 0; x < table.size(); ++x) {
        auto it = std::lower_bound(spec.values.begin(), spec.values.end(), table[x]);
        spec.level_of[x] = static_cast<std::uint32_t>(it - spec.values.begin());
    }
    return spec;
}

QuboInstance maxcut_from_graph(const Graph &g) {
    std::vector<Coupling> couplings;
    for (const Edge &e : g.edges()) {
        couplings.push_back({e.u, e.v, e.weight});
    }
    const ProblemKind kind = g.is_weighted() ? ProblemKind::maxcut_weighted : ProblemKind::maxcut_unweighted;
    return QuboInstance(g.num_vertices(), std::move(couplings), {}, kind);
}

QuboInstance random_qubo(int n, bool weighted, std::uint64_t seed) {
    if (n < 2) {
        throw InvalidInputError("random_qubo requires n >= 2");
    }
    static constexpr std::array<std::int64_t, 6> kWeights{-3, -2, -1, 1, 2, 3};
    Rng rng(seed);
    const double density = rng.uniform(0.1, 0.9);
    auto draw = [&]() -> std::int64_t {
        if (!rng.bernoulli(density)) {
            return 0;
        }
        return weighted ? kWeights[rng.below(kWeights.size())] : 1;
    };
    std::vector<Coupling> couplings;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            couplings.push_back({i, j, draw()});
        }
    }
    std::vector<Linear> linears;
    for (int i = 0; i < n; ++i) {
        linears.push_back({i, draw()});
    }
    return QuboInstance(n, std::move(couplings), std::move(linears),
                        weighted ? ProblemKind::qubo_weighted : ProblemKind::qubo_unweighted);
}

}  // namespace rpqaoa
