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

#ifndef RPQAOA_PROBLEMS_H
#define RPQAOA_PROBLEMS_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rpqaoa/graph.h"

namespace rpqaoa {

/// Largest variable count for which a full cost table / statevector is built.
inline constexpr int kDefaultMaxVariables = 24;

enum class ProblemKind { maxcut_unweighted, maxcut_weighted, qubo_unweighted, qubo_weighted, custom };

std::string_view to_string(ProblemKind kind);
/// Inverse of to_string; unknown names raise FormatError.
ProblemKind parse_problem_kind(std::string_view name);

struct Coupling {
    int i = 0;  // i < j
    int j = 0;
    std::int64_t s = 0;

    friend bool operator==(const Coupling &, const Coupling &) = default;
};

struct Linear {
    int i = 0;
    std::int64_t s = 0;

    friend bool operator==(const Linear &, const Linear &) = default;
};

/// Integer quadratic cost over spins z_i in {-1, +1}:
///
///   C(z) = sum_{i<j} s_ij z_i z_j + sum_i s_ii z_i
///
/// Bit i of a bitstring index is variable i, and x_i = 1 means z_i = +1.
/// Zero coefficients are dropped on construction; couplings are sorted by (i, j)
/// and linears by i. The kind tag is validated: maxcut_* forbids linear
/// terms and *_unweighted requires every nonzero coefficient to equal 1.
class QuboInstance {
   public:
    QuboInstance() = default;
    QuboInstance(int n, std::vector<Coupling> couplings, std::vector<Linear> linears,
                 ProblemKind kind = ProblemKind::custom);

    int num_variables() const { return n_; }
    ProblemKind kind() const { return kind_; }
    std::span<const Coupling> couplings() const { return couplings_; }
    std::span<const Linear> linears() const { return linears_; }

    /// Same instance with variable v renamed to perm[v].
    QuboInstance permuted(std::span<const int> perm) const;

    friend bool operator==(const QuboInstance &, const QuboInstance &) = default;

   private:
    int n_ = 0;
    std::vector<Coupling> couplings_;
    std::vector<Linear> linears_;
    ProblemKind kind_ = ProblemKind::custom;
};

/// Cost of every bitstring, indexed by the bitstring value. Costs are stored
/// as doubles so hand-built tables may be non-integer; generated instances are
/// always integer valued.
class CostTable {
   public:
    CostTable() = default;
    /// values.size() must be 2^n.
    CostTable(int n, std::vector<double> values);

    int num_variables() const { return n_; }
    std::size_t size() const { return costs_.size(); }
    std::span<const double> costs() const { return costs_; }
    double operator[](std::uint64_t x) const { return costs_[x]; }

    bool is_integer_valued() const;

    friend bool operator==(const CostTable &, const CostTable &) = default;

   private:
    int n_ = 0;
    std::vector<double> costs_;
};

/// Unique cost values in ascending order with their multiplicities.
struct LevelSpectrum {
    int n = 0;
    std::vector<double> values;
    std::vector<std::uint64_t> weights;
    /// Level index of every bitstring.
    std::vector<std::uint32_t> level_of;

    std::size_t num_levels() const { return values.size(); }
    double c_min() const { return values.front(); }
    double c_max() const { return values.back(); }
};

/// Cost of bitstring x. x must fit in the instance's n bits.
std::int64_t cost_eval(const QuboInstance &inst, std::uint64_t x);

/// Cost of a bitstring written most-significant variable first, e.g. "001"
/// sets variable 0. Length must equal n.
std::int64_t cost_eval(const QuboInstance &inst, std::string_view bits);

/// Tabulates cost_eval over all 2^n bitstrings (Gray-code walk).
CostTable build_cost_table(const QuboInstance &inst, int max_variables = kDefaultMaxVariables);

LevelSpectrum level_decomposition(const CostTable &table);

/// Couplings equal to edge weights, no linear terms.
QuboInstance maxcut_from_graph(const Graph &g);

/// Random QUBO: density d ~ U[0.1, 0.9], then each pair (i<j) in lexicographic
/// order followed by each diagonal term is nonzero with probability d. Nonzero
/// values are 1 (unweighted) or uniform over {-3,-2,-1,1,2,3} (weighted).
QuboInstance random_qubo(int n, bool weighted, std::uint64_t seed);

}  // namespace rpqaoa

#endif  // RPQAOA_PROBLEMS_H
