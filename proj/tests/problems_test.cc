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

#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "rpqaoa/errors.h"
#include "rpqaoa/random.h"
#include "test_util.h"

using namespace rpqaoa;

namespace {

QuboInstance triangle() { return maxcut_from_graph(test_util::complete_graph(3)); }

}  // namespace

TEST(CostEval, triangle) {
    EXPECT_EQ(cost_eval(triangle(), std::uint64_t{0b000}), 3);
    EXPECT_EQ(cost_eval(triangle(), std::uint64_t{0b001}), -1);
    EXPECT_EQ(cost_eval(triangle(), "000"), 3);
    EXPECT_EQ(cost_eval(triangle(), "001"), -1);
}

TEST(CostEval, linear_term_uses_plus_one_for_set_bit) {
    QuboInstance inst(1, {}, {{0, 2}});
    EXPECT_EQ(cost_eval(inst, std::uint64_t{1}), 2);
    EXPECT_EQ(cost_eval(inst, std::uint64_t{0}), -2);
}

TEST(CostEval, string_bits_are_most_significant_first) {
    QuboInstance inst(3, {}, {{0, 1}});
    EXPECT_EQ(cost_eval(inst, "001"), 1);
    EXPECT_EQ(cost_eval(inst, "100"), -1);
}

TEST(CostEval, bit_length_mismatch) {
    EXPECT_THROW(cost_eval(triangle(), "0010"), InvalidInputError);
    EXPECT_THROW(cost_eval(triangle(), "01"), InvalidInputError);
    EXPECT_THROW(cost_eval(triangle(), std::uint64_t{8}), InvalidInputError);
    EXPECT_THROW(cost_eval(triangle(), "0a1"), InvalidInputError);
}

TEST(CostTable, triangle) {
    CostTable t = build_cost_table(triangle());
    std::vector<double> expected{3, -1, -1, -1, -1, -1, -1, 3};
    EXPECT_EQ(std::vector<double>(t.costs().begin(), t.costs().end()), expected);
}

TEST(CostTable, single_linear_and_empty_graph) {
    CostTable lin = build_cost_table(QuboInstance(1, {}, {{0, 1}}));
    EXPECT_EQ(std::vector<double>(lin.costs().begin(), lin.costs().end()), (std::vector<double>{-1, 1}));
    CostTable empty = build_cost_table(maxcut_from_graph(Graph(2)));
    EXPECT_EQ(std::vector<double>(empty.costs().begin(), empty.costs().end()), (std::vector<double>{0, 0, 0, 0}));
}

TEST(CostTable, gray_code_walk_matches_direct_evaluation) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 2 + static_cast<int>(seed % 9);
        QuboInstance inst = test_util::mixed_instance(n, seed);
        CostTable t = build_cost_table(inst);
        for (std::uint64_t x = 0; x < t.size(); ++x) {
            ASSERT_EQ(t[x], static_cast<double>(cost_eval(inst, x)));
        }
    }
}

TEST(CostTable, capacity_and_length_errors) {
    QuboInstance big = random_qubo(12, false, 1);
    EXPECT_THROW(build_cost_table(big, 10), CapacityError);
    EXPECT_THROW(CostTable(2, std::vector<double>{1, 2, 3}), InvalidInputError);
}

TEST(CostTable, integer_detection) {
    EXPECT_TRUE(build_cost_table(triangle()).is_integer_valued());
    EXPECT_FALSE(CostTable(1, std::vector<double>{0.0, 0.5}).is_integer_valued());
}

TEST(LevelDecomposition, triangle) {
    LevelSpectrum s = level_decomposition(build_cost_table(triangle()));
    EXPECT_EQ(s.values, (std::vector<double>{-1, 3}));
    EXPECT_EQ(s.weights, (std::vector<std::uint64_t>{6, 2}));
    EXPECT_EQ(s.c_min(), -1);
    EXPECT_EQ(s.c_max(), 3);
    EXPECT_EQ(s.level_of[0], 1u);
    EXPECT_EQ(s.level_of[1], 0u);
}

TEST(LevelDecomposition, path_p3) {
    LevelSpectrum s = level_decomposition(build_cost_table(maxcut_from_graph(test_util::path_graph(3))));
    EXPECT_EQ(s.values, (std::vector<double>{-2, 0, 2}));
    EXPECT_EQ(s.weights, (std::vector<std::uint64_t>{2, 4, 2}));
}

TEST(LevelDecomposition, all_distinct) {
    LevelSpectrum s = level_decomposition(test_util::identity_table(2));
    EXPECT_EQ(s.num_levels(), 4u);
    EXPECT_EQ(s.weights, (std::vector<std::uint64_t>{1, 1, 1, 1}));
}

TEST(LevelDecomposition, weights_sum_to_two_to_the_n) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int n = 2 + static_cast<int>(seed % 10);
        LevelSpectrum s = level_decomposition(build_cost_table(test_util::mixed_instance(n, seed)));
        EXPECT_EQ(std::accumulate(s.weights.begin(), s.weights.end(), std::uint64_t{0}), std::uint64_t{1} << n);
        EXPECT_TRUE(std::is_sorted(s.values.begin(), s.values.end()));
        EXPECT_EQ(std::adjacent_find(s.values.begin(), s.values.end()), s.values.end());
    }
}

TEST(LevelDecomposition, invariant_under_variable_relabeling) {
    Rng rng(99);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 3 + static_cast<int>(seed % 6);
        QuboInstance inst = test_util::mixed_instance(n, seed);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i) {
            std::swap(perm[i], perm[rng.below(i + 1)]);
        }
        LevelSpectrum a = level_decomposition(build_cost_table(inst));
        LevelSpectrum b = level_decomposition(build_cost_table(inst.permuted(perm)));
        EXPECT_EQ(a.values, b.values);
        EXPECT_EQ(a.weights, b.weights);
    }
}

TEST(MaxCut, spin_flip_symmetry_of_cost_table) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int n = 2 + static_cast<int>(seed % 8);
        CostTable t = build_cost_table(maxcut_from_graph(random_connected_graph(n, seed)));
        const std::uint64_t all = (std::uint64_t{1} << n) - 1;
        for (std::uint64_t x = 0; x < t.size(); ++x) {
            ASSERT_EQ(t[x], t[x ^ all]);
        }
    }
}

TEST(MaxCut, from_graph) {
    QuboInstance t = triangle();
    EXPECT_EQ(t.kind(), ProblemKind::maxcut_unweighted);
    EXPECT_EQ(t.couplings().size(), 3u);
    EXPECT_TRUE(t.linears().empty());
    for (const Coupling &c : t.couplings()) {
        EXPECT_EQ(c.s, 1);
    }

    Graph w(2);
    w.add_edge(0, 1, 2);
    QuboInstance wi = maxcut_from_graph(w);
    EXPECT_EQ(wi.kind(), ProblemKind::maxcut_weighted);
    ASSERT_EQ(wi.couplings().size(), 1u);
    EXPECT_EQ(wi.couplings()[0], (Coupling{0, 1, 2}));

    EXPECT_TRUE(maxcut_from_graph(Graph(3)).couplings().empty());
}

TEST(QuboInstance, kind_invariants) {
    EXPECT_THROW(QuboInstance(2, {{0, 1, 1}}, {{0, 1}}, ProblemKind::maxcut_unweighted), InvalidInputError);
    EXPECT_THROW(QuboInstance(2, {{0, 1, 2}}, {}, ProblemKind::qubo_unweighted), InvalidInputError);
    EXPECT_THROW(QuboInstance(2, {{0, 0, 1}}, {}), InvalidInputError);
    EXPECT_THROW(QuboInstance(2, {{0, 2, 1}}, {}), InvalidInputError);
    EXPECT_THROW(QuboInstance(2, {{0, 1, 1}, {1, 0, 1}}, {}), InvalidInputError);
    EXPECT_NO_THROW(QuboInstance(2, {{0, 1, 2}}, {}, ProblemKind::maxcut_weighted));
}

TEST(RandomQubo, unweighted_coefficients_are_one) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        QuboInstance q = random_qubo(8, false, seed);
        EXPECT_EQ(q.kind(), ProblemKind::qubo_unweighted);
        for (const Coupling &c : q.couplings()) {
            ASSERT_EQ(c.s, 1);
        }
        for (const Linear &l : q.linears()) {
            ASSERT_EQ(l.s, 1);
        }
    }
}

TEST(RandomQubo, weighted_coefficients_exclude_zero) {
    std::set<std::int64_t> seen;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        QuboInstance q = random_qubo(8, true, seed);
        EXPECT_EQ(q.kind(), ProblemKind::qubo_weighted);
        for (const Coupling &c : q.couplings()) {
            ASSERT_TRUE(c.s >= -3 && c.s <= 3 && c.s != 0);
            seen.insert(c.s);
        }
        for (const Linear &l : q.linears()) {
            ASSERT_TRUE(l.s >= -3 && l.s <= 3 && l.s != 0);
        }
    }
    EXPECT_EQ(seen.size(), 6u);
}

TEST(RandomQubo, deterministic_per_seed) {
    EXPECT_EQ(random_qubo(9, true, 42), random_qubo(9, true, 42));
    EXPECT_NE(random_qubo(9, true, 42), random_qubo(9, true, 43));
    EXPECT_THROW(random_qubo(1, false, 0), InvalidInputError);
}

TEST(RandomQubo, realized_density_spans_the_sampled_range) {
    // Density is drawn per instance from [0.1, 0.9]; fill fractions over many
    // instances should reach toward both ends.
    double lo = 1;
    double hi = 0;
    const int n = 20;
    const double slots = n * (n - 1) / 2.0 + n;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        QuboInstance q = random_qubo(n, false, seed);
        const double fill = (q.couplings().size() + q.linears().size()) / slots;
        lo = std::min(lo, fill);
        hi = std::max(hi, fill);
    }
    EXPECT_LT(lo, 0.2);
    EXPECT_GT(hi, 0.8);
}
