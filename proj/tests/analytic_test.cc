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

#include "rpqaoa/analytic.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rpqaoa/enumerate.h"
#include "rpqaoa/errors.h"
#include "rpqaoa/metrics.h"
#include "test_util.h"

using namespace rpqaoa;

namespace {

// (1/pi) int_0^pi cos^{2a} sin^{2b} by composite Simpson; independent of the
// binomial closed form.
double wallis_integral(int a, int b) {
    const int steps = 20000;
    const double h = std::numbers::pi / steps;
    double sum = 0;
    for (int k = 0; k <= steps; ++k) {
        const double x = k * h;
        const double f = std::pow(std::cos(x), 2 * a) * std::pow(std::sin(x), 2 * b);
        sum += f * (k == 0 || k == steps ? 1 : (k % 2 ? 4 : 2));
    }
    return sum * h / 3 / std::numbers::pi;
}

EnergyDistribution avg(const CostTable &t, AverageStrategy s = AverageStrategy::automatic) {
    return rp_avg_distribution(t, level_decomposition(t), s);
}

}  // namespace

TEST(AngleAverageKernel, matches_wallis_integral) {
    for (int n = 1; n <= 12; ++n) {
        AngleAverageKernel k(n);
        for (int m = 0; m <= n; ++m) {
            const double oracle = std::ldexp(wallis_integral(n - m, m), -n);
            ASSERT_NEAR(k[m] / oracle, 1.0, 1e-12) << "n=" << n << " m=" << m;
            ASSERT_GT(k[m], 0.0);
        }
    }
}

TEST(AngleAverageKernel, stays_finite_for_large_n) {
    AngleAverageKernel k(60);
    for (double c : k.coefficients()) {
        EXPECT_TRUE(std::isfinite(c));
        EXPECT_GT(c, 0.0);
    }
}

TEST(SingleDepthProb, zero_beta_gives_uniform) {
    CostTable t = build_cost_table(random_qubo(4, true, 1));
    for (std::uint64_t x = 0; x < t.size(); ++x) {
        EXPECT_NEAR(single_depth_prob(t, 0.0, 2.2, x), 1.0 / 16, 1e-15);
    }
}

TEST(SingleDepthProb, matches_simulator) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int n = 2 + static_cast<int>(seed % 5);
        CostTable t = build_cost_table(test_util::mixed_instance(n, seed));
        AngleSet a = AngleSet::random(1, seed + 77);
        auto sim = bitstring_probs(run_qaoa(t, a));
        auto formula = single_depth_probs(t, a.beta[0], a.gamma[0]);
        double total = 0;
        for (std::uint64_t x = 0; x < t.size(); ++x) {
            ASSERT_NEAR(formula[x], sim[x], 1e-9);
            total += formula[x];
        }
        EXPECT_NEAR(total, 1.0, 1e-9);
    }
}

TEST(SingleDepthProb, finite_at_half_pi) {
    CostTable t = build_cost_table(random_qubo(4, false, 5));
    const double b = std::numbers::pi / 2;
    auto sim = bitstring_probs(run_qaoa(t, AngleSet{{b}, {0.9}}));
    for (std::uint64_t x = 0; x < t.size(); ++x) {
        EXPECT_NEAR(single_depth_prob(t, b, 0.9, x), sim[x], 1e-12);
    }
}

TEST(SingleDepthProb, rejects_non_integer_costs) {
    CostTable t(1, std::vector<double>{0.0, 0.5});
    EXPECT_THROW(single_depth_prob(t, 0.1, 0.1, 0), DomainError);
}

TEST(RpAvg, all_distinct_costs_give_uniform) {
    EnergyDistribution d = avg(test_util::identity_table(3));
    ASSERT_EQ(d.size(), 8u);
    for (double p : d.probs) {
        EXPECT_EQ(p, 0.125);
    }
}

TEST(RpAvg, two_level_n2) {
    EnergyDistribution d = avg(test_util::two_level_table(2));
    EXPECT_NEAR(d.probs[0], 0.3125, 1e-15);
    EXPECT_NEAR(d.probs[1], 0.6875, 1e-15);
}

TEST(RpAvg, strategies_agree) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 2 + static_cast<int>(seed % 8);
        CostTable t = build_cost_table(test_util::mixed_instance(n, seed));
        auto direct = avg(t, AverageStrategy::direct_pairs);
        auto profile = avg(t, AverageStrategy::distance_profile);
        auto automatic = avg(t, AverageStrategy::automatic);
        for (std::size_t k = 0; k < direct.size(); ++k) {
            ASSERT_NEAR(direct.probs[k], profile.probs[k], 1e-13);
            ASSERT_NEAR(direct.probs[k], automatic.probs[k], 1e-13);
        }
    }
}

TEST(RpAvg, matches_exact_quadrature_of_the_simulator) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const int n = 2 + static_cast<int>(seed % 4);
        CostTable t = build_cost_table(test_util::mixed_instance(n, seed));
        LevelSpectrum s = level_decomposition(t);
        auto quad = energy_distribution(test_util::quadrature_average(t), s);
        for (auto strategy : {AverageStrategy::direct_pairs, AverageStrategy::distance_profile}) {
            auto d = rp_avg_distribution(t, s, strategy);
            for (std::size_t k = 0; k < d.size(); ++k) {
                ASSERT_NEAR(d.probs[k], quad.probs[k], 1e-12) << "seed=" << seed;
            }
        }
    }
}

TEST(RpAvg, agrees_with_monte_carlo_within_five_standard_errors) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        CostTable t = build_cost_table(test_util::mixed_instance(4, seed));
        LevelSpectrum s = level_decomposition(t);
        auto exact = rp_avg_distribution(t, s);
        McAverage mc = mc_average_distribution(t, s, 1, 4000, seed);
        for (std::size_t k = 0; k < exact.size(); ++k) {
            EXPECT_LE(std::abs(exact.probs[k] - mc.dist.probs[k]), 5 * mc.std_error[k] + 1e-12);
        }
    }
}

TEST(RpAvg, valid_probability_vector) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CostTable t = build_cost_table(test_util::mixed_instance(7, seed));
        auto d = avg(t);
        EXPECT_NEAR(d.total(), 1.0, 1e-9);
        for (double p : d.probs) {
            EXPECT_GE(p, 0.0);
        }
    }
}

TEST(RpAvg, rejects_non_integer_costs_and_mismatched_inputs) {
    CostTable frac(2, std::vector<double>{0.0, 0.5, 0.5, 1.0});
    EXPECT_THROW(rp_avg_distribution(frac, level_decomposition(frac)), DomainError);
    CostTable a = test_util::identity_table(2);
    CostTable b = test_util::identity_table(3);
    EXPECT_THROW(rp_avg_distribution(a, level_decomposition(b)), InvalidInputError);
}

TEST(RpAvg, corrupted_kernel_keeps_normalization_but_moves_levels) {
    // The off-diagonal terms cancel in aggregate for any coefficients, so only
    // an independent oracle catches a bad kernel.
    CostTable t = build_cost_table(maxcut_from_graph(test_util::complete_graph(4)));
    LevelSpectrum s = level_decomposition(t);
    AngleAverageKernel good(4);
    std::vector<double> bad(good.coefficients().begin(), good.coefficients().end());
    bad[1] *= 1.5;
    auto corrupted = rp_avg_distribution(t, s, AngleAverageKernel::from_coefficients(4, bad));
    auto quad = energy_distribution(test_util::quadrature_average(t), s);
    EXPECT_NEAR(corrupted.total(), 1.0, 1e-9);
    double worst = 0;
    for (std::size_t k = 0; k < s.num_levels(); ++k) {
        worst = std::max(worst, std::abs(corrupted.probs[k] - quad.probs[k]));
    }
    EXPECT_GT(worst, 1e-3);
}

TEST(RpAvg, entropy_increases_for_every_connected_graph_four_to_six) {
    for (int n = 4; n <= 6; ++n) {
        for (const Graph &g : enumerate_connected_graphs(n)) {
            CostTable t = build_cost_table(maxcut_from_graph(g));
            LevelSpectrum s = level_decomposition(t);
            const double sq = shannon_entropy(rp_avg_distribution(t, s));
            const double sc = shannon_entropy(uniform_distribution(s));
            ASSERT_GT(sq, sc) << "n=" << n;
        }
    }
}

TEST(TwoLevel, closed_form_values) {
    EXPECT_NEAR(two_level_prob(2), 0.3125, 1e-16);
    EXPECT_NEAR(two_level_prob(3), 0.171875, 1e-16);
    EXPECT_NEAR(two_level_qmp(2), 1.25, 1e-15);
    EXPECT_THROW(two_level_prob(0), InvalidInputError);
}

TEST(TwoLevel, closed_form_matches_evaluator) {
    for (int n = 2; n <= 8; ++n) {
        for (std::uint64_t optimum : {std::uint64_t{0}, (std::uint64_t{1} << n) - 1, std::uint64_t{1}}) {
            EnergyDistribution d = avg(test_util::two_level_table(n, optimum, -5, 7));
            EXPECT_NEAR(d.probs[0], two_level_prob(n), 1e-12) << "n=" << n;
        }
    }
}

TEST(TwoLevel, asymptote) {
    EXPECT_NEAR(two_level_qmp_asymptote(100), 1.112838, 1e-6);
    EXPECT_LE(std::abs(two_level_qmp(100) - two_level_qmp_asymptote(100)), 0.02);
    EXPECT_NEAR(two_level_qmp_asymptote(100000000), 1.0, 2e-4);
}

TEST(TwoLevel, qmp_peaks_at_five_then_decreases) {
    // 1, 1.25, 1.375, 1.421875, 1.4296875, 1.41992..., ...
    EXPECT_DOUBLE_EQ(two_level_qmp(1), 1.0);
    for (int n = 1; n < 5; ++n) {
        ASSERT_LT(two_level_qmp(n), two_level_qmp(n + 1)) << n;
    }
    EXPECT_DOUBLE_EQ(two_level_qmp(5), 1.4296875);
    for (int n = 5; n < 400; ++n) {
        ASSERT_GT(two_level_qmp(n), two_level_qmp(n + 1)) << n;
    }
}
