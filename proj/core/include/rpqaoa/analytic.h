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

#ifndef RPQAOA_ANALYTIC_H
#define RPQAOA_ANALYTIC_H

#include <cstdint>
#include <span>
#include <vector>

#include "rpqaoa/problems.h"
#include "rpqaoa/qaoa_sim.h"

namespace rpqaoa {

/// Angle-average weights of the depth-1 circuit, indexed by the half
/// distance m = (h(x,y) + h(x,y')) / 2 in 0..n:
///
///   coeff[m] = C(2n, n) C(n, m) / (2^{3n} C(2n, 2m))
///            = 2^{-n} (1/pi) int_0^pi cos^{2(n-m)}(b) sin^{2m}(b) db
///
/// with C(a, b) = "a choose b". Evaluated through log-gamma so it stays finite
/// far past the point where the binomials overflow.
class AngleAverageKernel {
   public:
    explicit AngleAverageKernel(int n);

    /// Kernel with caller-supplied coefficients. Used to inject corrupted
    /// tables into the verification harness.
    static AngleAverageKernel from_coefficients(int n, std::vector<double> coeff);

    int num_variables() const { return n_; }
    double operator[](int m) const { return coeff_[m]; }
    std::span<const double> coefficients() const { return coeff_; }

   private:
    AngleAverageKernel() = default;
    int n_ = 0;
    std::vector<double> coeff_;
};

/// Depth-1 probability of measuring x at angles (beta, gamma):
///
///   2^{-n} sum_{y,y'} cos^{2n-h-h'} sin^{h+h'} (-i)^h (+i)^{h'} e^{-i gamma (F(y) - F(y'))}
///
/// with h = h(x,y), h' = h(x,y'). This is the tangent form with cos^{2n} folded
/// into the powers, so beta = pi/2 is an ordinary point. O(4^n) per call.
/// Non-integer costs raise DomainError.
double single_depth_prob(const CostTable &table, double beta, double gamma, std::uint64_t x);

/// single_depth_prob for every x.
std::vector<double> single_depth_probs(const CostTable &table, double beta, double gamma);

enum class AverageStrategy {
    /// Literal sum over ordered same-level pairs y != y' with even distance,
    /// 2^n * sum_k w_k^2 work.
    direct_pairs,
    /// Per level, counts #{y in level : h(x,y) = h} for every x by a bitwise
    /// dynamic program, then evaluates the pair sum as a quadratic form in
    /// those counts. n (n+1) 2^n work per level.
    distance_profile,
    /// Cheaper of the two, chosen per level.
    automatic,
};

/// Uniform average over beta in [0, pi], gamma in [0, 2 pi] of the depth-1
/// energy distribution:
///
///   P(f) = w_f / 2^n + sum_{x: F(x)=f} sum_{y != y', F(y)=F(y'), h(y,y') even}
///                           (-1)^{h(x,y) + m} coeff[m],  m = (h(x,y) + h(x,y')) / 2
///
/// Requires integer costs (DomainError otherwise). Entries in [-1e-12, 0) are
/// clamped to 0; anything more negative, or a total off by more than 1e-9,
/// raises std::logic_error.
EnergyDistribution rp_avg_distribution(const CostTable &table, const LevelSpectrum &spectrum,
                                       AverageStrategy strategy = AverageStrategy::automatic);

EnergyDistribution rp_avg_distribution(const CostTable &table, const LevelSpectrum &spectrum,
                                       const AngleAverageKernel &kernel,
                                       AverageStrategy strategy = AverageStrategy::automatic);

/// Averaged probability of the unique optimum when one bitstring has cost f1
/// and all others share cost f2:  2^{-n} - 2^{1-2n} + C(2n, n) 2^{1-3n}.
double two_level_prob(int n);

/// two_level_prob(n) * 2^n, evaluated without forming 2^n.
double two_level_qmp(int n);

/// Large-n limit of two_level_qmp: 1 + 2 / sqrt(pi n).
double two_level_qmp_asymptote(int n);

}  // namespace rpqaoa

#endif  // RPQAOA_ANALYTIC_H
