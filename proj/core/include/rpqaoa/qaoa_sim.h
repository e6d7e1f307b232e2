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

#ifndef RPQAOA_QAOA_SIM_H
#define RPQAOA_QAOA_SIM_H

#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "rpqaoa/problems.h"

namespace rpqaoa {

inline constexpr double kBetaMax = std::numbers::pi;
inline constexpr double kGammaMax = 2 * std::numbers::pi;

/// Circuit angles, one (beta, gamma) pair per layer. beta in [0, pi],
/// gamma in [0, 2 pi]. An empty set is the depth-0 circuit.
struct AngleSet {
    std::vector<double> beta;
    std::vector<double> gamma;

    int depth() const { return static_cast<int>(beta.size()); }

    /// Throws InvalidInputError on length mismatch or out-of-domain angles.
    void validate() const;

    /// i.i.d. beta_j ~ U[0, pi), gamma_j ~ U[0, 2 pi), drawn in the order
    /// beta_0, gamma_0, beta_1, gamma_1, ... from Rng(seed).
    static AngleSet random(int depth, std::uint64_t seed);
};

class Statevector {
   public:
    using Amplitude = std::complex<double>;

    Statevector() = default;
    Statevector(int n, std::vector<Amplitude> amplitudes);

    /// |+>^n.
    static Statevector uniform(int n);
    static Statevector basis(int n, std::uint64_t x);

    int num_qubits() const { return n_; }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    std::span<Amplitude> amplitudes() { return amps_; }
    double norm_squared() const;

   private:
    int n_ = 0;
    std::vector<Amplitude> amps_;
};

/// Probability per cost level. `levels` holds the cost value of each entry in
/// ascending order.
struct EnergyDistribution {
    std::vector<double> levels;
    std::vector<double> probs;

    std::size_t size() const { return probs.size(); }
    double total() const;
};

/// Applies p layers of exp(-i beta_j H_M) exp(-i gamma_j H_P) to |+>^n, with
/// H_P = diag(costs) and H_M = sum_k X_k. The mixer factorizes exactly into
/// single-qubit rotations cos(beta) I - i sin(beta) X.
Statevector run_qaoa(const CostTable &table, const AngleSet &angles,
                     int max_variables = kDefaultMaxVariables);

std::vector<double> bitstring_probs(const Statevector &state);

/// Bins bitstring probabilities by cost level.
EnergyDistribution energy_distribution(std::span<const double> probs, const LevelSpectrum &spectrum);

/// Uniform bitstring sampling: w_k / 2^n per level (depth-0 circuit).
EnergyDistribution uniform_distribution(const LevelSpectrum &spectrum);

struct McAverage {
    EnergyDistribution dist;
    /// Standard error of the mean per level.
    std::vector<double> std_error;
    std::size_t samples = 0;
};

/// Averages exact per-angle energy distributions over `samples` random angle
/// sets. Sample k uses AngleSet::random(depth, derive_seed(seed, k)).
McAverage mc_average_distribution(const CostTable &table, const LevelSpectrum &spectrum, int depth,
                                  std::size_t samples = 200, std::uint64_t seed = 0);

/// |exact - estimate| / std_error. Differences up to 1e-12 score 0: a level
/// whose probability does not depend on the angles has a standard error made
/// of rounding noise only.
double mc_z_score(double exact, double estimate, double std_error);

}  // namespace rpqaoa

#endif  // RPQAOA_QAOA_SIM_H
