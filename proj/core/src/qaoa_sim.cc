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

#include "rpqaoa/qaoa_sim.h"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "rpqaoa/errors.h"
#include "rpqaoa/random.h"

namespace rpqaoa {

void AngleSet::validate() const {
    if (beta.size() != gamma.size()) {
        throw InvalidInputError("beta and gamma must have one entry per layer");
    }
    for (double b : beta) {
        if (!(b >= 0 && b <= kBetaMax)) {
            throw InvalidInputError("beta angle " + std::to_string(b) + " outside [0, pi]");
        }
    }
    for (double g : gamma) {
        if (!(g >= 0 && g <= kGammaMax)) {
            throw InvalidInputError("gamma angle " + std::to_string(g) + " outside [0, 2pi]");
        }
    }
}

AngleSet AngleSet::random(int depth, std::uint64_t seed) {
    Rng rng(seed);
    AngleSet a;
    a.beta.reserve(depth);
    a.gamma.reserve(depth);
    for (int j = 0; j < depth; ++j) {
        a.beta.push_back(rng.uniform(0, kBetaMax));
        a.gamma.push_back(rng.uniform(0, kGammaMax));
    }
    return a;
}

Statevector::Statevector(int n, std::vector<Amplitude> amplitudes) : n_(n), amps_(std::move(amplitudes)) {
    if (amps_.size() != (std::size_t{1} << n)) {
        throw InvalidInputError("statevector length must be 2^n");
    }
}

Statevector Statevector::uniform(int n) {
    const std::size_t size = std::size_t{1} << n;
    return Statevector(n, std::vector<Amplitude>(size, Amplitude(1.0 / std::sqrt(static_cast<double>(size)), 0)));
}

Statevector Statevector::basis(int n, std::uint64_t x) {
    std::vector<Amplitude> amps(std::size_t{1} << n);
    amps.at(x) = 1;
    return Statevector(n, std::move(amps));
}

double Statevector::norm_squared() const {
    double total = 0;
    for (const Amplitude &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

double EnergyDistribution::total() const { return std::accumulate(probs.begin(), probs.end(), 0.0); }

Statevector run_qaoa(const CostTable &table, const AngleSet &angles, int max_variables) {
    const int n = table.num_variables();
    if (n > max_variables) {
        throw CapacityError("simulation of " + std::to_string(n) + " qubits exceeds the limit of " +
                            std::to_string(max_variables));
    }
    angles.validate();
    Statevector state = Statevector::uniform(n);
    auto amps = state.amplitudes();
    const std::size_t size = amps.size();
    for (int layer = 0; layer < angles.depth(); ++layer) {
        const double gamma = angles.gamma[layer];
        for (std::size_t x = 0; x < size; ++x) {
            amps[x] *= std::polar(1.0, -gamma * table[x]);
        }
        const double c = std::cos(angles.beta[layer]);
        const Statevector::Amplitude mis(0, -std::sin(angles.beta[layer]));
        for (int q = 0; q < n; ++q) {
            const std::size_t stride = std::size_t{1} << q;
            for (std::size_t block = 0; block < size; block += 2 * stride) {
                for (std::size_t x = block; x < block + stride; ++x) {
                    const auto a = amps[x];
                    const auto b = amps[x + stride];
                    amps[x] = c * a + mis * b;
                    amps[x + stride] = mis * a + c * b;
                }
            }
        }
    }
    return state;
}

std::vector<double> bitstring_probs(const Statevector &state) {
    std::vector<double> probs;
    probs.reserve(state.amplitudes().size());
    for (const auto &a : state.amplitudes()) {
        probs.push_back(std::norm(a));
    }
    return probs;
}

EnergyDistribution energy_distribution(std::span<const double> probs, const LevelSpectrum &spectrum) {
    if (probs.size() != spectrum.level_of.size()) {
        throw InvalidInputError("probability vector length differs from 2^n");
    }
    EnergyDistribution d{spectrum.values, std::vector<double>(spectrum.num_levels(), 0.0)};
    for (std::size_t x = 0; x < probs.size(); ++x) {
        d.probs[spectrum.level_of[x]] += probs[x];
    }
    return d;
}

EnergyDistribution uniform_distribution(const LevelSpectrum &spectrum) {
    EnergyDistribution d{spectrum.values, {}};
    const double scale = std::ldexp(1.0, -spectrum.n);
    for (std::uint64_t w : spectrum.weights) {
        d.probs.push_back(static_cast<double>(w) * scale);
    }
    return d;
}

McAverage mc_average_distribution(const CostTable &table, const LevelSpectrum &spectrum, int depth,
                                  std::size_t samples, std::uint64_t seed) {
    if (samples < 2) {
        throw InvalidInputError("Monte Carlo averaging needs at least 2 samples");
    }
    if (depth < 0) {
        throw InvalidInputError("circuit depth must be non-negative");
    }
    const std::size_t levels = spectrum.num_levels();
    // Welford accumulators per level.
    std::vector<double> mean(levels, 0.0);
    std::vector<double> m2(levels, 0.0);
    for (std::size_t k = 0; k < samples; ++k) {
        const AngleSet angles = AngleSet::random(depth, derive_seed(seed, k));
        const auto probs = bitstring_probs(run_qaoa(table, angles));
        const EnergyDistribution d = energy_distribution(probs, spectrum);
        const double count = static_cast<double>(k + 1);
        for (std::size_t l = 0; l < levels; ++l) {
            const double delta = d.probs[l] - mean[l];
            mean[l] += delta / count;
            m2[l] += delta * (d.probs[l] - mean[l]);
        }
    }
    McAverage out;
    out.samples = samples;
    out.dist = EnergyDistribution{spectrum.values, mean};
    for (std::size_t l = 0; l < levels; ++l) {
        const double var = m2[l] / static_cast<double>(samples - 1);
        out.std_error.push_back(std::sqrt(std::max(var, 0.0) / static_cast<double>(samples)));
    }
    return out;
}

double mc_z_score(double exact, double estimate, double std_error) {
    const double diff = std::abs(exact - estimate);
    if (diff <= 1e-12) {
        return 0.0;
    }
    return std_error > 0 ? diff / std_error : std::numeric_limits<double>::infinity();
}

}  // namespace rpqaoa
