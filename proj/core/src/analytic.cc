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

#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "rpqaoa/errors.h"

namespace rpqaoa {

namespace {

long double log_choose(int a, int b) {
    return std::lgamma(static_cast<long double>(a) + 1) - std::lgamma(static_cast<long double>(b) + 1) -
           std::lgamma(static_cast<long double>(a - b) + 1);
}

void require_integer_costs(const CostTable &table) {
    if (!table.is_integer_valued()) {
        throw DomainError("the angle-averaged formulas require integer-valued costs");
    }
}

// signed[h * (n+1) + h'] = (-1)^{h+m} coeff[m] for h + h' even, else 0.
std::vector<double> signed_pair_table(const AngleAverageKernel &kernel) {
    const int n = kernel.num_variables();
    std::vector<double> table((n + 1) * (n + 1), 0.0);
    for (int h = 0; h <= n; ++h) {
        for (int h2 = 0; h2 <= n; ++h2) {
            if ((h + h2) % 2 != 0) {
                continue;
            }
            const int m = (h + h2) / 2;
            table[h * (n + 1) + h2] = ((h + m) % 2 == 0 ? 1.0 : -1.0) * kernel[m];
        }
    }
    return table;
}

// Adds the off-diagonal pair contributions of one level to offdiag[x].
void accumulate_direct(std::span<const std::uint64_t> members, const std::vector<double> &pair,
                       int n, std::vector<double> &offdiag) {
    const std::size_t size = offdiag.size();
    const int stride = n + 1;
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            const std::uint64_t y = members[a];
            const std::uint64_t y2 = members[b];
            if (std::popcount(y ^ y2) % 2 != 0) {
                continue;
            }
            // (y, y2) and (y2, y) carry the same sign since h + h' = 2m.
            for (std::size_t x = 0; x < size; ++x) {
                const int h = std::popcount(x ^ y);
                const int h2 = std::popcount(x ^ y2);
                if ((h + h2) % 2 != 0) {
                    throw std::logic_error("odd half-distance in the pair kernel");
                }
                offdiag[x] += 2.0 * pair[h * stride + h2];
            }
        }
    }
}

void accumulate_profile(std::span<const std::uint64_t> members, const std::vector<double> &pair,
                        const AngleAverageKernel &kernel, int n, std::vector<double> &offdiag) {
    const std::size_t size = offdiag.size();
    const int stride = n + 1;
    // count[h][x] = #{y in level : h(x, y) = h}, built one bit at a time.
    std::vector<std::vector<std::uint32_t>> count(n + 1, std::vector<std::uint32_t>(size, 0));
    for (std::uint64_t y : members) {
        count[0][y] = 1;
    }
    for (int bit = 0; bit < n; ++bit) {
        const std::size_t mask = std::size_t{1} << bit;
        for (int h = bit + 1; h >= 1; --h) {
            auto &cur = count[h];
            const auto &prev = count[h - 1];
            for (std::size_t x = 0; x < size; ++x) {
                if (x & mask) {
                    continue;
                }
                const std::size_t x1 = x | mask;
                const std::uint32_t p0 = prev[x];
                const std::uint32_t p1 = prev[x1];
                cur[x] += p1;
                cur[x1] += p0;
            }
        }
    }
    std::vector<double> g(n + 1);
    for (std::size_t x = 0; x < size; ++x) {
        for (int h = 0; h <= n; ++h) {
            g[h] = count[h][x];
        }
        double quad = 0;
        double diag = 0;
        for (int h = 0; h <= n; ++h) {
            if (g[h] == 0) {
                continue;
            }
            double row = 0;
            for (int h2 = h % 2; h2 <= n; h2 += 2) {
                row += pair[h * stride + h2] * g[h2];
            }
            quad += g[h] * row;
            diag += g[h] * kernel[h];
        }
        offdiag[x] += quad - diag;
    }
}

}  // namespace

AngleAverageKernel::AngleAverageKernel(int n) : n_(n) {
    if (n < 0) {
        throw InvalidInputError("kernel size must be non-negative");
    }
    const long double log2 = std::log(2.0L);
    const long double base = log_choose(2 * n, n) - 3.0L * n * log2;
    coeff_.reserve(n + 1);
    for (int m = 0; m <= n; ++m) {
        coeff_.push_back(static_cast<double>(std::exp(base + log_choose(n, m) - log_choose(2 * n, 2 * m))));
    }
}

AngleAverageKernel AngleAverageKernel::from_coefficients(int n, std::vector<double> coeff) {
    if (static_cast<int>(coeff.size()) != n + 1) {
        throw InvalidInputError("kernel needs n + 1 coefficients");
    }
    AngleAverageKernel k;
    k.n_ = n;
    k.coeff_ = std::move(coeff);
    return k;
}

double single_depth_prob(const CostTable &table, double beta, double gamma, std::uint64_t x) {
    require_integer_costs(table);
    const int n = table.num_variables();
    const std::size_t size = table.size();
    if (x >= size) {
        throw InvalidInputError("bitstring out of range");
    }
    std::vector<double> cos_pow(2 * n + 1, 1.0);
    std::vector<double> sin_pow(2 * n + 1, 1.0);
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    for (int k = 1; k <= 2 * n; ++k) {
        cos_pow[k] = cos_pow[k - 1] * c;
        sin_pow[k] = sin_pow[k - 1] * s;
    }
    std::vector<std::complex<double>> phase(size);
    for (std::size_t y = 0; y < size; ++y) {
        phase[y] = std::polar(1.0, -gamma * table[y]);
    }
    // i^k for k mod 4.
    static const std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

    std::complex<double> total = 0;
    for (std::size_t y = 0; y < size; ++y) {
        const int h = std::popcount(x ^ y);
        std::complex<double> row = 0;
        for (std::size_t y2 = 0; y2 < size; ++y2) {
            const int h2 = std::popcount(x ^ y2);
            // (-i)^h (+i)^{h'} = i^{h' - h}
            const std::complex<double> unit = kIPow[((h2 - h) % 4 + 4) % 4];
            row += cos_pow[2 * n - h - h2] * sin_pow[h + h2] * unit * std::conj(phase[y2]);
        }
        total += phase[y] * row;
    }
    total = std::ldexp(1.0, -n) * total;
    if (std::abs(total.imag()) > 1e-9) {
        throw std::logic_error("depth-1 probability has imaginary residue " + std::to_string(total.imag()));
    }
    return total.real();
}

std::vector<double> single_depth_probs(const CostTable &table, double beta, double gamma) {
    std::vector<double> out(table.size());
    for (std::size_t x = 0; x < table.size(); ++x) {
        out[x] = single_depth_prob(table, beta, gamma, x);
    }
    return out;
}

EnergyDistribution rp_avg_distribution(const CostTable &table, const LevelSpectrum &spectrum,
                                       AverageStrategy strategy) {
    return rp_avg_distribution(table, spectrum, AngleAverageKernel(table.num_variables()), strategy);
}

EnergyDistribution rp_avg_distribution(const CostTable &table, const LevelSpectrum &spectrum,
                                       const AngleAverageKernel &kernel, AverageStrategy strategy) {
    require_integer_costs(table);
    const int n = table.num_variables();
    if (n > kDefaultMaxVariables) {
        throw CapacityError("angle average for " + std::to_string(n) + " variables exceeds the limit");
    }
    if (spectrum.n != n || spectrum.level_of.size() != table.size() || kernel.num_variables() != n) {
        throw InvalidInputError("cost table, spectrum, and kernel disagree on n");
    }

    std::vector<std::vector<std::uint64_t>> members(spectrum.num_levels());
    for (std::size_t x = 0; x < table.size(); ++x) {
        members[spectrum.level_of[x]].push_back(x);
    }

    const std::vector<double> pair = signed_pair_table(kernel);
    std::vector<double> offdiag(table.size(), 0.0);
    const double profile_cost = static_cast<double>(n + 1) * (n + 1);
    for (const auto &level : members) {
        if (level.size() < 2) {
            continue;
        }
        const double w = static_cast<double>(level.size());
        bool use_direct = strategy == AverageStrategy::direct_pairs;
        if (strategy == AverageStrategy::automatic) {
            use_direct = w * (w - 1) / 2 <= profile_cost;
        }
        if (use_direct) {
            accumulate_direct(level, pair, n, offdiag);
        } else {
            accumulate_profile(level, pair, kernel, n, offdiag);
        }
    }

    EnergyDistribution d = uniform_distribution(spectrum);
    for (std::size_t x = 0; x < table.size(); ++x) {
        d.probs[spectrum.level_of[x]] += offdiag[x];
    }
    double total = 0;
    for (double &p : d.probs) {
        if (p < -1e-12) {
            throw std::logic_error("angle-averaged level probability " + std::to_string(p) + " is negative");
        }
        if (p < 0) {
            p = 0;
        }
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::logic_error("angle-averaged distribution sums to " + std::to_string(total));
    }
    return d;
}

double two_level_qmp(int n) {
    if (n < 1) {
        throw InvalidInputError("two-level formula requires n >= 1");
    }
    // C(2n, n) / 4^n as a product of (2k - 1) / 2k.
    double central = 1.0;
    for (int k = 1; k <= n; ++k) {
        central *= (2.0 * k - 1) / (2.0 * k);
    }
    return 1.0 - std::ldexp(1.0, 1 - n) + 2.0 * central;
}

double two_level_prob(int n) { return std::ldexp(two_level_qmp(n), -n); }

double two_level_qmp_asymptote(int n) {
    if (n < 1) {
        throw InvalidInputError("asymptote requires n >= 1");
    }
    return 1.0 + 2.0 / std::sqrt(std::numbers::pi * n);
}

}  // namespace rpqaoa
