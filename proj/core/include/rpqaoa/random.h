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

#ifndef RPQAOA_RANDOM_H
#define RPQAOA_RANDOM_H

#include <cstdint>
#include <random>

namespace rpqaoa {

/// SplitMix64 output function. Bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t x);

/// Seed for the `index`-th child of a task seeded with `parent`.
///
/// derive_seed(parent, index) = mix64(mix64(parent) + 0x9E3779B97F4A7C15 * (index + 1))
///
/// Sweeps use it twice: instance seed = derive_seed(master, instance index),
/// angle-sample seed = derive_seed(instance seed, sample index).
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index);

/// std::mt19937_64 with platform-independent conversions. The standard
/// distributions are implementation-defined, so they are not used anywhere a
/// reproducible stream matters.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer on [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    bool bernoulli(double p) { return uniform01() < p; }

    bool coin() { return (engine_() >> 63) != 0; }

   private:
    std::mt19937_64 engine_;
};

}  // namespace rpqaoa

#endif  // RPQAOA_RANDOM_H
