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

#ifndef RPQAOA_APP_VERIFY_H
#define RPQAOA_APP_VERIFY_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rpqaoa::app {

struct VerifyOptions {
    std::uint64_t seed = 20240601;
    std::size_t mc_samples = 10000;
    /// Negative control: scales the m = 1 kernel coefficient by 1.5 wherever
    /// the checks use the closed-form average.
    bool corrupt_kernel = false;
};

struct CheckResult {
    std::string name;
    double tolerance = 0;
    double observed = 0;
    bool passed = false;
};

/// Runs every cross-oracle and invariant check at fixed seeds:
/// kernel vs Wallis integral, depth-1 pair formula vs simulator, closed-form
/// average vs exact quadrature and vs Monte Carlo, averaging-strategy
/// agreement, two-level closed form and asymptote, all-distinct baseline,
/// normalization, spin-flip symmetry, relabeling invariance, and sweep
/// determinism across worker counts.
std::vector<CheckResult> run_verify(const VerifyOptions &options = {});

/// One line per check: PASS/FAIL, name, observed value, tolerance.
void print_verify_report(std::ostream &out, const std::vector<CheckResult> &results);

}  // namespace rpqaoa::app

#endif  // RPQAOA_APP_VERIFY_H
