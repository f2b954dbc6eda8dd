// Copyright 2026 The QAM Authors.

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <string>

#include "qam/thermo/partition.hpp"

namespace qam::thermo {

struct TuneResult {
    std::uint64_t b = 1;
    /// ceil(1 / cos^(2b)(pi D / 2)): repetitions for measured recall.
    std::uint64_t T_measured = 1;
    /// ceil(1 / cos^b(pi D / 2)): iterations for amplified recall.
    std::uint64_t T_amplified = 1;
    double achieved_D = 0.0;
    /// cos^(2b)(pi D / 2) = Z_av / p.
    double p_rec_av = 0.0;
};

/// Largest b the search will try before declaring the target infeasible.
inline constexpr std::uint64_t kMaxTuneB = std::uint64_t{1} << 40;

/// Thresholds for a given b at input error epsilon (d = round(epsilon n)).
[[nodiscard]] TuneResult thresholds_at(std::uint64_t n, double epsilon,
                                       std::uint64_t b, AverageMode mode);

/**
 * Smallest integer b with D(b, epsilon n) - epsilon <= 1 - nu, found by
 * doubling then bisection (D is non-increasing in b). Throws
 * InfeasibleError when nu >= 1 (D > epsilon for every finite b) or the
 * target is not met by kMaxTuneB.
 */
[[nodiscard]] TuneResult tune(std::uint64_t n, double epsilon, double nu,
                              AverageMode mode);

[[nodiscard]] std::string to_json(const TuneResult &result);

} // namespace qam::thermo
