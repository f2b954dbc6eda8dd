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

/**
 * @file
 * Partition function of the average memory. Averaging the pattern weights
 * uniformly over the probability simplex leaves a flat prior over the
 * distances j = d..n, so
 *
 *     Z_av / p = 1/(n-d+1) sum_{j=d}^{n} cos^(2b)(pi j / 2n)
 *
 * and for large n the mean becomes (1/(1-x0)) int_{x0}^1 cos^(2b)(pi x/2) dx
 * with x0 = d/n. Everything is computed in log space relative to the
 * largest term, so b = 10^6 at n = 8e6 does not underflow.
 */

namespace qam::thermo {

enum class AverageMode {
    kSum,
    kIntegral,
};

/// kIntegral for n >= 10^4, kSum below.
[[nodiscard]] AverageMode default_mode(std::uint64_t n) noexcept;

/// ln(Z_av/p); -infinity when d == n and b > 0. Requires d <= n, b >= 0.
[[nodiscard]] double log_partition_average(std::uint64_t n, std::uint64_t d,
                                           double b, AverageMode mode);

/// Z_av/p; exactly 1 at b = 0.
[[nodiscard]] double partition_average(std::uint64_t n, std::uint64_t d,
                                       double b, AverageMode mode);

/// F = -ln(Z_av/p) / b; +infinity when Z_av = 0. Requires b > 0.
[[nodiscard]] double free_energy(std::uint64_t n, std::uint64_t d, double b,
                                 AverageMode mode);

struct BoltzmannMoments {
    double log_z = 0.0;
    /// Boltzmann average of E(j) = -2 ln cos(pi j / 2n) under the flat prior.
    double mean_energy = 0.0;
};

[[nodiscard]] BoltzmannMoments boltzmann_moments(std::uint64_t n,
                                                 std::uint64_t d, double b,
                                                 AverageMode mode);

} // namespace qam::thermo
