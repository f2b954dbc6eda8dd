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

#include "qam/thermo/partition.hpp"

namespace qam::thermo {

/// Thermodynamic state of the average memory at inverse temperature b.
struct ThermoPoint {
    double b = 0.0;
    double z_ratio = 0.0; ///< Z_av / p
    double F = 0.0;       ///< -ln(z_ratio) / b
    double U = 0.0;       ///< Boltzmann average of -2 ln cos(pi j / 2n)
    double S = 0.0;       ///< b (U - F), at most 0
    double D = 0.0;       ///< (2/pi) arccos(exp(-F/2))
    double p_rec_av = 0.0;
};

/// Requires b > 0. For d == n: F = U = +infinity, S = 0, D = 1.
[[nodiscard]] ThermoPoint potentials(std::uint64_t n, std::uint64_t d, double b,
                                     AverageMode mode);

/// (2/pi) arccos(exp(-F/2)); 1 for F = +infinity.
[[nodiscard]] double distance_from_free_energy(double F);

[[nodiscard]] double effective_distance(std::uint64_t n, std::uint64_t d,
                                        double b, AverageMode mode);

struct HighTempLimit {
    double F_inf = 0.0;
    double D_inf = 0.0;
};

/**
 * b -> 0 limit: F_inf = -(2/(1-x0)) int_{x0}^1 ln cos(pi x/2) dx, the flat
 * average of the energy, and D_inf from it. Requires 0 <= x0 < 1.
 */
[[nodiscard]] HighTempLimit high_temp_limit(double d_over_n);

} // namespace qam::thermo
