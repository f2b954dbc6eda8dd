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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qam/thermo/potentials.hpp"

namespace qam::thermo {

/// `points` values from b_min to b_max, evenly spaced in ln b.
[[nodiscard]] std::vector<double> log_grid(double b_min, double b_max,
                                           std::size_t points);

struct ScanResult {
    std::vector<ThermoPoint> points;
    /// (S - S_min) / (0 - S_min) over the grid; all ones if S_min == 0.
    std::vector<double> s_rescaled;
    double d_over_n = 0.0;
    /// D at b -> 0.
    double d_inf = 0.0;
    /**
     * Onset of the ordered phase: the tangent to D(ln b) at its steepest
     * grid point, intersected with the disordered plateau D = d_inf.
     */
    double b_cr = 0.0;
    /// Where D crosses (d_inf + d/n) / 2, log-interpolated between grid points.
    double b_mid = 0.0;
};

/**
 * Potentials on an ascending grid spanning at least 6 decades. Throws
 * BracketError when D does not cross the midpoint between its plateaus
 * inside the grid or the steepest descent sits on the grid boundary.
 */
[[nodiscard]] ScanResult scan_phase_transition(std::uint64_t n,
                                               std::uint64_t d,
                                               std::span<const double> grid,
                                               AverageMode mode);

/// Header `b,z_ratio,F,U,S,S_rescaled,D,p_rec_av`, 12 significant digits.
[[nodiscard]] std::string scan_csv(const ScanResult &scan);

} // namespace qam::thermo
