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
#include "qam/thermo/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qam/errors.hpp"

namespace qam::thermo {

std::vector<double> log_grid(double b_min, double b_max, std::size_t points) {
    if (!(b_min > 0.0) || !(b_max > b_min) || !std::isfinite(b_max)) {
        throw ValidationError("grid needs 0 < b_min < b_max");
    }
    if (points < 2) {
        throw ValidationError("grid needs at least 2 points");
    }
    const double lo = std::log(b_min);
    const double hi = std::log(b_max);
    std::vector<double> grid(points);
    for (std::size_t k = 0; k < points; ++k) {
        grid[k] = std::exp(lo + (hi - lo) * static_cast<double>(k) /
                                    static_cast<double>(points - 1));
    }
    grid.front() = b_min;
    grid.back() = b_max;
    return grid;
}

ScanResult scan_phase_transition(std::uint64_t n, std::uint64_t d,
                                 std::span<const double> grid,
                                 AverageMode mode) {
    if (grid.size() < 3) {
        throw ValidationError("scan grid needs at least 3 points");
    }
    if (!std::is_sorted(grid.begin(), grid.end()) || !(grid.front() > 0.0)) {
        throw ValidationError("scan grid must be positive and ascending");
    }
    if (grid.back() / grid.front() < 1e6 * (1.0 - 1e-12)) {
        throw ValidationError("scan grid must span at least 6 decades");
    }
    if (d >= n) {
        throw ValidationError("scan needs d < n");
    }

    ScanResult out;
    out.d_over_n = static_cast<double>(d) / static_cast<double>(n);
    out.d_inf = high_temp_limit(out.d_over_n).D_inf;
    out.points.reserve(grid.size());
    for (double b : grid) {
        out.points.push_back(potentials(n, d, b, mode));
    }

    double s_min = 0.0;
    for (const auto &pt : out.points) {
        s_min = std::min(s_min, pt.S);
    }
    for (const auto &pt : out.points) {
        out.s_rescaled.push_back(s_min < 0.0 ? (pt.S - s_min) / (-s_min) : 1.0);
    }

    const double mid = 0.5 * (out.d_inf + out.d_over_n);
    const auto &pts = out.points;
    bool bracketed = false;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        if (pts[k].D >= mid && pts[k + 1].D < mid) {
            const double x0 = std::log(pts[k].b);
            const double x1 = std::log(pts[k + 1].b);
            const double t = (pts[k].D - mid) / (pts[k].D - pts[k + 1].D);
            out.b_mid = std::exp(x0 + t * (x1 - x0));
            bracketed = true;
            break;
        }
    }
    if (!bracketed) {
        throw BracketError("D does not cross the midpoint " +
                           std::to_string(mid) + " inside the b grid");
    }

    std::size_t steepest = 0;
    double slope = 0.0;
    for (std::size_t k = 1; k + 1 < pts.size(); ++k) {
        const double s = (pts[k + 1].D - pts[k - 1].D) /
                         (std::log(pts[k + 1].b) - std::log(pts[k - 1].b));
        if (s < slope) {
            slope = s;
            steepest = k;
        }
    }
    if (steepest == 0 || steepest + 2 == pts.size()) {
        throw BracketError("steepest descent of D lies on the grid boundary");
    }
    const double x_cr = std::log(pts[steepest].b) +
                        (out.d_inf - pts[steepest].D) / slope;
    out.b_cr = std::exp(x_cr);
    return out;
}

std::string scan_csv(const ScanResult &scan) {
    std::string csv = "b,z_ratio,F,U,S,S_rescaled,D,p_rec_av\n";
    char buf[512];
    for (std::size_t k = 0; k < scan.points.size(); ++k) {
        const auto &pt = scan.points[k];
        std::snprintf(buf, sizeof buf,
                      "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", pt.b,
                      pt.z_ratio, pt.F, pt.U, pt.S, scan.s_rescaled[k], pt.D,
                      pt.p_rec_av);
        csv += buf;
    }
    return csv;
}

} // namespace qam::thermo
