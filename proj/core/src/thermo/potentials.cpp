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
#include "qam/thermo/potentials.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "integrate.hpp"
#include "qam/errors.hpp"

namespace qam::thermo {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
} // namespace

double distance_from_free_energy(double F) {
    if (std::isinf(F)) {
        return 1.0;
    }
    return (2.0 / kPi) * std::acos(std::exp(-F / 2.0));
}

ThermoPoint potentials(std::uint64_t n, std::uint64_t d, double b,
                       AverageMode mode) {
    if (!(b > 0.0)) {
        throw ValidationError("potentials need b > 0");
    }
    const BoltzmannMoments m = boltzmann_moments(n, d, b, mode);
    ThermoPoint pt;
    pt.b = b;
    if (std::isinf(m.log_z)) {
        pt.z_ratio = 0.0;
        pt.F = kInf;
        pt.U = kInf;
        pt.S = 0.0;
        pt.D = 1.0;
        pt.p_rec_av = 0.0;
        return pt;
    }
    pt.z_ratio = std::exp(m.log_z);
    pt.F = -m.log_z / b;
    pt.U = m.mean_energy;
    // b (U - F) = b U + ln z: minus the relative entropy of the Boltzmann
    // weights with respect to the flat prior.
    pt.S = b * m.mean_energy + m.log_z;
    pt.D = distance_from_free_energy(pt.F);
    pt.p_rec_av = pt.z_ratio;
    return pt;
}

double effective_distance(std::uint64_t n, std::uint64_t d, double b,
                          AverageMode mode) {
    return potentials(n, d, b, mode).D;
}

HighTempLimit high_temp_limit(double d_over_n) {
    if (!(d_over_n >= 0.0) || !(d_over_n < 1.0)) {
        throw ValidationError("d/n must lie in [0, 1)");
    }
    const double width = 1.0 - d_over_n;
    // With t = 1 - x the logarithmic singularity sits at t = 0, where the
    // quadrature nodes keep full relative precision.
    const double integral = detail::integrate(
        [](double t) { return std::log(std::sin(kPi * t / 2.0)); }, 0.0, width,
        1e-14);
    HighTempLimit out;
    out.F_inf = -2.0 * integral / width;
    out.D_inf = distance_from_free_energy(out.F_inf);
    return out;
}

} // namespace qam::thermo
