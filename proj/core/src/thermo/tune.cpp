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
#include "qam/thermo/tune.hpp"

#include <cmath>
#include <sstream>

#include "qam/errors.hpp"
#include "qam/qsim/serialization.hpp"
#include "qam/thermo/potentials.hpp"

namespace qam::thermo {

namespace {

std::uint64_t distance_for(std::uint64_t n, double epsilon) {
    if (n == 0) {
        throw ValidationError("n must be positive");
    }
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
        throw ValidationError("epsilon must lie in (0, 1)");
    }
    const auto d = static_cast<std::uint64_t>(
        std::llround(epsilon * static_cast<double>(n)));
    if (d >= n) {
        throw ValidationError("epsilon * n must be below n");
    }
    return d;
}

std::uint64_t ceil_count(double log_value) {
    // 2^64 would not fit the counter.
    if (log_value >= 64.0 * std::log(2.0)) {
        throw InfeasibleError("repetition threshold overflows");
    }
    return static_cast<std::uint64_t>(std::ceil(std::exp(log_value)));
}

} // namespace

TuneResult thresholds_at(std::uint64_t n, double epsilon, std::uint64_t b,
                         AverageMode mode) {
    const std::uint64_t d = distance_for(n, epsilon);
    if (b == 0) {
        throw ValidationError("b must be at least 1");
    }
    const ThermoPoint pt = potentials(n, d, static_cast<double>(b), mode);
    if (pt.z_ratio == 0.0) {
        throw InfeasibleError("average recognition probability is zero");
    }
    const double log_z = -static_cast<double>(b) * pt.F;
    TuneResult out;
    out.b = b;
    out.achieved_D = pt.D;
    out.p_rec_av = pt.z_ratio;
    out.T_measured = ceil_count(-log_z);
    out.T_amplified = ceil_count(-log_z / 2.0);
    return out;
}

TuneResult tune(std::uint64_t n, double epsilon, double nu, AverageMode mode) {
    const std::uint64_t d = distance_for(n, epsilon);
    if (!(nu >= 0.0) || !(nu <= 1.0)) {
        throw ValidationError("nu must lie in [0, 1]");
    }
    if (nu >= 1.0) {
        throw InfeasibleError("nu = 1 asks for D <= epsilon, but D > epsilon "
                              "for every finite b");
    }
    const double target = epsilon + (1.0 - nu);
    const auto ok = [&](std::uint64_t b) {
        return effective_distance(n, d, static_cast<double>(b), mode) <= target;
    };

    std::uint64_t hi = 1;
    while (!ok(hi)) {
        if (hi >= kMaxTuneB) {
            throw InfeasibleError("no b up to 2^40 reaches D - epsilon <= 1 - nu");
        }
        hi *= 2;
    }
    std::uint64_t lo = hi / 2; // fails, or 0 when hi == 1
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (ok(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return thresholds_at(n, epsilon, hi, mode);
}

std::string to_json(const TuneResult &result) {
    std::ostringstream os;
    os << "{\"b\": " << result.b << ", \"T_measured\": " << result.T_measured
       << ", \"T_amplified\": " << result.T_amplified
       << ", \"achieved_D\": " << qsim::format_real(result.achieved_D)
       << ", \"p_rec_av\": " << qsim::format_real(result.p_rec_av) << '}';
    return os.str();
}

} // namespace qam::thermo
