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
#include "qam/thermo/ising.hpp"

#include <numbers>
#include <string>

#include "qam/errors.hpp"

namespace qam::thermo {

double ising_energy(std::span<const double> spins, std::size_t n) {
    if (n == 0 || spins.size() != n) {
        throw ValidationError("expected " + std::to_string(n) + " spins, got " +
                              std::to_string(spins.size()));
    }
    double total = 0.0;
    for (double s : spins) {
        if (s != 0.5 && s != -0.5) {
            throw ValidationError("spin values must be +1/2 or -1/2");
        }
        total += s;
    }
    // sum_{i,j} s_i s_j = (sum_i s_i)^2
    constexpr double pi2 = std::numbers::pi * std::numbers::pi;
    const double nn = static_cast<double>(n);
    return pi2 / 16.0 + pi2 / (4.0 * nn * nn) * total * total +
           pi2 / (4.0 * nn) * total;
}

} // namespace qam::thermo
