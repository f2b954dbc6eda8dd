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
#include "qam/qsim/phase.hpp"

#include <algorithm>
#include <cmath>

#include "qam/errors.hpp"

namespace qam::qsim {

std::vector<Complex> align_global_phase(std::span<const Complex> amplitudes,
                                        double tie_tol) {
    std::vector<Complex> out(amplitudes.begin(), amplitudes.end());
    double largest = 0.0;
    for (const auto &a : amplitudes) {
        largest = std::max(largest, std::abs(a));
    }
    if (largest == 0.0) {
        return out;
    }
    std::size_t ref = 0;
    while (std::abs(amplitudes[ref]) < largest - tie_tol) {
        ++ref;
    }
    const Complex rotation = std::conj(amplitudes[ref]) / std::abs(amplitudes[ref]);
    for (auto &a : out) {
        a *= rotation;
    }
    return out;
}

double max_deviation_up_to_phase(std::span<const Complex> a,
                                 std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw ValidationError("cannot compare states of different dimension");
    }
    const auto x = align_global_phase(a);
    const auto y = align_global_phase(b);
    double worst = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        worst = std::max(worst, std::abs(x[k] - y[k]));
    }
    return worst;
}

} // namespace qam::qsim
