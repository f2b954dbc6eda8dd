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

namespace qam::recall {

/// Oracle and cloning costs are opaque; they enter the formulas as plain
/// numbers.
struct ComplexityInputs {
    std::uint64_t n = 1;
    std::uint64_t p = 1;
    std::uint64_t b = 1;
    std::uint64_t T = 1;
    /// Cost of one copy of |m> in measured mode.
    double c_clon = 1.0;
    double c_s = 0.0;
    double c_s0 = 0.0;
};

struct ComplexityEstimate {
    std::uint64_t round_operator = 0; ///< 4n + 2
    std::uint64_t round_aux = 0;      ///< 6n + 2
    /// T b (6n + 2) C_clon: upper bound for measured retrieval.
    double measured_bound = 0.0;
    /// Gates of R(i) M: p(2n+3) + 1 + b(4n+2).
    std::uint64_t preparation = 0;
    /// Gates of one Q without oracles: p(4n+6) + b(8n+4) + 2.
    std::uint64_t iteration_gates = 0;
    /// T [iteration_gates + C_S + C_S0] + preparation.
    double amplified_total = 0.0;
    /// True when C_S and C_S0 are both zero, i.e. oracle costs are left out.
    bool oracles_excluded = true;
};

/// Throws ValidationError unless n, p, b >= 1.
[[nodiscard]] ComplexityEstimate complexity_estimate(const ComplexityInputs &in);

} // namespace qam::recall
