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

#include <span>
#include <vector>

#include "qam/qsim/gate.hpp"

namespace qam::qsim {

/**
 * Removes the global phase: the largest-magnitude amplitude is rotated onto
 * the positive real axis. Magnitudes within `tie_tol` of the maximum count
 * as ties and the lowest such index wins, so two states that agree up to a
 * phase pick the same reference amplitude.
 */
[[nodiscard]] std::vector<Complex>
align_global_phase(std::span<const Complex> amplitudes, double tie_tol = 1e-9);

/// max_k |a_k - b_k| after aligning both with align_global_phase().
[[nodiscard]] double max_deviation_up_to_phase(std::span<const Complex> a,
                                               std::span<const Complex> b);

} // namespace qam::qsim
