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

#include <string>
#include <string_view>

#include "qam/qsim/state_vector.hpp"

namespace qam::qsim {

/**
 * State file format:
 *
 *   {"num_qubits": q,
 *    "layout": [{"name": "m", "offset": 0, "width": n}, ...],
 *    "amplitudes": [[re, im], ...]}
 *
 * Amplitudes are in basis-index order; every real is printed with 17
 * significant digits so a load reproduces the exact doubles.
 */
[[nodiscard]] std::string to_json(const StateVector &state);

/// Parses the format above; throws ValidationError on malformed input.
[[nodiscard]] StateVector state_from_json(std::string_view text);

/// Shortest-safe decimal form used across qam's text outputs: %.17g.
[[nodiscard]] std::string format_real(double value);

} // namespace qam::qsim
