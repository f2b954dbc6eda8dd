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
#include <span>

#include "qam/qsim/gate_sequence.hpp"
#include "qam/qsim/state_vector.hpp"

namespace qam::qsim {

/**
 * Decomposition of exp(i*pi*z/(2n) * sigma_3(control)), where z counts the
 * zero bits among `distance_qubits`: one U = diag(e^{i pi/2n}, 1) per
 * distance qubit, followed by one U^-2 per distance qubit controlled on
 * `control` = 1. Basis states pick up exp(+i pi z/2n) when the control reads
 * 0 and exp(-i pi z/2n) when it reads 1, in exactly 2 * |distance_qubits|
 * elementary gates.
 *
 * `n` sets the angular scale and may exceed |distance_qubits| (masked
 * inputs keep the full register width).
 */
[[nodiscard]] GateSequence
hamming_phase_sequence(std::span<const std::size_t> distance_qubits,
                       std::size_t control, std::size_t n);

void apply_hamming_phase(StateVector &state,
                         std::span<const std::size_t> memory_qubits,
                         std::size_t control, std::size_t n);

} // namespace qam::qsim
