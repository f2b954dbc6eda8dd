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
#include "qam/qsim/hamming_phase.hpp"

#include <algorithm>

#include "qam/errors.hpp"

namespace qam::qsim {

GateSequence hamming_phase_sequence(std::span<const std::size_t> distance_qubits,
                                    std::size_t control, std::size_t n) {
    if (std::find(distance_qubits.begin(), distance_qubits.end(), control) !=
        distance_qubits.end()) {
        throw ValidationError("hamming phase control lies inside the memory "
                              "range");
    }
    const Gate u = gates::distance_phase(n);
    const Gate u_correction = gates::distance_phase_correction(n);
    GateSequence seq;
    for (auto qb : distance_qubits) {
        seq.push(u, qb, "U");
    }
    for (auto qb : distance_qubits) {
        seq.push_controlled(u_correction, {Control{control, true}}, qb, "CU-2");
    }
    return seq;
}

void apply_hamming_phase(StateVector &state,
                         std::span<const std::size_t> memory_qubits,
                         std::size_t control, std::size_t n) {
    hamming_phase_sequence(memory_qubits, control, n).apply(state);
}

} // namespace qam::qsim
