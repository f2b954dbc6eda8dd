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
#include <cstdint>
#include <optional>

#include "qam/qsim/gate_sequence.hpp"
#include "qam/qsim/state_vector.hpp"
#include "qam/recall/distance.hpp"

/**
 * @file
 * The retrieval rotation R(i). For each control qubit c_l in turn:
 *
 *   H(c_l); mark m against i; exp(i pi H / 2n sigma_3(c_l)); unmark; H(c_l)
 *
 * where marking leaves m_j = 1 exactly where the memory bit agrees with the
 * input, so the phase counts the Hamming distance. Afterwards the amplitude
 * of |p^k; J> with |J| = l ones is
 *
 *   i^l / sqrt(p) * cos^(b-l)(pi d_k / 2n) * sin^l(pi d_k / 2n).
 *
 * Two input encodings are provided. kOperator applies the input operator I
 * (one single-qubit gate per bit) directly on "m", for 4n+2 gates per round.
 * kAuxRegister keeps the input in an n-qubit register "i" and marks with
 * XOR(i_j -> m_j) followed by NOT(m_j), for 6n+2 gates per round.
 */

namespace qam::recall {

enum class InputEncoding {
    kOperator,
    kAuxRegister,
};

struct CircuitOptions {
    InputEncoding encoding = InputEncoding::kOperator;
    /// Only known positions are marked and phased; the angular scale stays
    /// 1/2n with n the full width.
    std::optional<KnownMask> mask;
};

/// [m:n, c:b] for kOperator, [i:n, m:n, c:b] for kAuxRegister.
[[nodiscard]] qsim::RegisterLayout retrieval_layout(std::size_t n,
                                                    std::size_t b,
                                                    InputEncoding encoding);

/// One round on control qubit `l` of register "c" of `layout`.
[[nodiscard]] qsim::GateSequence
retrieval_round(const Pattern &input, const qsim::RegisterLayout &layout,
                std::size_t l, const CircuitOptions &options = {});

/// R(i): all b rounds, c_1 first.
[[nodiscard]] qsim::GateSequence
retrieval_rotation(const Pattern &input, const qsim::RegisterLayout &layout,
                   const CircuitOptions &options = {});

/**
 * R(i) applied to |m> (x) |0...0>_c, with |m> prepared analytically. The
 * result is always over [m:n, c:b]; in kAuxRegister mode the input register
 * is verified to be left in |i> and dropped. The returned state's gate record
 * holds the retrieval rounds only.
 */
[[nodiscard]] qsim::StateVector
build_final_state(const MemoryModel &model, const Pattern &input, std::size_t b,
                  const CircuitOptions &options = {});

/// Elementary gates in one unmasked retrieval round.
[[nodiscard]] constexpr std::uint64_t
round_gate_count(std::uint64_t n, InputEncoding encoding) noexcept {
    return encoding == InputEncoding::kOperator ? 4 * n + 2 : 6 * n + 2;
}

} // namespace qam::recall
