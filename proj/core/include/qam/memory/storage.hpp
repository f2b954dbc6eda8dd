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
#include <functional>

#include "qam/memory/memory_model.hpp"
#include "qam/qsim/gate_sequence.hpp"
#include "qam/qsim/state_vector.hpp"

/**
 * @file
 * Three constructions of the memory superposition
 *
 *     |m> = 1/sqrt(p) sum_i |p^i>
 *
 * an analytic oracle, the sequential loading circuit and the unitary memory
 * operator M with M|0...0;00> = |m;00>. With StorageSign::kAlternating every
 * construction produces the dual state |d> = 1/sqrt(p) sum_i (-1)^(i+1) |p^i>
 * instead, by using the inverse split gate for even-numbered patterns.
 *
 * Register names: "m" memory (n qubits), "u" utility (2 qubits, u1 then u2),
 * "p" pattern register (n qubits, full-register mode only).
 */

namespace qam::memory {

enum class StorageSign {
    kUniform,     ///< |m>
    kAlternating, ///< |d>
};

enum class PatternRegister {
    /// Gates conditioned on pattern bits are compiled against the classical
    /// bits; only n + 2 qubits are simulated.
    kClassical,
    /// The pattern register is simulated as n extra qubits and reloaded
    /// between patterns (2n + 2 qubits).
    kQuantum,
};

/// [m:n, u:2]
[[nodiscard]] qsim::RegisterLayout storage_layout(std::size_t n);

/// n-qubit state with amplitude +-1/sqrt(p) on every stored pattern.
[[nodiscard]] qsim::StateVector
memory_state_analytic(const MemoryModel &model,
                      StorageSign sign = StorageSign::kUniform);

/// Analytic dual state |d>.
[[nodiscard]] qsim::StateVector dual_state(const MemoryModel &model);

struct StorageOptions {
    StorageSign sign = StorageSign::kUniform;
    PatternRegister pattern_register = PatternRegister::kClassical;
    /**
     * Invoked once per pattern (1-based index) right after the new pattern
     * has been split off and the memory/utility registers restored, i.e. on
     *   1/sqrt(p) sum_{k<=i} |p^i;00;p^k> + sqrt((p-i)/p) |p^i;01;p^i>.
     * The state's layout is [m, u] or [m, u, p] depending on the mode.
     */
    std::function<void(std::size_t, const qsim::StateVector &)>
        on_pattern_separated;
};

struct StorageResult {
    /// Final state over storage_layout(n): |m> (x) |00>.
    qsim::StateVector state;
    qsim::GateRecord gates;
};

/// Sequential loading circuit: patterns are split off one at a time from a
/// processing term flagged by u2 = 1, with the split gate S^(p+1-i).
[[nodiscard]] StorageResult store_sequential(const MemoryModel &model,
                                             const StorageOptions &options = {});

/**
 * The memory operator M on the "m" and "u" registers of `layout`:
 * NOT(u2) first, then for i = 1..p the block
 *   CP^i(u2), XOR(u2 -> u1), CS^(p+1-i)(u1 -> u2), C_{m=p^i}NOT(u1),
 *   (CP^i)^-1(u2),
 * where CP^i loads pattern i into "m" controlled on u2. Resetting u1 is
 * conditioned on the memory register holding p^i so that previously stored
 * terms keep u1 = 0. Exactly p(2n+3) + 1 gates, p of them n-controlled.
 */
[[nodiscard]] qsim::GateSequence
memory_operator(const MemoryModel &model, const qsim::RegisterLayout &layout,
                StorageSign sign = StorageSign::kUniform);

/// Applies M to a state whose layout holds "m" (width n) and "u" (width 2).
void apply_memory_operator(const MemoryModel &model, qsim::StateVector &state,
                           StorageSign sign = StorageSign::kUniform);

/// M|0...0;00> over storage_layout(n).
[[nodiscard]] qsim::StateVector
memory_state_from_operator(const MemoryModel &model,
                           StorageSign sign = StorageSign::kUniform);

[[nodiscard]] constexpr std::uint64_t
memory_operator_gate_count(std::uint64_t n, std::uint64_t p) noexcept {
    return p * (2 * n + 3) + 1;
}

} // namespace qam::memory
