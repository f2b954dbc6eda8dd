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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "qam/qsim/gate.hpp"
#include "qam/qsim/gate_record.hpp"
#include "qam/qsim/layout.hpp"

/**
 * @file
 * Dense state-vector simulator with exactly the gate set the associative
 * memory needs: single-qubit unitaries, multiply-controlled single-qubit
 * unitaries with per-control values, diagonal sign oracles and a global phase.
 *
 * A StateVector has a single-writer contract: it may be handed between
 * threads but never mutated concurrently.
 */

namespace qam::qsim {

inline constexpr std::size_t kDefaultQubitCap = 26;
inline constexpr double kNormTolerance = 1e-10;

/// Qubit cap for new states: kDefaultQubitCap unless QAM_QUBIT_CAP is set.
[[nodiscard]] std::size_t default_qubit_cap();

/// One control line: `qubit` must read `value` for the gate to fire.
struct Control {
    std::size_t qubit = 0;
    bool value = true;

    bool operator==(const Control &) const = default;
};

class StateVector {
  public:
    /// |0...0> over `layout`; throws CapacityError above `cap` qubits.
    static StateVector zero(RegisterLayout layout,
                            std::size_t cap = default_qubit_cap());
    /// Computational basis state `index` (big-endian, see RegisterLayout).
    static StateVector basis(RegisterLayout layout, std::uint64_t index,
                             std::size_t cap = default_qubit_cap());
    /// Wraps explicit amplitudes; length must be 2^q and the norm 1 within
    /// kNormTolerance.
    static StateVector from_amplitudes(RegisterLayout layout,
                                       std::vector<Complex> amplitudes,
                                       std::size_t cap = default_qubit_cap());

    [[nodiscard]] std::size_t num_qubits() const noexcept {
        return layout_.num_qubits();
    }
    [[nodiscard]] std::uint64_t dimension() const noexcept {
        return amplitudes_.size();
    }
    [[nodiscard]] const RegisterLayout &layout() const noexcept {
        return layout_;
    }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] Complex amplitude(std::uint64_t index) const;
    [[nodiscard]] double norm_squared() const noexcept;

    [[nodiscard]] const GateRecord &gates() const noexcept { return gates_; }
    GateRecord &gates() noexcept { return gates_; }
    void reset_gates() noexcept { gates_ = GateRecord{}; }

    /// `gate` on `target`. Counts one gate under `label` (default: gate name).
    void apply(const Gate &gate, std::size_t target, std::string_view label = {});

    /**
     * `gate` on `target` restricted to basis states where every control
     * qubit reads its control value. Controls must be distinct and must not
     * contain the target. With no controls this is apply().
     */
    void apply_controlled(const Gate &gate, std::span<const Control> controls,
                          std::size_t target, std::string_view label = {});

    /// Negates every amplitude whose basis index satisfies `marked`. Counted
    /// as an oracle call, not as an elementary gate.
    void flip_sign_if(const std::function<bool(std::uint64_t)> &marked,
                      std::string_view label);

    /// Multiplies the whole state by a unit-modulus factor.
    void apply_global_phase(Complex phase);

    /**
     * Projects onto `outcome` of `qubits` (big-endian over the given order)
     * and renormalizes. Returns the pre-projection probability of the
     * outcome; throws ProjectionError when it is zero.
     */
    double project(std::span<const std::size_t> qubits, std::uint64_t outcome);

  private:
    StateVector(RegisterLayout layout, std::vector<Complex> amplitudes);

    void check_qubit(std::size_t qubit) const;

    RegisterLayout layout_;
    std::vector<Complex> amplitudes_;
    GateRecord gates_;
};

/// <a|b>, conjugate-linear in `a`. Dimensions must match.
[[nodiscard]] Complex inner_product(const StateVector &a, const StateVector &b);

/// |a> (x) |b>; `a`'s registers come first.
[[nodiscard]] StateVector tensor(const StateVector &a, const StateVector &b);

/// Value of `qubits` (big-endian over the given order) in basis index `index`.
[[nodiscard]] std::uint64_t extract_bits(std::uint64_t index,
                                         std::size_t num_qubits,
                                         std::span<const std::size_t> qubits);

} // namespace qam::qsim
