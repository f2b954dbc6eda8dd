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
#include "qam/memory/storage.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qam/errors.hpp"
#include "qam/qsim/measurement.hpp"

namespace qam::memory {

using qsim::Control;
using qsim::Gate;
using qsim::RegisterLayout;
using qsim::StateVector;

namespace {

constexpr std::size_t kUtilityFirst = 0;  // u1
constexpr std::size_t kUtilitySecond = 1; // u2

bool uses_inverse_split(StorageSign sign, std::size_t i) {
    return sign == StorageSign::kAlternating && i % 2 == 0;
}

Gate split_gate(StorageSign sign, std::size_t i, std::size_t p) {
    const Gate s = qsim::gates::storage_split(p + 1 - i);
    return uses_inverse_split(sign, i) ? s.adjoint() : s;
}

/// Applies a NOT to `target`, conditioned on pattern bit `j`: compiled
/// against the classical bit or wired to pattern qubit `j`.
struct PatternControl {
    const Pattern *pattern = nullptr;
    std::vector<std::size_t> qubits; // empty in classical mode

    [[nodiscard]] bool quantum() const { return !qubits.empty(); }
};

void pattern_xor(StateVector &state, const PatternControl &pc, std::size_t j,
                 std::size_t target) {
    static const Gate kNot = qsim::gates::pauli_x();
    if (pc.quantum()) {
        const Control c{pc.qubits[j], true};
        state.apply_controlled(kNot, {&c, 1}, target, "XOR");
    } else if ((*pc.pattern)[j]) {
        state.apply(kNot, target, "XOR");
    }
}

void pattern_toffoli(StateVector &state, const PatternControl &pc,
                     std::size_t j, std::size_t u2, std::size_t target) {
    static const Gate kNot = qsim::gates::pauli_x();
    if (pc.quantum()) {
        const Control cs[2] = {{pc.qubits[j], true}, {u2, true}};
        state.apply_controlled(kNot, cs, target, "2XOR");
    } else if ((*pc.pattern)[j]) {
        const Control c{u2, true};
        state.apply_controlled(kNot, {&c, 1}, target, "2XOR");
    }
}

} // namespace

RegisterLayout storage_layout(std::size_t n) {
    return RegisterLayout{{"m", n}, {"u", 2}};
}

StateVector memory_state_analytic(const MemoryModel &model, StorageSign sign) {
    const std::size_t n = model.width();
    RegisterLayout layout{{"m", n}};
    if (n > qsim::default_qubit_cap()) {
        throw CapacityError("memory register exceeds the qubit cap");
    }
    std::vector<qsim::Complex> amps(std::uint64_t{1} << n);
    const double amp = 1.0 / std::sqrt(static_cast<double>(model.size()));
    for (std::size_t i = 0; i < model.size(); ++i) {
        // Pattern i (0-based) carries (-1)^i == (-1)^((i+1)+1).
        const double sign_factor =
            (sign == StorageSign::kAlternating && i % 2 == 1) ? -1.0 : 1.0;
        amps[model.pattern(i).to_index()] = sign_factor * amp;
    }
    return StateVector::from_amplitudes(std::move(layout), std::move(amps));
}

StateVector dual_state(const MemoryModel &model) {
    return memory_state_analytic(model, StorageSign::kAlternating);
}

StorageResult store_sequential(const MemoryModel &model,
                               const StorageOptions &options) {
    const std::size_t n = model.width();
    const std::size_t p = model.size();
    const bool quantum = options.pattern_register == PatternRegister::kQuantum;

    RegisterLayout layout = storage_layout(n);
    if (quantum) {
        layout.add("p", n);
    }
    const auto m = layout.qubits("m");
    const std::size_t u1 = layout.qubit("u", kUtilityFirst);
    const std::size_t u2 = layout.qubit("u", kUtilitySecond);

    // |m = 0...0; u = 01; p = p^1>
    std::uint64_t initial = qsim::qubit_bit(layout.num_qubits(), u2);
    if (quantum) {
        const auto pq = layout.qubits("p");
        for (std::size_t j = 0; j < n; ++j) {
            if (model.pattern(0)[j]) {
                initial |= qsim::qubit_bit(layout.num_qubits(), pq[j]);
            }
        }
    }
    StateVector state = StateVector::basis(layout, initial);

    const Gate kNot = qsim::gates::pauli_x();
    std::vector<Control> all_memory_ones;
    for (auto qb : m) {
        all_memory_ones.push_back(Control{qb, true});
    }

    for (std::size_t i = 1; i <= p; ++i) {
        const Pattern &pattern = model.pattern(i - 1);
        PatternControl pc{&pattern, quantum ? layout.qubits("p")
                                            : std::vector<std::size_t>{}};

        // Copy the pattern into the processing term's memory register.
        for (std::size_t j = 0; j < n; ++j) {
            pattern_toffoli(state, pc, j, u2, m[j]);
        }
        // m_j -> 1 iff m_j == p_j; the processing term becomes all ones.
        for (std::size_t j = 0; j < n; ++j) {
            pattern_xor(state, pc, j, m[j]);
            state.apply(kNot, m[j], "NOT");
        }
        state.apply_controlled(kNot, all_memory_ones, u1, "nXOR");
        const Control on_u1{u1, true};
        state.apply_controlled(split_gate(options.sign, i, p), {&on_u1, 1},
                               u2, "CS");
        state.apply_controlled(kNot, all_memory_ones, u1, "nXOR");
        for (std::size_t j = n; j-- > 0;) {
            state.apply(kNot, m[j], "NOT");
            pattern_xor(state, pc, j, m[j]);
        }
        if (options.on_pattern_separated) {
            options.on_pattern_separated(i, state);
        }
        // Clear the processing term's memory register again.
        for (std::size_t j = n; j-- > 0;) {
            pattern_toffoli(state, pc, j, u2, m[j]);
        }
        if (quantum && i < p) {
            const auto pq = layout.qubits("p");
            const Pattern &next = model.pattern(i);
            for (std::size_t j = 0; j < n; ++j) {
                if (pattern[j] != next[j]) {
                    state.apply(kNot, pq[j], "LOAD");
                }
            }
        }
    }

    qsim::GateRecord gates = state.gates();
    if (quantum) {
        StateVector reduced = qsim::condition_and_drop(
            state, "p", model.pattern(p - 1).to_index());
        return StorageResult{std::move(reduced), std::move(gates)};
    }
    return StorageResult{std::move(state), std::move(gates)};
}

qsim::GateSequence memory_operator(const MemoryModel &model,
                                   const RegisterLayout &layout,
                                   StorageSign sign) {
    const std::size_t n = model.width();
    const std::size_t p = model.size();
    if (layout.at("m").width != n) {
        throw ValidationError("memory register width does not match the "
                              "patterns");
    }
    if (layout.at("u").width != 2) {
        throw ValidationError("utility register must hold 2 qubits");
    }
    const auto m = layout.qubits("m");
    const std::size_t u1 = layout.qubit("u", kUtilityFirst);
    const std::size_t u2 = layout.qubit("u", kUtilitySecond);
    const Gate kNot = qsim::gates::pauli_x();
    const Control on_u2{u2, true};

    qsim::GateSequence seq;
    seq.push(kNot, u2, "NOT");
    for (std::size_t i = 1; i <= p; ++i) {
        const Pattern &pattern = model.pattern(i - 1);
        for (std::size_t j = 0; j < n; ++j) {
            seq.push_controlled(qsim::gates::pattern_loader(pattern[j]),
                                {on_u2}, m[j], "CU");
        }
        seq.push_controlled(kNot, {on_u2}, u1, "XOR");
        seq.push_controlled(split_gate(sign, i, p), {Control{u1, true}}, u2,
                            "CS");
        // Clears u1 on the two terms just split apart, which are the only
        // ones whose memory register holds p^i. A bare NOT(u1) would also
        // flip u1 on the patterns stored earlier and expose them to the next
        // CS.
        std::vector<Control> holds_pattern;
        for (std::size_t j = 0; j < n; ++j) {
            holds_pattern.push_back(Control{m[j], pattern[j]});
        }
        seq.push_controlled(kNot, std::move(holds_pattern), u1, "nXOR");
        for (std::size_t j = n; j-- > 0;) {
            seq.push_controlled(qsim::gates::pattern_loader(pattern[j]).adjoint(),
                                {on_u2}, m[j], "CU");
        }
    }
    return seq;
}

void apply_memory_operator(const MemoryModel &model, StateVector &state,
                           StorageSign sign) {
    memory_operator(model, state.layout(), sign).apply(state);
}

StateVector memory_state_from_operator(const MemoryModel &model,
                                       StorageSign sign) {
    StateVector state = StateVector::zero(storage_layout(model.width()));
    apply_memory_operator(model, state, sign);
    return state;
}

} // namespace qam::memory
