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
#include "qam/recall/retrieval_circuit.hpp"

#include <string>
#include <vector>

#include "qam/errors.hpp"
#include "qam/memory/storage.hpp"
#include "qam/qsim/hamming_phase.hpp"
#include "qam/qsim/measurement.hpp"

namespace qam::recall {

using qsim::Control;
using qsim::GateSequence;
using qsim::RegisterLayout;
using qsim::StateVector;

RegisterLayout retrieval_layout(std::size_t n, std::size_t b,
                                InputEncoding encoding) {
    if (b == 0) {
        throw ValidationError("at least one control qubit is required");
    }
    if (encoding == InputEncoding::kAuxRegister) {
        return RegisterLayout{{"i", n}, {"m", n}, {"c", b}};
    }
    return RegisterLayout{{"m", n}, {"c", b}};
}

namespace {

std::vector<std::size_t> active_positions(std::size_t n,
                                          const std::optional<KnownMask> &mask) {
    if (mask) {
        if (mask->width() != n) {
            throw ValidationError("mask width does not match the input");
        }
        return {mask->indices().begin(), mask->indices().end()};
    }
    std::vector<std::size_t> all(n);
    for (std::size_t j = 0; j < n; ++j) {
        all[j] = j;
    }
    return all;
}

} // namespace

GateSequence retrieval_round(const Pattern &input, const RegisterLayout &layout,
                             std::size_t l, const CircuitOptions &options) {
    const std::size_t n = layout.at("m").width;
    if (input.width() != n) {
        throw ValidationError("input width " + std::to_string(input.width()) +
                              " does not match memory width " +
                              std::to_string(n));
    }
    const std::size_t control = layout.qubit("c", l);
    const auto positions = active_positions(n, options.mask);
    std::vector<std::size_t> marked;
    for (auto j : positions) {
        marked.push_back(layout.qubit("m", j));
    }

    const qsim::Gate h = qsim::gates::hadamard();
    const qsim::Gate x = qsim::gates::pauli_x();
    GateSequence seq;
    seq.push(h, control, "H");
    if (options.encoding == InputEncoding::kOperator) {
        for (auto j : positions) {
            seq.push(qsim::gates::input_marker(input[j]), layout.qubit("m", j),
                     "I");
        }
        seq.append(qsim::hamming_phase_sequence(marked, control, n));
        for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
            seq.push(qsim::gates::input_marker(input[*it]).adjoint(),
                     layout.qubit("m", *it), "I");
        }
    } else {
        for (auto j : positions) {
            seq.push_controlled(x, {Control{layout.qubit("i", j), true}},
                                layout.qubit("m", j), "XOR");
            seq.push(x, layout.qubit("m", j), "NOT");
        }
        seq.append(qsim::hamming_phase_sequence(marked, control, n));
        for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
            seq.push(x, layout.qubit("m", *it), "NOT");
            seq.push_controlled(x, {Control{layout.qubit("i", *it), true}},
                                layout.qubit("m", *it), "XOR");
        }
    }
    seq.push(h, control, "H");
    return seq;
}

GateSequence retrieval_rotation(const Pattern &input,
                                const RegisterLayout &layout,
                                const CircuitOptions &options) {
    GateSequence seq;
    for (std::size_t l = 0; l < layout.at("c").width; ++l) {
        seq.append(retrieval_round(input, layout, l, options));
    }
    return seq;
}

StateVector build_final_state(const MemoryModel &model, const Pattern &input,
                              std::size_t b, const CircuitOptions &options) {
    const std::size_t n = model.width();
    const RegisterLayout layout = retrieval_layout(n, b, options.encoding);
    if (layout.num_qubits() > qsim::default_qubit_cap()) {
        throw CapacityError("retrieval needs " +
                            std::to_string(layout.num_qubits()) +
                            " qubits, above the cap of " +
                            std::to_string(qsim::default_qubit_cap()));
    }
    if (input.width() != n) {
        throw ValidationError("input width " + std::to_string(input.width()) +
                              " does not match memory width " +
                              std::to_string(n));
    }

    StateVector state = qsim::tensor(memory::memory_state_analytic(model),
                                     StateVector::zero(RegisterLayout{{"c", b}}));
    if (options.encoding == InputEncoding::kAuxRegister) {
        state = qsim::tensor(
            StateVector::basis(RegisterLayout{{"i", n}}, input.to_index()),
            state);
    }
    state.reset_gates();
    retrieval_rotation(input, layout, options).apply(state);

    if (options.encoding == InputEncoding::kAuxRegister) {
        double prob = 0.0;
        StateVector reduced =
            qsim::condition_and_drop(state, "i", input.to_index(), &prob);
        if (prob < 1.0 - 1e-10) {
            throw Error("retrieval disturbed the input register");
        }
        reduced.gates() = state.gates();
        return reduced;
    }
    return state;
}

} // namespace qam::recall
