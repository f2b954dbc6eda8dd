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
#include "qam/qsim/gate_sequence.hpp"

#include <utility>

namespace qam::qsim {

void GateSequence::push(Gate gate, std::size_t target, std::string label) {
    ops_.push_back(GateOp{std::move(gate), {}, target, std::move(label)});
}

void GateSequence::push_controlled(Gate gate, std::vector<Control> controls,
                                   std::size_t target, std::string label) {
    ops_.push_back(
        GateOp{std::move(gate), std::move(controls), target, std::move(label)});
}

void GateSequence::append(const GateSequence &other) {
    ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
}

GateSequence GateSequence::adjoint() const {
    GateSequence out;
    out.ops_.reserve(ops_.size());
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
        out.ops_.push_back(
            GateOp{it->gate.adjoint(), it->controls, it->target, it->label});
    }
    return out;
}

void GateSequence::apply(StateVector &state) const {
    for (const auto &op : ops_) {
        state.apply_controlled(op.gate, op.controls, op.target, op.label);
    }
}

} // namespace qam::qsim
