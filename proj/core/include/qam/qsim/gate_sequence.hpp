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
#include <string>
#include <vector>

#include "qam/qsim/gate.hpp"
#include "qam/qsim/state_vector.hpp"

namespace qam::qsim {

struct GateOp {
    Gate gate;
    std::vector<Control> controls;
    std::size_t target = 0;
    std::string label;
};

/**
 * Straight-line list of (controlled) single-qubit gates. Just enough
 * structure to build an operator once, apply it many times and apply its
 * inverse, which the memory operator M and the retrieval rotation R(i) need
 * for amplitude amplification.
 */
class GateSequence {
  public:
    void push(Gate gate, std::size_t target, std::string label = {});
    void push_controlled(Gate gate, std::vector<Control> controls,
                         std::size_t target, std::string label = {});
    void append(const GateSequence &other);

    /// Reversed sequence of adjoint gates; labels are kept.
    [[nodiscard]] GateSequence adjoint() const;

    void apply(StateVector &state) const;

    [[nodiscard]] std::size_t size() const noexcept { return ops_.size(); }
    [[nodiscard]] std::span<const GateOp> ops() const noexcept { return ops_; }

  private:
    std::vector<GateOp> ops_;
};

} // namespace qam::qsim
