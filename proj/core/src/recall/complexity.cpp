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
#include "qam/recall/complexity.hpp"

#include "qam/errors.hpp"
#include "qam/memory/storage.hpp"
#include "qam/recall/retrieval_circuit.hpp"

namespace qam::recall {

ComplexityEstimate complexity_estimate(const ComplexityInputs &in) {
    if (in.n == 0 || in.p == 0 || in.b == 0) {
        throw ValidationError("n, p and b must be positive");
    }
    ComplexityEstimate out;
    out.round_operator = round_gate_count(in.n, InputEncoding::kOperator);
    out.round_aux = round_gate_count(in.n, InputEncoding::kAuxRegister);
    out.measured_bound = static_cast<double>(in.T * in.b * out.round_aux) *
                         in.c_clon;
    const std::uint64_t memory_gates =
        memory::memory_operator_gate_count(in.n, in.p);
    const std::uint64_t rotation_gates = in.b * out.round_operator;
    out.preparation = memory_gates + rotation_gates;
    // Q holds M, M^-1, R and R^-1 once each.
    out.iteration_gates = 2 * memory_gates + 2 * rotation_gates;
    out.amplified_total =
        static_cast<double>(in.T) *
            (static_cast<double>(out.iteration_gates) + in.c_s + in.c_s0) +
        static_cast<double>(out.preparation);
    out.oracles_excluded = in.c_s == 0.0 && in.c_s0 == 0.0;
    return out;
}

} // namespace qam::recall
