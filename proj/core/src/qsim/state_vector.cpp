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
#include "qam/qsim/state_vector.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>

#include "qam/errors.hpp"

namespace qam::qsim {

std::size_t default_qubit_cap() {
    const char *env = std::getenv("QAM_QUBIT_CAP");
    if (env == nullptr || *env == '\0') {
        return kDefaultQubitCap;
    }
    std::size_t cap = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec != std::errc{} || ptr != text.data() + text.size() || cap == 0 ||
        cap > 40) {
        throw ValidationError("QAM_QUBIT_CAP must be an integer in [1, 40]");
    }
    return cap;
}

namespace {

void check_capacity(std::size_t num_qubits, std::size_t cap) {
    if (num_qubits == 0) {
        throw ValidationError("a state needs at least one qubit");
    }
    if (num_qubits > cap) {
        throw CapacityError("state of " + std::to_string(num_qubits) +
                            " qubits exceeds the cap of " +
                            std::to_string(cap));
    }
}

} // namespace

StateVector::StateVector(RegisterLayout layout, std::vector<Complex> amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::zero(RegisterLayout layout, std::size_t cap) {
    return basis(std::move(layout), 0, cap);
}

StateVector StateVector::basis(RegisterLayout layout, std::uint64_t index,
                               std::size_t cap) {
    check_capacity(layout.num_qubits(), cap);
    const std::uint64_t dim = std::uint64_t{1} << layout.num_qubits();
    if (index >= dim) {
        throw ValidationError("basis index out of range");
    }
    std::vector<Complex> amps(dim, Complex{0.0, 0.0});
    amps[index] = Complex{1.0, 0.0};
    return StateVector(std::move(layout), std::move(amps));
}

StateVector StateVector::from_amplitudes(RegisterLayout layout,
                                         std::vector<Complex> amplitudes,
                                         std::size_t cap) {
    check_capacity(layout.num_qubits(), cap);
    if (amplitudes.size() != (std::uint64_t{1} << layout.num_qubits())) {
        throw ValidationError("amplitude count must be 2^num_qubits");
    }
    StateVector s(std::move(layout), std::move(amplitudes));
    if (!(std::abs(s.norm_squared() - 1.0) <= kNormTolerance)) {
        throw ValidationError("amplitudes are not normalized");
    }
    return s;
}

Complex StateVector::amplitude(std::uint64_t index) const {
    if (index >= amplitudes_.size()) {
        throw ValidationError("basis index out of range");
    }
    return amplitudes_[index];
}

double StateVector::norm_squared() const noexcept {
    double acc = 0.0;
    for (const auto &a : amplitudes_) {
        acc += std::norm(a);
    }
    return acc;
}

void StateVector::check_qubit(std::size_t qubit) const {
    if (qubit >= num_qubits()) {
        throw ValidationError("qubit " + std::to_string(qubit) +
                              " outside a " + std::to_string(num_qubits()) +
                              "-qubit state");
    }
}

void StateVector::apply(const Gate &gate, std::size_t target,
                        std::string_view label) {
    apply_controlled(gate, {}, target, label);
}

void StateVector::apply_controlled(const Gate &gate,
                                   std::span<const Control> controls,
                                   std::size_t target, std::string_view label) {
    check_qubit(target);
    const std::size_t q = num_qubits();
    std::uint64_t control_mask = 0;
    std::uint64_t control_value = 0;
    for (const auto &c : controls) {
        check_qubit(c.qubit);
        const std::uint64_t bit = qubit_bit(q, c.qubit);
        if (c.qubit == target) {
            throw ValidationError("control and target qubits overlap");
        }
        if ((control_mask & bit) != 0) {
            throw ValidationError("duplicate control qubit");
        }
        control_mask |= bit;
        if (c.value) {
            control_value |= bit;
        }
    }

    const std::uint64_t target_bit = qubit_bit(q, target);
    const auto &m = gate.matrix();
    const std::uint64_t dim = dimension();
    for (std::uint64_t i0 = 0; i0 < dim; ++i0) {
        if ((i0 & target_bit) != 0 || (i0 & control_mask) != control_value) {
            continue;
        }
        const std::uint64_t i1 = i0 | target_bit;
        const Complex a0 = amplitudes_[i0];
        const Complex a1 = amplitudes_[i1];
        amplitudes_[i0] = m[0] * a0 + m[1] * a1;
        amplitudes_[i1] = m[2] * a0 + m[3] * a1;
    }

    if (label.empty()) {
        const std::string derived =
            controls.empty() ? gate.name() : "C" + gate.name();
        gates_.add(derived, controls.size());
    } else {
        gates_.add(label, controls.size());
    }
}

void StateVector::flip_sign_if(
    const std::function<bool(std::uint64_t)> &marked, std::string_view label) {
    const std::uint64_t dim = dimension();
    for (std::uint64_t i = 0; i < dim; ++i) {
        if (marked(i)) {
            amplitudes_[i] = -amplitudes_[i];
        }
    }
    gates_.add_oracle(label);
}

void StateVector::apply_global_phase(Complex phase) {
    if (!(std::abs(std::abs(phase) - 1.0) <= kUnitarityTolerance)) {
        throw ValidationError("global phase must have unit modulus");
    }
    for (auto &a : amplitudes_) {
        a *= phase;
    }
}

double StateVector::project(std::span<const std::size_t> qubits,
                            std::uint64_t outcome) {
    for (auto qb : qubits) {
        check_qubit(qb);
    }
    if (qubits.size() < 64 && outcome >= (std::uint64_t{1} << qubits.size())) {
        throw ValidationError("measurement outcome out of range");
    }
    const std::size_t q = num_qubits();
    double prob = 0.0;
    for (std::uint64_t i = 0; i < dimension(); ++i) {
        if (extract_bits(i, q, qubits) == outcome) {
            prob += std::norm(amplitudes_[i]);
        }
    }
    // Anything this small is rounding noise on an impossible outcome.
    if (!(prob > 1e-24)) {
        throw ProjectionError("cannot project onto a zero-probability outcome");
    }
    const double scale = 1.0 / std::sqrt(prob);
    for (std::uint64_t i = 0; i < dimension(); ++i) {
        if (extract_bits(i, q, qubits) == outcome) {
            amplitudes_[i] *= scale;
        } else {
            amplitudes_[i] = Complex{0.0, 0.0};
        }
    }
    return prob;
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.dimension() != b.dimension()) {
        throw ValidationError("inner product of states with different "
                              "dimensions");
    }
    Complex acc{0.0, 0.0};
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    RegisterLayout layout = a.layout().concat(b.layout());
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    std::vector<Complex> amps(x.size() * y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
            amps[i * y.size() + j] = x[i] * y[j];
        }
    }
    return StateVector::from_amplitudes(std::move(layout), std::move(amps));
}

std::uint64_t extract_bits(std::uint64_t index, std::size_t num_qubits,
                           std::span<const std::size_t> qubits) {
    std::uint64_t out = 0;
    for (auto qb : qubits) {
        out = (out << 1) | ((index >> (num_qubits - 1 - qb)) & 1U);
    }
    return out;
}

} // namespace qam::qsim
