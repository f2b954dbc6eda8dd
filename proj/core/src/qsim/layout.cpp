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
#include "qam/qsim/layout.hpp"

#include <algorithm>

#include "qam/errors.hpp"

namespace qam::qsim {

RegisterLayout::RegisterLayout(
    std::initializer_list<std::pair<std::string, std::size_t>> registers) {
    for (const auto &[name, width] : registers) {
        add(name, width);
    }
}

RegisterLayout &RegisterLayout::add(std::string name, std::size_t width) {
    if (name.empty()) {
        throw ValidationError("register name must not be empty");
    }
    if (width == 0) {
        throw ValidationError("register '" + name + "' has zero width");
    }
    if (contains(name)) {
        throw ValidationError("duplicate register name '" + name + "'");
    }
    registers_.push_back(Register{std::move(name), num_qubits_, width});
    num_qubits_ += width;
    return *this;
}

bool RegisterLayout::contains(std::string_view name) const noexcept {
    return std::any_of(registers_.begin(), registers_.end(),
                       [&](const Register &r) { return r.name == name; });
}

const Register &RegisterLayout::at(std::string_view name) const {
    for (const auto &r : registers_) {
        if (r.name == name) {
            return r;
        }
    }
    throw ValidationError("layout has no register named '" +
                          std::string(name) + "'");
}

std::vector<std::size_t> RegisterLayout::qubits(std::string_view name) const {
    const auto &r = at(name);
    std::vector<std::size_t> out(r.width);
    for (std::size_t j = 0; j < r.width; ++j) {
        out[j] = r.offset + j;
    }
    return out;
}

std::size_t RegisterLayout::qubit(std::string_view name, std::size_t j) const {
    const auto &r = at(name);
    if (j >= r.width) {
        throw ValidationError("qubit " + std::to_string(j) +
                              " outside register '" + r.name + "'");
    }
    return r.offset + j;
}

RegisterLayout RegisterLayout::concat(const RegisterLayout &other) const {
    RegisterLayout out = *this;
    for (const auto &r : other.registers_) {
        out.add(r.name, r.width);
    }
    return out;
}

} // namespace qam::qsim
