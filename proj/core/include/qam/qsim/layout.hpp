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
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qam::qsim {

/// A named, contiguous range of qubits.
struct Register {
    std::string name;
    std::size_t offset = 0;
    std::size_t width = 0;

    bool operator==(const Register &) const = default;
};

/**
 * Ordered list of named registers covering qubits 0..q-1 without gaps.
 *
 * Basis-index convention: qubit 0 is the most significant bit, so the index
 * of a bit assignment is sum_j bit_j * 2^(q-1-j). Bit j of a register string
 * is qubit `offset + j`, which makes pattern strings read exactly like basis
 * labels.
 */
class RegisterLayout {
  public:
    RegisterLayout() = default;
    RegisterLayout(
        std::initializer_list<std::pair<std::string, std::size_t>> registers);

    /// Appends a register after the existing ones.
    RegisterLayout &add(std::string name, std::size_t width);

    [[nodiscard]] std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    [[nodiscard]] std::span<const Register> registers() const noexcept {
        return registers_;
    }
    [[nodiscard]] bool contains(std::string_view name) const noexcept;
    [[nodiscard]] const Register &at(std::string_view name) const;

    /// Global qubit indices of `name`, in register bit order.
    [[nodiscard]] std::vector<std::size_t> qubits(std::string_view name) const;
    [[nodiscard]] std::size_t qubit(std::string_view name, std::size_t j) const;

    /// Layout with `other`'s registers appended after this one's.
    [[nodiscard]] RegisterLayout concat(const RegisterLayout &other) const;

    bool operator==(const RegisterLayout &) const = default;

  private:
    std::vector<Register> registers_;
    std::size_t num_qubits_ = 0;
};

/// Bit of qubit `qubit` inside a basis index over `num_qubits` qubits.
[[nodiscard]] constexpr std::uint64_t qubit_bit(std::size_t num_qubits,
                                                std::size_t qubit) noexcept {
    return std::uint64_t{1} << (num_qubits - 1 - qubit);
}

} // namespace qam::qsim
