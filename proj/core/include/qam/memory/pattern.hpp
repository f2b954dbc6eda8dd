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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qam::memory {

/// Fixed-width binary string; bit 0 is the leftmost character.
class Pattern {
  public:
    Pattern() = default;
    explicit Pattern(std::vector<std::uint8_t> bits);

    /// Parses a string of '0'/'1' characters.
    static Pattern parse(std::string_view text);
    /// Big-endian decoding of `index` into `width` bits.
    static Pattern from_index(std::uint64_t index, std::size_t width);

    [[nodiscard]] std::size_t width() const noexcept { return bits_.size(); }
    [[nodiscard]] bool operator[](std::size_t j) const { return bits_[j] != 0; }
    [[nodiscard]] std::span<const std::uint8_t> bits() const noexcept {
        return bits_;
    }
    /// Basis index of the pattern as a register of width() qubits (<= 63).
    [[nodiscard]] std::uint64_t to_index() const;
    [[nodiscard]] std::string to_string() const;

    auto operator<=>(const Pattern &) const = default;

  private:
    std::vector<std::uint8_t> bits_;
};

} // namespace qam::memory
