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

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>

namespace qam::qsim {

/// Gate class by number of control qubits.
enum class GateArity : std::uint8_t {
    kSingle = 0,          // 1-qubit
    kControlled = 1,      // 2-qubit (XOR, CS, CU, CU^-2)
    kToffoli = 2,         // 2XOR
    kMultiControlled = 3, // nXOR, n >= 3
};

[[nodiscard]] constexpr GateArity arity_for(std::size_t num_controls) noexcept {
    switch (num_controls) {
    case 0:
        return GateArity::kSingle;
    case 1:
        return GateArity::kControlled;
    case 2:
        return GateArity::kToffoli;
    default:
        return GateArity::kMultiControlled;
    }
}

/**
 * Running tally of applied elementary gates.
 *
 * Invariant: `total` equals the sum of `by_arity`. Gates are also tallied by
 * label (H, U, CU-2, CS, XOR, 2XOR, nXOR, ...). Oracle reflections (the S and
 * S0 sign flips of amplitude amplification) are not elementary gates and go
 * to `oracle_calls` only.
 */
struct GateRecord {
    std::array<std::uint64_t, 4> by_arity{};
    std::map<std::string, std::uint64_t, std::less<>> by_name;
    std::map<std::string, std::uint64_t, std::less<>> oracle_calls;
    std::uint64_t total = 0;

    void add(std::string_view label, std::size_t num_controls);
    void add_oracle(std::string_view label);

    [[nodiscard]] std::uint64_t count(GateArity arity) const noexcept {
        return by_arity[static_cast<std::size_t>(arity)];
    }
    [[nodiscard]] std::uint64_t count(std::string_view label) const;
    [[nodiscard]] std::uint64_t oracle_count(std::string_view label) const;

    GateRecord &operator+=(const GateRecord &other);
};

} // namespace qam::qsim
