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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qam/memory/memory_model.hpp"
#include "qam/memory/pattern.hpp"

namespace qam::recall {

using memory::MemoryModel;
using memory::Pattern;

/// Sorted, duplicate-free set of known input positions.
class KnownMask {
  public:
    /// Throws ValidationError on an empty set, duplicates or an index >= n.
    KnownMask(std::vector<std::size_t> indices, std::size_t n);

    /// Comma-separated list of indices, e.g. "0,1,5".
    static KnownMask parse(std::string_view text, std::size_t n);

    [[nodiscard]] std::span<const std::size_t> indices() const noexcept {
        return indices_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return indices_.size(); }
    [[nodiscard]] std::size_t width() const noexcept { return n_; }
    [[nodiscard]] bool contains(std::size_t j) const;

  private:
    std::vector<std::size_t> indices_;
    std::size_t n_ = 0;
};

/// Number of differing positions, restricted to `mask` when given.
[[nodiscard]] std::size_t
hamming_distance(const Pattern &a, const Pattern &b,
                 const std::optional<KnownMask> &mask = std::nullopt);

/// Distance from `input` to every stored pattern, in storage order.
[[nodiscard]] std::vector<std::size_t>
distances(const MemoryModel &model, const Pattern &input,
          const std::optional<KnownMask> &mask = std::nullopt);

/**
 * E^k = -2 ln cos(pi d_k / 2n) with n the full register width, also for
 * masked distances. d_k == n gives +infinity.
 */
[[nodiscard]] std::vector<double>
energy_levels(const Pattern &input, const MemoryModel &model,
              const std::optional<KnownMask> &mask = std::nullopt);

/// The stored pattern closest to `input`, i.e. the b -> infinity output.
/// Throws AmbiguousMinimumError when the minimum is shared.
[[nodiscard]] Pattern
limiting_output(const MemoryModel &model, const Pattern &input,
                const std::optional<KnownMask> &mask = std::nullopt);

} // namespace qam::recall
