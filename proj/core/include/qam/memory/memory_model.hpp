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
#include <filesystem>
#include <istream>
#include <span>
#include <vector>

#include "qam/memory/pattern.hpp"

namespace qam::memory {

/**
 * Ordered set of p distinct patterns of common width n, 1 <= p <= 2^n.
 * Duplicates are rejected: the storage normalization and the dual-state
 * overlaps both assume pairwise different patterns.
 */
class MemoryModel {
  public:
    explicit MemoryModel(std::vector<Pattern> patterns);

    [[nodiscard]] std::size_t width() const noexcept { return width_; }
    [[nodiscard]] std::size_t size() const noexcept { return patterns_.size(); }
    [[nodiscard]] const Pattern &pattern(std::size_t i) const {
        return patterns_.at(i);
    }
    [[nodiscard]] std::span<const Pattern> patterns() const noexcept {
        return patterns_;
    }

  private:
    std::vector<Pattern> patterns_;
    std::size_t width_ = 0;
};

/**
 * Pattern file: UTF-8 text, one pattern of '0'/'1' per line, all lines the
 * same length. Blank lines are skipped and '#' starts a comment that runs
 * to the end of the line. Ragged widths and duplicates raise
 * ValidationError with the offending line number.
 */
[[nodiscard]] MemoryModel parse_patterns(std::istream &in);
[[nodiscard]] MemoryModel read_pattern_file(const std::filesystem::path &path);

} // namespace qam::memory
