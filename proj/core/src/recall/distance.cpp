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
#include "qam/recall/distance.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qam/errors.hpp"

namespace qam::recall {

KnownMask::KnownMask(std::vector<std::size_t> indices, std::size_t n)
    : indices_(std::move(indices)), n_(n) {
    if (indices_.empty()) {
        throw ValidationError("known-qubit mask must not be empty");
    }
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
        throw ValidationError("known-qubit mask lists an index twice");
    }
    if (indices_.back() >= n_) {
        throw ValidationError("mask index " + std::to_string(indices_.back()) +
                              " out of range for width " + std::to_string(n_));
    }
}

KnownMask KnownMask::parse(std::string_view text, std::size_t n) {
    std::vector<std::size_t> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        while (!item.empty() && item.front() == ' ') {
            item.remove_prefix(1);
        }
        while (!item.empty() && item.back() == ' ') {
            item.remove_suffix(1);
        }
        std::size_t value = 0;
        const auto [ptr, ec] =
            std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} ||
            ptr != item.data() + item.size()) {
            throw ValidationError("bad mask entry '" + std::string(item) + "'");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return KnownMask(std::move(out), n);
}

bool KnownMask::contains(std::size_t j) const {
    return std::binary_search(indices_.begin(), indices_.end(), j);
}

std::size_t hamming_distance(const Pattern &a, const Pattern &b,
                             const std::optional<KnownMask> &mask) {
    if (a.width() != b.width()) {
        throw ValidationError("pattern widths differ: " +
                              std::to_string(a.width()) + " vs " +
                              std::to_string(b.width()));
    }
    std::size_t d = 0;
    if (mask) {
        if (mask->width() != a.width()) {
            throw ValidationError("mask width does not match the patterns");
        }
        for (auto j : mask->indices()) {
            d += a[j] != b[j];
        }
        return d;
    }
    for (std::size_t j = 0; j < a.width(); ++j) {
        d += a[j] != b[j];
    }
    return d;
}

std::vector<std::size_t> distances(const MemoryModel &model,
                                   const Pattern &input,
                                   const std::optional<KnownMask> &mask) {
    std::vector<std::size_t> out;
    out.reserve(model.size());
    for (const auto &p : model.patterns()) {
        out.push_back(hamming_distance(input, p, mask));
    }
    return out;
}

std::vector<double> energy_levels(const Pattern &input,
                                  const MemoryModel &model,
                                  const std::optional<KnownMask> &mask) {
    const std::size_t n = model.width();
    std::vector<double> out;
    for (auto d : distances(model, input, mask)) {
        if (d == n) {
            out.push_back(std::numeric_limits<double>::infinity());
        } else {
            out.push_back(-2.0 * std::log(std::cos(std::numbers::pi *
                                                   static_cast<double>(d) /
                                                   (2.0 * static_cast<double>(n)))));
        }
    }
    return out;
}

Pattern limiting_output(const MemoryModel &model, const Pattern &input,
                        const std::optional<KnownMask> &mask) {
    const auto d = distances(model, input, mask);
    const auto best = std::min_element(d.begin(), d.end());
    if (std::count(d.begin(), d.end(), *best) > 1) {
        throw AmbiguousMinimumError("several stored patterns share the minimal "
                                    "distance " + std::to_string(*best));
    }
    return model.pattern(static_cast<std::size_t>(best - d.begin()));
}

} // namespace qam::recall
