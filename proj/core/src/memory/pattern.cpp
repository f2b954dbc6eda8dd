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
#include "qam/memory/pattern.hpp"

#include <utility>

#include "qam/errors.hpp"

namespace qam::memory {

Pattern::Pattern(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) {
        throw ValidationError("pattern width must be >= 1");
    }
    for (auto b : bits_) {
        if (b > 1) {
            throw ValidationError("pattern bits must be 0 or 1");
        }
    }
}

Pattern Pattern::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char ch : text) {
        if (ch != '0' && ch != '1') {
            throw ValidationError("pattern '" + std::string(text) +
                                  "' contains a character other than 0/1");
        }
        bits.push_back(ch == '1' ? 1 : 0);
    }
    return Pattern(std::move(bits));
}

Pattern Pattern::from_index(std::uint64_t index, std::size_t width) {
    if (width == 0 || width > 63) {
        throw ValidationError("pattern width must be in [1, 63] for index "
                              "conversion");
    }
    if (index >> width != 0) {
        throw ValidationError("index does not fit the pattern width");
    }
    std::vector<std::uint8_t> bits(width);
    for (std::size_t j = 0; j < width; ++j) {
        bits[j] = static_cast<std::uint8_t>((index >> (width - 1 - j)) & 1U);
    }
    return Pattern(std::move(bits));
}

std::uint64_t Pattern::to_index() const {
    if (width() > 63) {
        throw ValidationError("pattern too wide for a basis index");
    }
    std::uint64_t out = 0;
    for (auto b : bits_) {
        out = (out << 1) | b;
    }
    return out;
}

std::string Pattern::to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) {
        out.push_back(b != 0 ? '1' : '0');
    }
    return out;
}

} // namespace qam::memory
