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
#include "qam/memory/memory_model.hpp"

#include <fstream>
#include <set>
#include <string>
#include <utility>

#include "qam/errors.hpp"

namespace qam::memory {

MemoryModel::MemoryModel(std::vector<Pattern> patterns)
    : patterns_(std::move(patterns)) {
    if (patterns_.empty()) {
        throw ValidationError("a memory needs at least one pattern");
    }
    width_ = patterns_.front().width();
    std::set<Pattern> seen;
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
        const auto &p = patterns_[i];
        if (p.width() != width_) {
            throw ValidationError("pattern " + std::to_string(i + 1) +
                                  " has width " + std::to_string(p.width()) +
                                  ", expected " + std::to_string(width_));
        }
        if (!seen.insert(p).second) {
            throw ValidationError("duplicate pattern " + p.to_string() +
                                  " (entry " + std::to_string(i + 1) + ")");
        }
    }
}

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n';
    };
    while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
    }
    while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

MemoryModel parse_patterns(std::istream &in) {
    std::vector<Pattern> patterns;
    std::set<Pattern> seen;
    std::string line;
    std::size_t line_no = 0;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) {
            view.remove_prefix(3);
        }
        if (auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) {
            continue;
        }
        const std::string where = "line " + std::to_string(line_no) + ": ";
        Pattern p;
        try {
            p = Pattern::parse(view);
        } catch (const ValidationError &e) {
            throw ValidationError(where + e.what());
        }
        if (width == 0) {
            width = p.width();
        } else if (p.width() != width) {
            throw ValidationError(where + "pattern width " +
                                  std::to_string(p.width()) +
                                  " differs from " + std::to_string(width));
        }
        if (!seen.insert(p).second) {
            throw ValidationError(where + "duplicate pattern " + p.to_string());
        }
        patterns.push_back(std::move(p));
    }
    if (patterns.empty()) {
        throw ValidationError("pattern file holds no patterns");
    }
    return MemoryModel(std::move(patterns));
}

MemoryModel read_pattern_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open pattern file " + path.string());
    }
    return parse_patterns(in);
}

} // namespace qam::memory
