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
#include "qam/qsim/gate_record.hpp"

namespace qam::qsim {

void GateRecord::add(std::string_view label, std::size_t num_controls) {
    ++by_arity[static_cast<std::size_t>(arity_for(num_controls))];
    auto it = by_name.find(label);
    if (it == by_name.end()) {
        by_name.emplace(std::string(label), 1);
    } else {
        ++it->second;
    }
    ++total;
}

void GateRecord::add_oracle(std::string_view label) {
    auto it = oracle_calls.find(label);
    if (it == oracle_calls.end()) {
        oracle_calls.emplace(std::string(label), 1);
    } else {
        ++it->second;
    }
}

std::uint64_t GateRecord::count(std::string_view label) const {
    auto it = by_name.find(label);
    return it == by_name.end() ? 0 : it->second;
}

std::uint64_t GateRecord::oracle_count(std::string_view label) const {
    auto it = oracle_calls.find(label);
    return it == oracle_calls.end() ? 0 : it->second;
}

GateRecord &GateRecord::operator+=(const GateRecord &other) {
    for (std::size_t k = 0; k < by_arity.size(); ++k) {
        by_arity[k] += other.by_arity[k];
    }
    for (const auto &[label, n] : other.by_name) {
        by_name[label] += n;
    }
    for (const auto &[label, n] : other.oracle_calls) {
        oracle_calls[label] += n;
    }
    total += other.total;
    return *this;
}

} // namespace qam::qsim
