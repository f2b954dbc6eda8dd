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
#include "qam/qsim/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qam/errors.hpp"

namespace qam::qsim {

std::string format_real(double value) {
    if (std::isinf(value)) {
        return value > 0 ? "Infinity" : "-Infinity";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string to_json(const StateVector &state) {
    std::ostringstream os;
    os << "{\"num_qubits\": " << state.num_qubits() << ", \"layout\": [";
    bool first = true;
    for (const auto &r : state.layout().registers()) {
        if (!first) {
            os << ", ";
        }
        first = false;
        os << "{\"name\": " << nlohmann::json(r.name).dump()
           << ", \"offset\": " << r.offset << ", \"width\": " << r.width << "}";
    }
    os << "], \"amplitudes\": [";
    first = true;
    for (const auto &a : state.amplitudes()) {
        if (!first) {
            os << ", ";
        }
        first = false;
        os << '[' << format_real(a.real()) << ", " << format_real(a.imag())
           << ']';
    }
    os << "]}";
    return os.str();
}

StateVector state_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("state JSON: ") + e.what());
    }
    try {
        const auto num_qubits = doc.at("num_qubits").get<std::size_t>();
        RegisterLayout layout;
        for (const auto &r : doc.at("layout")) {
            const auto name = r.at("name").get<std::string>();
            const auto offset = r.at("offset").get<std::size_t>();
            if (offset != layout.num_qubits()) {
                throw ValidationError("state JSON: register '" + name +
                                      "' is not contiguous");
            }
            layout.add(name, r.at("width").get<std::size_t>());
        }
        if (layout.num_qubits() != num_qubits) {
            throw ValidationError("state JSON: layout does not cover "
                                  "num_qubits");
        }
        std::vector<Complex> amps;
        const auto &arr = doc.at("amplitudes");
        amps.reserve(arr.size());
        for (const auto &pair : arr) {
            if (!pair.is_array() || pair.size() != 2) {
                throw ValidationError("state JSON: amplitudes must be "
                                      "[re, im] pairs");
            }
            amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
        return StateVector::from_amplitudes(std::move(layout), std::move(amps),
                                            num_qubits);
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("state JSON: ") + e.what());
    }
}

} // namespace qam::qsim
