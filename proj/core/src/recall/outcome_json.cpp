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
#include "qam/recall/outcome_json.hpp"

#include <sstream>

#include "qam/qsim/serialization.hpp"

namespace qam::recall {

std::string to_json(const RetrievalOutcome &outcome, const MemoryModel &model) {
    std::ostringstream os;
    os << "{\"recognized\": " << (outcome.recognized ? "true" : "false")
       << ", \"output\": ";
    if (outcome.output) {
        os << '"' << outcome.output->to_string() << '"';
    } else {
        os << "null";
    }
    os << ", \"repetitions_used\": " << outcome.repetitions_used
       << ", \"gate_count\": " << outcome.gate_count
       << ", \"p_rec\": " << qsim::format_real(outcome.p_rec)
       << ", \"distribution\": [";
    for (std::size_t k = 0; k < outcome.distribution.size(); ++k) {
        if (k > 0) {
            os << ", ";
        }
        os << "{\"pattern\": \"" << model.pattern(k).to_string()
           << "\", \"prob\": " << qsim::format_real(outcome.distribution[k])
           << '}';
    }
    os << "]}";
    return os.str();
}

} // namespace qam::recall
