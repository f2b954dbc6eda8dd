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

#include <string>

#include "qam/recall/recall.hpp"

namespace qam::recall {

/**
 * {"recognized": bool, "output": "0101" | null, "repetitions_used": int,
 *  "gate_count": int, "p_rec": real,
 *  "distribution": [{"pattern": "0101", "prob": real}, ...]}
 * with reals printed to 17 significant digits.
 */
[[nodiscard]] std::string to_json(const RetrievalOutcome &outcome,
                                  const MemoryModel &model);

} // namespace qam::recall
