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
#include "qam/memory/cloning.hpp"

namespace qam::memory {

double dual_overlap(const MemoryModel &model) {
    // Distinct patterns are orthonormal basis states, so the overlap is the
    // alternating sign sum over 1/p.
    long long signed_count = 0;
    for (std::size_t i = 0; i < model.size(); ++i) {
        signed_count += (i % 2 == 0) ? 1 : -1;
    }
    return static_cast<double>(signed_count) / static_cast<double>(model.size());
}

double cloning_bound(const MemoryModel &model) {
    return 2.0 / (1.0 + dual_overlap(model));
}

} // namespace qam::memory
