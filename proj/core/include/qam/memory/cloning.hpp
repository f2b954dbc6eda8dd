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

#include "qam/memory/memory_model.hpp"

namespace qam::memory {

/// <d|m> for distinct patterns: 0 for even p, 1/p for odd p.
[[nodiscard]] double dual_overlap(const MemoryModel &model);

/// Upper bound 2 / (1 + <d|m>) on p_m + p_d for a probabilistic cloner of
/// the memory and dual states.
[[nodiscard]] double cloning_bound(const MemoryModel &model);

} // namespace qam::memory
