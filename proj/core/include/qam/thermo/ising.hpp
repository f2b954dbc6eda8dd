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
#include <span>

namespace qam::thermo {

/**
 * Small-distance energy as a spin system, s_i = +1/2 where input and pattern
 * differ and -1/2 where they agree:
 *
 *   E = pi^2/16 + pi^2/(4n^2) sum_{i,j} s_i s_j + pi^2/(4n) sum_i s_i
 *
 * with the double sum running over all pairs including i = j. Equals
 * (pi^2/4)(k/n)^2 for k up spins. Throws ValidationError unless every spin
 * is +-1/2 and there are exactly n of them.
 */
[[nodiscard]] double ising_energy(std::span<const double> spins, std::size_t n);

} // namespace qam::thermo
