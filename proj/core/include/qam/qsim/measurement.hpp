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

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qam/qsim/rng.hpp"
#include "qam/qsim/state_vector.hpp"

namespace qam::qsim {

struct MeasurementResult {
    /// Outcome value, big-endian over the measured qubits.
    std::uint64_t outcome = 0;
    std::vector<std::uint8_t> bits;
    /// Marginal probability of the outcome before collapse.
    double probability = 0.0;
};

/**
 * Exact marginal distribution of `qubits`: entry k is the probability of
 * outcome k (big-endian over the given qubit order). Sums to 1 within 1e-10
 * for a normalized state.
 */
[[nodiscard]] std::vector<double>
marginal_distribution(const StateVector &state,
                      std::span<const std::size_t> qubits);

/// Samples `qubits` from their marginal and collapses `state` in place.
MeasurementResult measure(StateVector &state,
                          std::span<const std::size_t> qubits, Rng &rng);

/// Convenience overload measuring a whole named register.
MeasurementResult measure(StateVector &state, std::string_view register_name,
                          Rng &rng);

/**
 * Forced-outcome variant: projects onto `outcome` and renormalizes.
 * Returns the outcome's probability; throws ProjectionError when it is 0.
 */
double project_onto(StateVector &state, std::span<const std::size_t> qubits,
                    std::uint64_t outcome);

/**
 * Conditions on `register_name` reading `outcome` and returns the normalized
 * state of the remaining registers (layout order preserved). The
 * probability of the outcome is written to `probability` when non-null.
 */
[[nodiscard]] StateVector condition_and_drop(const StateVector &state,
                                             std::string_view register_name,
                                             std::uint64_t outcome,
                                             double *probability = nullptr);

} // namespace qam::qsim
