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
#include <optional>
#include <vector>

#include "qam/recall/distance.hpp"

namespace qam::recall {

/// cos^(2b)(pi d / 2n); exactly 1 at d = 0 and exactly 0 at d = n (b > 0).
[[nodiscard]] double recognition_weight(std::size_t d, std::size_t n, double b);

/// Probability that all b control qubits read 0:
/// P_rec = 1/p sum_k cos^(2b)(pi d_k / 2n). Zero is a valid answer.
[[nodiscard]] double
recognition_probability(const MemoryModel &model, const Pattern &input,
                        double b,
                        const std::optional<KnownMask> &mask = std::nullopt);

struct RetrievalDistribution {
    double p_rec = 0.0;
    /// Z = p * P_rec.
    double partition = 0.0;
    /// P_b(p^k) = cos^(2b)(pi d_k / 2n) / Z, in storage order.
    std::vector<double> probabilities;
    std::vector<std::size_t> distances;
};

/// Output distribution conditioned on recognition. Throws
/// DegenerateDistributionError when Z = 0 (every pattern at distance n).
[[nodiscard]] RetrievalDistribution
retrieval_distribution(const MemoryModel &model, const Pattern &input, double b,
                       const std::optional<KnownMask> &mask = std::nullopt);

} // namespace qam::recall
