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
#include "qam/recall/distribution.hpp"

#include <cmath>
#include <numbers>

#include "qam/errors.hpp"

namespace qam::recall {

double recognition_weight(std::size_t d, std::size_t n, double b) {
    if (d > n) {
        throw ValidationError("distance exceeds the register width");
    }
    if (b < 0.0 || !std::isfinite(b)) {
        throw ValidationError("b must be a finite non-negative number");
    }
    if (b == 0.0 || d == 0) {
        return 1.0;
    }
    if (d == n) {
        return 0.0;
    }
    const double c = std::cos(std::numbers::pi * static_cast<double>(d) /
                              (2.0 * static_cast<double>(n)));
    return std::pow(c, 2.0 * b);
}

double recognition_probability(const MemoryModel &model, const Pattern &input,
                               double b, const std::optional<KnownMask> &mask) {
    double sum = 0.0;
    for (auto d : distances(model, input, mask)) {
        sum += recognition_weight(d, model.width(), b);
    }
    return sum / static_cast<double>(model.size());
}

RetrievalDistribution retrieval_distribution(const MemoryModel &model,
                                             const Pattern &input, double b,
                                             const std::optional<KnownMask> &mask) {
    RetrievalDistribution out;
    out.distances = distances(model, input, mask);
    out.probabilities.reserve(model.size());
    for (auto d : out.distances) {
        const double w = recognition_weight(d, model.width(), b);
        out.probabilities.push_back(w);
        out.partition += w;
    }
    if (out.partition == 0.0) {
        throw DegenerateDistributionError(
            "every stored pattern lies at maximal distance; Z = 0");
    }
    for (auto &w : out.probabilities) {
        w /= out.partition;
    }
    out.p_rec = out.partition / static_cast<double>(model.size());
    return out;
}

} // namespace qam::recall
