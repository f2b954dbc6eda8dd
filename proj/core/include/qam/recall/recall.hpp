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
#include <cstdint>
#include <optional>
#include <vector>

#include "qam/qsim/rng.hpp"
#include "qam/qsim/state_vector.hpp"
#include "qam/recall/distance.hpp"
#include "qam/recall/retrieval_circuit.hpp"

namespace qam::recall {

enum class RecallMode {
    /// Repeat build-and-measure until the controls read all zeros, at most T
    /// times.
    kMeasured,
    /// T rounds of amplitude amplification, then a single measurement.
    kAmplified,
};

enum class MaskPolicy {
    /// Distances and phases use known positions only.
    kMasked,
    /// Unknown positions are filled with random bits and the full input is
    /// used.
    kRandomFill,
};

struct RetrievalParams {
    Pattern input;
    std::size_t b = 1;
    /// T: repetition threshold (measured) or iteration count (amplified,
    /// where 0 is allowed).
    std::size_t threshold = 1;
    std::optional<KnownMask> known_mask;
    RecallMode mode = RecallMode::kMeasured;
    MaskPolicy mask_policy = MaskPolicy::kMasked;
    InputEncoding encoding = InputEncoding::kOperator;
};

/// Throws ValidationError when `params` do not fit `model`.
void validate(const MemoryModel &model, const RetrievalParams &params);

struct RetrievalOutcome {
    bool recognized = false;
    /// Present iff recognized.
    std::optional<Pattern> output;
    std::uint64_t repetitions_used = 0;
    /// Elementary gates simulated for this recall (oracle calls excluded).
    std::uint64_t gate_count = 0;
    /// Probability of recognition within the threshold: 1 - (1 - P_rec)^T
    /// when measured, sin^2((2T+1) theta) when amplified.
    double success_probability_analytic = 0.0;
    double p_rec = 0.0;
    /// Analytic P_b(p^k) in storage order; empty when Z = 0.
    std::vector<double> distribution;
    /// Input actually used (differs from the request under kRandomFill).
    Pattern effective_input;
};

/// Replaces bits outside `mask` with uniform random bits.
[[nodiscard]] Pattern fill_unknown_bits(const Pattern &input,
                                        const KnownMask &mask, qsim::Rng &rng);

/**
 * Measured retrieval with the final state cached between repetitions and
 * runs. Each repetition measures the control register of a fresh copy of
 * |psi_fin>; on all zeros the memory register is measured as the output.
 * Reusable for many seeded trials on one instance.
 */
class MeasuredRecall {
  public:
    MeasuredRecall(const MemoryModel &model, RetrievalParams params);

    RetrievalOutcome run(qsim::Rng &rng);

  private:
    void prepare(const Pattern &input);

    const MemoryModel &model_;
    RetrievalParams params_;
    std::optional<Pattern> cached_input_;
    std::optional<qsim::StateVector> final_state_;
    std::uint64_t gates_per_repetition_ = 0;
    double p_rec_ = 0.0;
    std::vector<double> distribution_;
};

/**
 * Amplitude amplification over [m:n, c:b, u:2]. Starts from
 * R(i) M |0...0>, and iterate() applies
 *
 *   Q = -R(i) M S0 M^-1 R(i)^-1 S
 *
 * where S flips the sign of all-controls-zero states and S0 that of the
 * all-zero state. Only the operator encoding is supported.
 */
class AmplifiedSearch {
  public:
    AmplifiedSearch(const MemoryModel &model, const Pattern &input,
                    std::size_t b, std::optional<KnownMask> mask = std::nullopt);

    void iterate();

    [[nodiscard]] std::size_t iterations() const noexcept { return iterations_; }
    [[nodiscard]] const qsim::StateVector &state() const noexcept {
        return state_;
    }
    qsim::StateVector &state() noexcept { return state_; }
    /// Simulated probability of reading all zeros on the control register.
    [[nodiscard]] double success_probability() const;
    [[nodiscard]] double p_rec() const noexcept { return p_rec_; }
    [[nodiscard]] const qsim::RegisterLayout &layout() const noexcept {
        return layout_;
    }

  private:
    qsim::RegisterLayout layout_;
    qsim::GateSequence memory_op_;
    qsim::GateSequence rotation_;
    qsim::GateSequence memory_inv_;
    qsim::GateSequence rotation_inv_;
    std::vector<std::size_t> controls_;
    qsim::StateVector state_;
    std::size_t iterations_ = 0;
    double p_rec_ = 0.0;
};

/// sin^2((2k+1) arcsin sqrt(p_rec)).
[[nodiscard]] double amplified_success_probability(double p_rec, std::size_t k);

[[nodiscard]] RetrievalOutcome recall_measured(const MemoryModel &model,
                                               const RetrievalParams &params,
                                               qsim::Rng &rng);

[[nodiscard]] RetrievalOutcome recall_amplified(const MemoryModel &model,
                                                const RetrievalParams &params,
                                                qsim::Rng &rng);

/// Dispatches on params.mode.
[[nodiscard]] RetrievalOutcome recall(const MemoryModel &model,
                                      const RetrievalParams &params,
                                      qsim::Rng &rng);

} // namespace qam::recall
