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
#include "qam/recall/recall.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qam/errors.hpp"
#include "qam/memory/storage.hpp"
#include "qam/qsim/measurement.hpp"
#include "qam/recall/distribution.hpp"

namespace qam::recall {

using qsim::RegisterLayout;
using qsim::StateVector;

void validate(const MemoryModel &model, const RetrievalParams &params) {
    if (params.input.width() != model.width()) {
        throw ValidationError("input width " +
                              std::to_string(params.input.width()) +
                              " does not match pattern width " +
                              std::to_string(model.width()));
    }
    if (params.b == 0) {
        throw ValidationError("b must be at least 1");
    }
    if (params.mode == RecallMode::kMeasured && params.threshold == 0) {
        throw ValidationError("measured recall needs T >= 1");
    }
    if (params.known_mask && params.known_mask->width() != model.width()) {
        throw ValidationError("mask width does not match pattern width");
    }
    if (params.mode == RecallMode::kAmplified &&
        params.encoding != InputEncoding::kOperator) {
        throw ValidationError("amplified recall supports the operator input "
                              "encoding only");
    }
}

Pattern fill_unknown_bits(const Pattern &input, const KnownMask &mask,
                          qsim::Rng &rng) {
    std::vector<std::uint8_t> bits(input.bits().begin(), input.bits().end());
    for (std::size_t j = 0; j < bits.size(); ++j) {
        if (!mask.contains(j)) {
            bits[j] = static_cast<std::uint8_t>(rng.next() >> 63);
        }
    }
    return Pattern(std::move(bits));
}

namespace {

/// Input and mask actually fed to the circuit.
struct Resolved {
    Pattern input;
    std::optional<KnownMask> mask;
};

Resolved resolve_input(const RetrievalParams &params, qsim::Rng &rng) {
    if (!params.known_mask) {
        return {params.input, std::nullopt};
    }
    if (params.mask_policy == MaskPolicy::kRandomFill) {
        return {fill_unknown_bits(params.input, *params.known_mask, rng),
                std::nullopt};
    }
    return {params.input, params.known_mask};
}

std::vector<double> analytic_table(const MemoryModel &model,
                                   const Pattern &input, std::size_t b,
                                   const std::optional<KnownMask> &mask) {
    try {
        return retrieval_distribution(model, input, static_cast<double>(b),
                                      mask)
            .probabilities;
    } catch (const DegenerateDistributionError &) {
        return {};
    }
}

bool all_zero_controls(std::uint64_t index, std::size_t num_qubits,
                       std::span<const std::size_t> controls) {
    return qsim::extract_bits(index, num_qubits, controls) == 0;
}

} // namespace

MeasuredRecall::MeasuredRecall(const MemoryModel &model, RetrievalParams params)
    : model_(model), params_(std::move(params)) {
    params_.mode = RecallMode::kMeasured;
    validate(model_, params_);
}

void MeasuredRecall::prepare(const Pattern &input) {
    if (cached_input_ && *cached_input_ == input) {
        return;
    }
    const std::optional<KnownMask> mask =
        params_.mask_policy == MaskPolicy::kMasked ? params_.known_mask
                                                   : std::nullopt;
    p_rec_ = recognition_probability(model_, input,
                                     static_cast<double>(params_.b), mask);
    distribution_ = analytic_table(model_, input, params_.b, mask);
    final_state_.reset();
    if (p_rec_ > 0.0) {
        CircuitOptions options{params_.encoding, mask};
        final_state_ = build_final_state(model_, input, params_.b, options);
        gates_per_repetition_ = final_state_->gates().total;
    }
    cached_input_ = input;
}

RetrievalOutcome MeasuredRecall::run(qsim::Rng &rng) {
    const Resolved r = resolve_input(params_, rng);
    prepare(r.input);

    RetrievalOutcome out;
    out.effective_input = r.input;
    out.p_rec = p_rec_;
    out.distribution = distribution_;
    out.success_probability_analytic =
        1.0 - std::pow(1.0 - p_rec_, static_cast<double>(params_.threshold));
    if (!final_state_) {
        // Z = 0: the all-zero control outcome has probability 0.
        return out;
    }
    const std::size_t n = model_.width();
    for (std::size_t rep = 1; rep <= params_.threshold; ++rep) {
        StateVector psi = *final_state_;
        out.repetitions_used = rep;
        out.gate_count += gates_per_repetition_;
        const auto controls = qsim::measure(psi, "c", rng);
        if (controls.outcome != 0) {
            continue;
        }
        const auto memory = qsim::measure(psi, "m", rng);
        out.recognized = true;
        out.output = Pattern::from_index(memory.outcome, n);
        break;
    }
    return out;
}

AmplifiedSearch::AmplifiedSearch(const MemoryModel &model, const Pattern &input,
                                 std::size_t b, std::optional<KnownMask> mask)
    : layout_{{"m", model.width()}, {"c", b}, {"u", 2}},
      state_(StateVector::zero(layout_)) {
    if (input.width() != model.width()) {
        throw ValidationError("input width does not match pattern width");
    }
    p_rec_ = recognition_probability(model, input, static_cast<double>(b), mask);
    memory_op_ = memory::memory_operator(model, layout_);
    rotation_ = retrieval_rotation(
        input, layout_, CircuitOptions{InputEncoding::kOperator, mask});
    memory_inv_ = memory_op_.adjoint();
    rotation_inv_ = rotation_.adjoint();
    controls_ = layout_.qubits("c");

    memory_op_.apply(state_);
    rotation_.apply(state_);
}

void AmplifiedSearch::iterate() {
    const std::size_t q = layout_.num_qubits();
    const auto controls = controls_;
    state_.flip_sign_if(
        [&](std::uint64_t index) {
            return all_zero_controls(index, q, controls);
        },
        "S");
    rotation_inv_.apply(state_);
    memory_inv_.apply(state_);
    state_.flip_sign_if([](std::uint64_t index) { return index == 0; }, "S0");
    memory_op_.apply(state_);
    rotation_.apply(state_);
    state_.apply_global_phase(-1.0);
    ++iterations_;
}

double AmplifiedSearch::success_probability() const {
    return qsim::marginal_distribution(state_, controls_)[0];
}

double amplified_success_probability(double p_rec, std::size_t k) {
    const double theta = std::asin(std::sqrt(std::clamp(p_rec, 0.0, 1.0)));
    const double s = std::sin((2.0 * static_cast<double>(k) + 1.0) * theta);
    return s * s;
}

RetrievalOutcome recall_measured(const MemoryModel &model,
                                 const RetrievalParams &params, qsim::Rng &rng) {
    MeasuredRecall session(model, params);
    return session.run(rng);
}

RetrievalOutcome recall_amplified(const MemoryModel &model,
                                  const RetrievalParams &params,
                                  qsim::Rng &rng) {
    validate(model, params);
    const Resolved r = resolve_input(params, rng);

    RetrievalOutcome out;
    out.effective_input = r.input;
    out.p_rec = recognition_probability(model, r.input,
                                        static_cast<double>(params.b), r.mask);
    out.distribution = analytic_table(model, r.input, params.b, r.mask);
    out.success_probability_analytic =
        amplified_success_probability(out.p_rec, params.threshold);
    if (out.p_rec == 0.0) {
        return out;
    }

    AmplifiedSearch search(model, r.input, params.b, r.mask);
    for (std::size_t k = 0; k < params.threshold; ++k) {
        search.iterate();
    }
    out.repetitions_used = params.threshold;
    out.gate_count = search.state().gates().total;

    StateVector &psi = search.state();
    const auto controls = qsim::measure(psi, "c", rng);
    if (controls.outcome == 0) {
        const auto memory = qsim::measure(psi, "m", rng);
        out.recognized = true;
        out.output = Pattern::from_index(memory.outcome, model.width());
    }
    return out;
}

RetrievalOutcome recall(const MemoryModel &model, const RetrievalParams &params,
                        qsim::Rng &rng) {
    return params.mode == RecallMode::kAmplified
               ? recall_amplified(model, params, rng)
               : recall_measured(model, params, rng);
}

} // namespace qam::recall
