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
#include "qam/qsim/measurement.hpp"

#include <cmath>
#include <string>

#include "qam/errors.hpp"

namespace qam::qsim {

namespace {

void check_qubits(const StateVector &state,
                  std::span<const std::size_t> qubits) {
    if (qubits.empty() || qubits.size() > 40) {
        throw ValidationError("measured range must hold 1..40 qubits");
    }
    std::uint64_t seen = 0;
    for (auto qb : qubits) {
        if (qb >= state.num_qubits()) {
            throw ValidationError("measured qubit outside the layout");
        }
        const std::uint64_t bit = qubit_bit(state.num_qubits(), qb);
        if ((seen & bit) != 0) {
            throw ValidationError("measured qubit listed twice");
        }
        seen |= bit;
    }
}

} // namespace

std::vector<double> marginal_distribution(const StateVector &state,
                                          std::span<const std::size_t> qubits) {
    check_qubits(state, qubits);
    std::vector<double> probs(std::uint64_t{1} << qubits.size(), 0.0);
    const auto amps = state.amplitudes();
    const std::size_t q = state.num_qubits();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        probs[extract_bits(i, q, qubits)] += std::norm(amps[i]);
    }
    return probs;
}

MeasurementResult measure(StateVector &state,
                          std::span<const std::size_t> qubits, Rng &rng) {
    const auto probs = marginal_distribution(state, qubits);
    double total = 0.0;
    for (double p : probs) {
        total += p;
    }
    const double u = rng.uniform() * total;
    double cumulative = 0.0;
    std::uint64_t chosen = probs.size();
    std::uint64_t last_nonzero = 0;
    for (std::uint64_t k = 0; k < probs.size(); ++k) {
        if (probs[k] <= 0.0) {
            continue;
        }
        last_nonzero = k;
        cumulative += probs[k];
        if (u < cumulative) {
            chosen = k;
            break;
        }
    }
    if (chosen == probs.size()) {
        // u landed in the rounding gap at the top of the cumulative sum.
        chosen = last_nonzero;
    }
    MeasurementResult result;
    result.outcome = chosen;
    result.probability = state.project(qubits, chosen);
    result.bits.resize(qubits.size());
    for (std::size_t j = 0; j < qubits.size(); ++j) {
        result.bits[j] = static_cast<std::uint8_t>(
            (chosen >> (qubits.size() - 1 - j)) & 1U);
    }
    return result;
}

MeasurementResult measure(StateVector &state, std::string_view register_name,
                          Rng &rng) {
    const auto qubits = state.layout().qubits(register_name);
    return measure(state, qubits, rng);
}

double project_onto(StateVector &state, std::span<const std::size_t> qubits,
                    std::uint64_t outcome) {
    check_qubits(state, qubits);
    return state.project(qubits, outcome);
}

StateVector condition_and_drop(const StateVector &state,
                               std::string_view register_name,
                               std::uint64_t outcome, double *probability) {
    const auto &layout = state.layout();
    const auto dropped = layout.qubits(register_name);
    RegisterLayout kept;
    std::vector<std::size_t> kept_qubits;
    for (const auto &r : layout.registers()) {
        if (r.name == register_name) {
            continue;
        }
        kept.add(r.name, r.width);
        for (std::size_t j = 0; j < r.width; ++j) {
            kept_qubits.push_back(r.offset + j);
        }
    }
    if (kept.num_qubits() == 0) {
        throw ValidationError("cannot drop the only register of a state");
    }

    const std::size_t q = state.num_qubits();
    const auto amps = state.amplitudes();
    std::vector<Complex> out(std::uint64_t{1} << kept.num_qubits(),
                             Complex{0.0, 0.0});
    double prob = 0.0;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (extract_bits(i, q, dropped) != outcome) {
            continue;
        }
        prob += std::norm(amps[i]);
        out[extract_bits(i, q, kept_qubits)] = amps[i];
    }
    if (!(prob > 1e-24)) {
        throw ProjectionError("register '" + std::string(register_name) +
                              "' never reads the requested outcome");
    }
    const double scale = 1.0 / std::sqrt(prob);
    for (auto &a : out) {
        a *= scale;
    }
    if (probability != nullptr) {
        *probability = prob;
    }
    return StateVector::from_amplitudes(std::move(kept), std::move(out),
                                        q);
}

} // namespace qam::qsim
