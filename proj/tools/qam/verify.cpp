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
#include "verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>

#include "qam/errors.hpp"
#include "qam/memory/cloning.hpp"
#include "qam/memory/storage.hpp"
#include "qam/qsim/gate.hpp"
#include "qam/qsim/measurement.hpp"
#include "qam/qsim/phase.hpp"
#include "qam/qsim/rng.hpp"
#include "qam/recall/distance.hpp"
#include "qam/recall/distribution.hpp"
#include "qam/recall/recall.hpp"
#include "qam/recall/retrieval_circuit.hpp"
#include "qam/thermo/potentials.hpp"

namespace qam::tools {

namespace {

using memory::MemoryModel;
using memory::Pattern;
using qsim::Complex;
using qsim::Rng;

constexpr double kPi = std::numbers::pi;

struct Scale {
    int models;     // random instances per invariant
    int samples;    // sampled recalls for the spurious-memory check
    std::size_t max_n;
};

std::uint64_t below(Rng &rng, std::uint64_t bound) {
    return static_cast<std::uint64_t>(rng.uniform() * static_cast<double>(bound));
}

MemoryModel random_model(Rng &rng, std::size_t n, std::size_t p) {
    std::set<std::uint64_t> seen;
    std::vector<Pattern> patterns;
    while (patterns.size() < p) {
        const auto idx = below(rng, std::uint64_t{1} << n);
        if (seen.insert(idx).second) {
            patterns.push_back(Pattern::from_index(idx, n));
        }
    }
    return MemoryModel(std::move(patterns));
}

std::size_t bit_distance(const Pattern &a, const Pattern &b) {
    std::size_t d = 0;
    for (std::size_t j = 0; j < a.width(); ++j) {
        d += a[j] != b[j];
    }
    return d;
}

InvariantResult unitarity(const VerifyOptions &opt, const Scale &s) {
    InvariantResult r{"unitarity"};
    std::vector<qsim::Matrix2> mats{qsim::gates::hadamard().matrix(),
                                    qsim::gates::pauli_x().matrix(),
                                    qsim::gates::pattern_loader(true).matrix(),
                                    qsim::gates::input_marker(false).matrix()};
    const std::size_t max_split = static_cast<std::size_t>(s.models);
    for (std::size_t i = 1; i <= max_split; ++i) {
        auto m = qsim::gates::storage_split_matrix(i);
        if (i == 2 && std::count(opt.faults.begin(), opt.faults.end(), "s2") > 0) {
            m[0] += 1e-6;
        }
        mats.push_back(m);
    }
    for (std::size_t n = 1; n <= s.max_n * 4; ++n) {
        mats.push_back(qsim::gates::distance_phase(n).matrix());
        mats.push_back(qsim::gates::distance_phase_correction(n).matrix());
    }
    r.holds = true;
    for (const auto &m : mats) {
        const auto prod = qsim::multiply(qsim::adjoint(m), m);
        const double err = std::max({std::abs(prod[0] - 1.0), std::abs(prod[1]),
                                     std::abs(prod[2]), std::abs(prod[3] - 1.0)});
        r.max_error = std::max(r.max_error, err);
        r.holds = r.holds && qsim::is_unitary(m);
        ++r.cases;
    }
    return r;
}

InvariantResult storage_equivalence(Rng &rng, const Scale &s) {
    InvariantResult r{"storage-equivalence"};
    for (int t = 0; t < s.models; ++t) {
        const std::size_t n = 1 + t % s.max_n;
        const std::size_t p = 1 + below(rng, std::uint64_t{1} << n);
        const auto model = random_model(rng, n, p);
        const auto analytic = memory::memory_state_analytic(model);
        std::vector<Complex> expected(analytic.dimension() * 4);
        for (std::uint64_t i = 0; i < analytic.dimension(); ++i) {
            expected[i * 4] = analytic.amplitude(i);
        }
        r.max_error = std::max(
            {r.max_error,
             qsim::max_deviation_up_to_phase(
                 expected, memory::store_sequential(model).state.amplitudes()),
             qsim::max_deviation_up_to_phase(
                 expected, memory::memory_state_from_operator(model).amplitudes())});
        ++r.cases;
    }
    r.holds = r.max_error <= 1e-10;
    return r;
}

InvariantResult operator_gate_count(Rng &rng, const Scale &s) {
    InvariantResult r{"operator-gate-count"};
    r.holds = true;
    for (std::size_t n = 1; n <= s.max_n + 2; ++n) {
        for (std::size_t p = 1; p <= 16 && p <= (std::size_t{1} << n); ++p) {
            const auto model = random_model(rng, n, p);
            const auto seq = memory::memory_operator(model, memory::storage_layout(n));
            const auto want = memory::memory_operator_gate_count(n, p);
            r.max_error = std::max(r.max_error,
                                   std::abs(double(seq.size()) - double(want)));
            ++r.cases;
        }
    }
    r.holds = r.max_error == 0.0;
    return r;
}

InvariantResult retrieval_closed_form(Rng &rng, const Scale &s) {
    InvariantResult r{"retrieval-closed-form"};
    for (int t = 0; t < s.models; ++t) {
        const std::size_t n = 1 + below(rng, std::min<std::size_t>(s.max_n, 5));
        const std::size_t p =
            1 + below(rng, std::min<std::uint64_t>(std::uint64_t{1} << n, 6));
        const std::size_t b = 1 + below(rng, 4);
        const auto model = random_model(rng, n, p);
        const auto input = Pattern::from_index(below(rng, std::uint64_t{1} << n), n);
        const auto enc = t % 2 == 0 ? recall::InputEncoding::kOperator
                                    : recall::InputEncoding::kAuxRegister;
        const auto state = recall::build_final_state(model, input, b, {enc, std::nullopt});
        const double norm = 1.0 / std::sqrt(double(p));
        for (std::size_t k = 0; k < p; ++k) {
            const double a = kPi * double(bit_distance(model.pattern(k), input)) /
                             (2.0 * double(n));
            for (std::uint64_t J = 0; J < (std::uint64_t{1} << b); ++J) {
                const int l = std::popcount(J);
                const Complex phase = std::pow(Complex(0.0, 1.0), l);
                const Complex want = phase * norm * std::pow(std::cos(a), double(b) - l) *
                                     std::pow(std::sin(a), double(l));
                const auto idx = (model.pattern(k).to_index() << b) | J;
                r.max_error = std::max(r.max_error, std::abs(state.amplitude(idx) - want));
            }
        }
        ++r.cases;
    }
    r.holds = r.max_error <= 1e-10;
    return r;
}

InvariantResult post_selection(Rng &rng, const Scale &s) {
    InvariantResult r{"post-selection"};
    for (int t = 0; t < s.models; ++t) {
        const std::size_t n = 2 + below(rng, 3);
        const auto model = random_model(rng, n, 3);
        const auto input = Pattern::from_index(below(rng, std::uint64_t{1} << n), n);
        const std::size_t b = 1 + below(rng, 3);
        recall::RetrievalDistribution dist;
        try {
            dist = recall::retrieval_distribution(model, input, double(b));
        } catch (const DegenerateDistributionError &) {
            continue;
        }
        const auto state = recall::build_final_state(model, input, b);
        double prob = 0.0;
        const auto kept = qsim::condition_and_drop(state, "c", 0, &prob);
        r.max_error = std::max(r.max_error, std::abs(prob - dist.p_rec));
        for (std::size_t k = 0; k < model.size(); ++k) {
            r.max_error = std::max(
                r.max_error, std::abs(std::norm(kept.amplitude(model.pattern(k).to_index())) -
                                      dist.probabilities[k]));
        }
        ++r.cases;
    }
    r.holds = r.max_error <= 1e-10;
    return r;
}

InvariantResult distribution_normalization(Rng &rng, const Scale &s) {
    InvariantResult r{"distribution-normalization"};
    for (int t = 0; t < s.models * 4; ++t) {
        const std::size_t n = 1 + below(rng, 10);
        const std::size_t p =
            1 + below(rng, std::min<std::uint64_t>(std::uint64_t{1} << n, 20));
        const auto model = random_model(rng, n, p);
        const auto input = Pattern::from_index(below(rng, std::uint64_t{1} << n), n);
        try {
            const auto d = recall::retrieval_distribution(model, input, 1.0 + below(rng, 50));
            double sum = 0.0;
            for (double q : d.probabilities) {
                sum += q;
            }
            r.max_error = std::max(r.max_error, std::abs(sum - 1.0));
            ++r.cases;
        } catch (const DegenerateDistributionError &) {
        }
    }
    r.holds = r.max_error <= 1e-12;
    return r;
}

InvariantResult no_spurious_memories(Rng &rng, const Scale &s) {
    InvariantResult r{"no-spurious-memories"};
    std::uint64_t spurious = 0;
    for (int inst = 0; inst < 10; ++inst) {
        const std::size_t n = 2 + inst % 4;
        const auto model = random_model(rng, n, 1 + inst % 3);
        const std::set<Pattern> stored(model.patterns().begin(), model.patterns().end());
        recall::RetrievalParams params;
        params.input = Pattern::from_index(below(rng, std::uint64_t{1} << n), n);
        params.b = 1 + inst % 3;
        params.threshold = 100;
        recall::MeasuredRecall runner(model, params);
        for (int t = 0; t < s.samples / 10; ++t) {
            const auto out = runner.run(rng);
            spurious += out.recognized && stored.count(*out.output) == 0;
            ++r.cases;
        }
    }
    r.max_error = double(spurious);
    r.holds = spurious == 0;
    return r;
}

InvariantResult amplification_angle(Rng &rng, const Scale &s) {
    InvariantResult r{"amplification-angle"};
    for (int t = 0; t < std::max(2, s.models / 20); ++t) {
        const auto model = random_model(rng, 3, 3);
        const auto input = Pattern::from_index(below(rng, 8), 3);
        recall::AmplifiedSearch search(model, input, 2);
        if (search.p_rec() == 0.0) {
            continue;
        }
        for (std::size_t k = 0; k <= 8; ++k) {
            r.max_error = std::max(
                r.max_error, std::abs(search.success_probability() -
                                      recall::amplified_success_probability(search.p_rec(), k)));
            search.iterate();
        }
        ++r.cases;
    }
    r.holds = r.max_error <= 1e-9;
    return r;
}

InvariantResult thermo_consistency(Rng &rng, const Scale &s) {
    InvariantResult r{"thermo-consistency"};
    r.holds = true;
    for (int t = 0; t < s.models / 4 + 1; ++t) {
        const std::uint64_t n = 1000 + below(rng, 100000);
        const std::uint64_t d = below(rng, n / 10);
        const auto mode = thermo::default_mode(n);
        double prev_d = 1.0;
        for (double b = 1e-3; b <= 1e6; b *= 10) {
            const auto pt = thermo::potentials(n, d, b, mode);
            const double e1 = std::abs(pt.F - (pt.U - pt.S / b)) / std::max(1.0, std::abs(pt.F));
            const double e2 = std::abs(std::pow(std::cos(kPi * pt.D / 2), 2 * b) / pt.z_ratio - 1);
            r.max_error = std::max({r.max_error, e1, e2});
            r.holds = r.holds && pt.S <= 1e-12 && pt.D <= prev_d + 1e-12;
            prev_d = pt.D;
        }
        ++r.cases;
    }
    r.holds = r.holds && r.max_error <= 1e-9;
    return r;
}

InvariantResult cloning_overlap(Rng &rng, const Scale &s) {
    InvariantResult r{"cloning-overlap"};
    r.holds = true;
    for (std::size_t p = 1; p <= static_cast<std::size_t>(s.models / 4 + 2); ++p) {
        const auto model = random_model(rng, 7, p);
        const double want = p % 2 == 0 ? 0.0 : 1.0 / double(p);
        const double inner = std::abs(qsim::inner_product(memory::memory_state_analytic(model),
                                                          memory::dual_state(model)));
        r.max_error = std::max({r.max_error, std::abs(memory::dual_overlap(model) - want),
                                std::abs(inner - want)});
        r.holds = r.holds && (p % 2 == 1 || memory::cloning_bound(model) == 2.0);
        ++r.cases;
    }
    r.holds = r.holds && r.max_error <= 1e-14;
    return r;
}

} // namespace

std::vector<InvariantResult> run_invariants(const VerifyOptions &options) {
    const Scale scale = options.level == VerifyLevel::kQuick ? Scale{40, 20000, 5}
                                                             : Scale{400, 200000, 6};
    Rng rng(options.seed);
    using Check = std::function<InvariantResult()>;
    const std::vector<Check> checks{
        [&] { return unitarity(options, scale); },
        [&] { return storage_equivalence(rng, scale); },
        [&] { return operator_gate_count(rng, scale); },
        [&] { return retrieval_closed_form(rng, scale); },
        [&] { return post_selection(rng, scale); },
        [&] { return distribution_normalization(rng, scale); },
        [&] { return no_spurious_memories(rng, scale); },
        [&] { return amplification_angle(rng, scale); },
        [&] { return thermo_consistency(rng, scale); },
        [&] { return cloning_overlap(rng, scale); },
    };
    std::vector<InvariantResult> results;
    for (const auto &check : checks) {
        results.push_back(check());
    }
    return results;
}

} // namespace qam::tools
