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
#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>

#include "oracles.hpp"
#include "qam/errors.hpp"
#include "qam/qsim/gate.hpp"
#include "qam/qsim/gate_sequence.hpp"
#include "qam/qsim/hamming_phase.hpp"
#include "qam/qsim/measurement.hpp"
#include "qam/qsim/phase.hpp"
#include "qam/qsim/serialization.hpp"
#include "qam/qsim/state_vector.hpp"

namespace {

using namespace qam;
using namespace qam::qsim;
namespace oracle = qam::testing;
using qam::testing::Complex;

constexpr double kTight = 1e-12;

RegisterLayout single(std::size_t q) { return RegisterLayout{{"q", q}}; }

Gate random_unitary(Rng &rng) {
    // e^{i a} [[cos t e^{i b}, -sin t e^{-i c}], [sin t e^{i c}, cos t e^{-i b}]]
    const double a = 2 * std::numbers::pi * rng.uniform();
    const double b = 2 * std::numbers::pi * rng.uniform();
    const double c = 2 * std::numbers::pi * rng.uniform();
    const double t = std::numbers::pi * rng.uniform();
    const Complex g = std::polar(1.0, a);
    return Gate(Matrix2{g * std::cos(t) * std::polar(1.0, b),
                        -g * std::sin(t) * std::polar(1.0, -c),
                        g * std::sin(t) * std::polar(1.0, c),
                        g * std::cos(t) * std::polar(1.0, -b)},
                "R");
}

StateVector random_state(const RegisterLayout &layout, Rng &rng) {
    std::vector<Complex> amps(std::uint64_t{1} << layout.num_qubits());
    double norm = 0.0;
    for (auto &a : amps) {
        a = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return StateVector::from_amplitudes(layout, std::move(amps));
}

TEST(ZeroState, SingleQubit) {
    const auto s = StateVector::zero(single(1));
    EXPECT_EQ(s.dimension(), 2U);
    EXPECT_EQ(s.amplitude(0), Complex(1.0));
    EXPECT_EQ(s.amplitude(1), Complex(0.0));
}

TEST(ZeroState, TwoQubits) {
    const auto s = StateVector::zero(single(2));
    ASSERT_EQ(s.dimension(), 4U);
    EXPECT_EQ(s.amplitude(0), Complex(1.0));
    for (int i = 1; i < 4; ++i) {
        EXPECT_EQ(s.amplitude(i), Complex(0.0));
    }
}

TEST(ZeroState, AboveCapIsCapacityError) {
    EXPECT_THROW((void)StateVector::zero(single(27), 26), CapacityError);
}

TEST(ZeroState, EnvironmentOverridesCap) {
    ::setenv("QAM_QUBIT_CAP", "3", 1);
    EXPECT_EQ(default_qubit_cap(), 3U);
    EXPECT_THROW((void)StateVector::zero(single(4)), CapacityError);
    ::setenv("QAM_QUBIT_CAP", "zero", 1);
    EXPECT_THROW((void)default_qubit_cap(), ValidationError);
    ::unsetenv("QAM_QUBIT_CAP");
    EXPECT_EQ(default_qubit_cap(), kDefaultQubitCap);
}

TEST(Layout, BigEndianRegisters) {
    RegisterLayout layout{{"m", 3}, {"u", 2}};
    EXPECT_EQ(layout.num_qubits(), 5U);
    EXPECT_EQ(layout.qubit("u", 1), 4U);
    EXPECT_EQ(qubit_bit(5, 0), 16U);
    EXPECT_THROW(layout.add("m", 1), ValidationError);
    EXPECT_THROW(layout.add("z", 0), ValidationError);
    EXPECT_THROW((void)layout.at("c"), ValidationError);
}

TEST(Gates, HadamardOnZero) {
    auto s = StateVector::zero(single(1));
    s.apply(gates::hadamard(), 0);
    EXPECT_NEAR(std::abs(s.amplitude(0) - 1.0 / std::sqrt(2.0)), 0.0, kTight);
    EXPECT_NEAR(std::abs(s.amplitude(1) - 1.0 / std::sqrt(2.0)), 0.0, kTight);
}

TEST(Gates, NotFlipsBit) {
    auto s = StateVector::zero(single(1));
    s.apply(gates::pauli_x(), 0);
    EXPECT_EQ(s.amplitude(1), Complex(1.0));
}

TEST(Gates, PatternLoaderProductPreparesPattern) {
    const std::vector<std::uint8_t> bits{1, 0, 1, 1};
    auto s = StateVector::zero(single(4));
    for (std::size_t j = 0; j < bits.size(); ++j) {
        s.apply(gates::pattern_loader(bits[j] != 0), j);
    }
    EXPECT_NEAR(std::abs(s.amplitude(0b1011) - 1.0), 0.0, kTight);
}

TEST(Gates, NonUnitaryRejected) {
    EXPECT_THROW(Gate(Matrix2{1.0, 1.0, 0.0, 1.0}, "bad"), ValidationError);
    Matrix2 s2 = gates::storage_split_matrix(2);
    s2[0] += 1e-9;
    EXPECT_THROW(Gate(s2, "S"), ValidationError);
    EXPECT_THROW((void)gates::storage_split(0), ValidationError);
}

TEST(Gates, StorageSplitEntries) {
    const auto s1 = gates::storage_split_matrix(1);
    EXPECT_EQ(s1[0], Complex(0.0));
    EXPECT_EQ(s1[1], Complex(1.0));
    EXPECT_EQ(s1[2], Complex(-1.0));
    EXPECT_EQ(s1[3], Complex(0.0));
    const auto s4 = gates::storage_split_matrix(4);
    EXPECT_NEAR(s4[0].real(), std::sqrt(0.75), kTight);
    EXPECT_NEAR(s4[1].real(), 0.5, kTight);
}

TEST(Gates, DistancePhaseCorrectionIsInverseSquared) {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto u = gates::distance_phase(n).matrix();
        const auto c = gates::distance_phase_correction(n).matrix();
        EXPECT_NEAR(std::abs(u[0] * u[0] * c[0] - 1.0), 0.0, kTight);
        EXPECT_EQ(c[3], Complex(1.0));
    }
}

TEST(Controlled, XorTruthTable) {
    auto s = StateVector::basis(single(2), 0b10);
    const Control c{0, true};
    s.apply_controlled(gates::pauli_x(), {&c, 1}, 1, "XOR");
    EXPECT_EQ(s.amplitude(0b11), Complex(1.0));
}

TEST(Controlled, SplitOneOnControlledBasis) {
    auto s = StateVector::basis(single(2), 0b10);
    const Control c{0, true};
    s.apply_controlled(gates::storage_split(1), {&c, 1}, 1, "CS");
    EXPECT_EQ(s.amplitude(0b11), Complex(-1.0));
    EXPECT_EQ(s.amplitude(0b10), Complex(0.0));
}

TEST(Controlled, ToffoliTruthTable) {
    auto s = StateVector::basis(single(3), 0b110);
    const Control cs[2] = {{0, true}, {1, true}};
    s.apply_controlled(gates::pauli_x(), cs, 2, "2XOR");
    EXPECT_EQ(s.amplitude(0b111), Complex(1.0));
    EXPECT_EQ(s.gates().count(GateArity::kToffoli), 1U);
}

TEST(Controlled, ZeroValuedControl) {
    auto s = StateVector::basis(single(2), 0b00);
    const Control c{0, false};
    s.apply_controlled(gates::pauli_x(), {&c, 1}, 1);
    EXPECT_EQ(s.amplitude(0b01), Complex(1.0));
}

TEST(Controlled, OverlapIsValidationError) {
    auto s = StateVector::zero(single(2));
    const Control c{1, true};
    EXPECT_THROW(s.apply_controlled(gates::pauli_x(), {&c, 1}, 1),
                 ValidationError);
    const Control dup[2] = {{0, true}, {0, false}};
    EXPECT_THROW(s.apply_controlled(gates::pauli_x(), dup, 1), ValidationError);
    EXPECT_THROW(s.apply(gates::pauli_x(), 2), ValidationError);
}

TEST(Controlled, NoControlsEqualsPlainApply) {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_state(single(4), rng);
        auto b = a;
        const Gate g = random_unitary(rng);
        const std::size_t t = trial % 4;
        a.apply(g, t);
        b.apply_controlled(g, {}, t);
        EXPECT_LT(oracle::max_abs_diff({a.amplitudes().begin(),
                                         a.amplitudes().end()},
                                        b.amplitudes()),
                  kTight);
    }
}

TEST(Controlled, MatchesDenseOperator) {
    Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t q = 2 + trial % 4;
        auto s = random_state(single(q), rng);
        const Gate g = random_unitary(rng);
        const std::size_t target = oracle::uniform_below(rng, q);
        std::vector<Control> controls;
        std::vector<std::pair<std::size_t, bool>> dense_controls;
        for (std::size_t c = 0; c < q; ++c) {
            if (c != target && rng.uniform() < 0.5) {
                const bool v = rng.uniform() < 0.5;
                controls.push_back({c, v});
                dense_controls.emplace_back(c, v);
            }
        }
        const std::vector<Complex> before(s.amplitudes().begin(),
                                          s.amplitudes().end());
        s.apply_controlled(g, controls, target);
        const auto expected = oracle::mat_vec(
            oracle::dense_operator(q, g.matrix(), target, dense_controls),
            before);
        EXPECT_LT(oracle::max_abs_diff(expected, s.amplitudes()), kTight);
    }
}

TEST(Norm, PreservedUnderRandomSequences) {
    Rng rng(13);
    for (std::size_t q : {4U, 10U, 16U, 20U}) {
        auto s = StateVector::zero(single(q));
        const int steps = q >= 16 ? 12 : 200;
        for (int k = 0; k < steps; ++k) {
            const Gate g = random_unitary(rng);
            const std::size_t target = oracle::uniform_below(rng, q);
            std::vector<Control> controls;
            for (std::size_t c = 0; c < q; ++c) {
                if (c != target && rng.uniform() < 2.0 / q) {
                    controls.push_back({c, rng.uniform() < 0.5});
                }
            }
            s.apply_controlled(g, controls, target);
            ASSERT_NEAR(s.norm_squared(), 1.0, 1e-10) << "q=" << q;
        }
    }
}

TEST(GateRecordTest, TotalIsSumOfClasses) {
    auto s = StateVector::zero(single(4));
    s.apply(gates::hadamard(), 0);
    const Control c1{0, true};
    s.apply_controlled(gates::pauli_x(), {&c1, 1}, 1, "XOR");
    const Control c3[3] = {{0, true}, {1, true}, {2, true}};
    s.apply_controlled(gates::pauli_x(), c3, 3, "nXOR");
    s.flip_sign_if([](std::uint64_t i) { return i == 0; }, "S0");
    const auto &r = s.gates();
    EXPECT_EQ(r.total, 3U);
    EXPECT_EQ(r.count(GateArity::kSingle) + r.count(GateArity::kControlled) +
                  r.count(GateArity::kToffoli) +
                  r.count(GateArity::kMultiControlled),
              r.total);
    EXPECT_EQ(r.count("nXOR"), 1U);
    EXPECT_EQ(r.oracle_count("S0"), 1U);
}

TEST(HammingPhase, AllOnesWithControlZeroIsTrivial) {
    RegisterLayout layout{{"m", 3}, {"c", 1}};
    auto s = StateVector::basis(layout, 0b1110);
    const auto m = layout.qubits("m");
    apply_hamming_phase(s, m, layout.qubit("c", 0), 3);
    EXPECT_NEAR(std::abs(s.amplitude(0b1110) - 1.0), 0.0, kTight);
}

TEST(HammingPhase, TwoZerosControlZeroGivesI) {
    RegisterLayout layout{{"m", 2}, {"c", 1}};
    auto s = StateVector::basis(layout, 0b000);
    apply_hamming_phase(s, layout.qubits("m"), 2, 2);
    EXPECT_NEAR(std::abs(s.amplitude(0) - Complex(0.0, 1.0)), 0.0, kTight);
}

TEST(HammingPhase, TwoZerosControlOneGivesMinusI) {
    RegisterLayout layout{{"m", 2}, {"c", 1}};
    auto s = StateVector::basis(layout, 0b001);
    apply_hamming_phase(s, layout.qubits("m"), 2, 2);
    EXPECT_NEAR(std::abs(s.amplitude(1) - Complex(0.0, -1.0)), 0.0, kTight);
}

TEST(HammingPhase, EqualsDiagonalExponential) {
    Rng rng(14);
    for (std::size_t n = 1; n <= 6; ++n) {
        RegisterLayout layout{{"m", n}, {"c", 1}};
        auto s = random_state(layout, rng);
        const std::vector<Complex> before(s.amplitudes().begin(),
                                          s.amplitudes().end());
        s.reset_gates();
        apply_hamming_phase(s, layout.qubits("m"), n, n);
        EXPECT_EQ(s.gates().total, 2 * n);
        for (std::uint64_t idx = 0; idx < before.size(); ++idx) {
            const std::uint64_t memory = idx >> 1;
            const int zeros = static_cast<int>(n) - std::popcount(memory);
            const double sign = (idx & 1U) ? -1.0 : 1.0;
            const Complex expected =
                before[idx] * std::polar(1.0, sign * std::numbers::pi * zeros /
                                                  (2.0 * static_cast<double>(n)));
            EXPECT_NEAR(std::abs(s.amplitude(idx) - expected), 0.0, kTight);
        }
    }
}

TEST(HammingPhase, ControlInsideRangeRejected) {
    const std::vector<std::size_t> m{0, 1};
    EXPECT_THROW((void)hamming_phase_sequence(m, 1, 2), ValidationError);
}

TEST(Measurement, BasisStateIsCertain) {
    auto s = StateVector::basis(single(2), 0b01);
    Rng rng(1);
    const std::vector<std::size_t> qs{0, 1};
    const auto r = measure(s, qs, rng);
    EXPECT_EQ(r.outcome, 0b01U);
    EXPECT_EQ(r.bits, (std::vector<std::uint8_t>{0, 1}));
    EXPECT_DOUBLE_EQ(r.probability, 1.0);
}

TEST(Measurement, BellMarginalAndCollapse) {
    const double h = 1.0 / std::sqrt(2.0);
    Rng rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = StateVector::from_amplitudes(single(2), {h, 0.0, 0.0, h});
        const std::vector<std::size_t> q0{0};
        const auto r = measure(s, q0, rng);
        EXPECT_NEAR(r.probability, 0.5, kTight);
        const std::uint64_t kept = r.outcome == 0 ? 0b00 : 0b11;
        EXPECT_NEAR(std::abs(s.amplitude(kept)), 1.0, kTight);
    }
}

TEST(Measurement, ForcedZeroProbabilityOutcomeThrows) {
    auto s = StateVector::basis(single(2), 0b01);
    const std::vector<std::size_t> q0{0};
    EXPECT_THROW((void)project_onto(s, q0, 1), ProjectionError);
    EXPECT_DOUBLE_EQ(project_onto(s, q0, 0), 1.0);
}

TEST(Measurement, MarginalOfHadamard) {
    auto s = StateVector::zero(single(1));
    s.apply(gates::hadamard(), 0);
    const std::vector<std::size_t> q0{0};
    const auto p = marginal_distribution(s, q0);
    EXPECT_NEAR(p[0], 0.5, kTight);
    EXPECT_NEAR(p[1], 0.5, kTight);
}

TEST(Measurement, MarginalOfBasisState) {
    const auto s = StateVector::zero(single(1));
    const std::vector<std::size_t> q0{0};
    EXPECT_EQ(marginal_distribution(s, q0), (std::vector<double>{1.0, 0.0}));
}

TEST(Measurement, SamplingMatchesMarginalWithinFourSigma) {
    Rng rng(15);
    const auto base = random_state(single(3), rng);
    const std::vector<std::size_t> qs{0, 2};
    const auto exact = marginal_distribution(base, qs);
    double total = 0.0;
    for (double p : exact) {
        total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-10);

    constexpr std::size_t kDraws = 100000;
    std::vector<std::size_t> counts(4);
    for (std::size_t t = 0; t < kDraws; ++t) {
        auto s = base;
        ++counts[measure(s, qs, rng).outcome];
    }
    for (std::size_t k = 0; k < 4; ++k) {
        const double freq = static_cast<double>(counts[k]) / kDraws;
        EXPECT_NEAR(freq, exact[k], oracle::four_sigma(exact[k], kDraws));
    }
}

TEST(Measurement, DeterministicUnderSeed) {
    Rng seed_source(16);
    const auto base = random_state(single(4), seed_source);
    const std::vector<std::size_t> qs{0, 1, 2, 3};
    Rng a(99);
    Rng b(99);
    for (int t = 0; t < 100; ++t) {
        auto s1 = base;
        auto s2 = base;
        EXPECT_EQ(measure(s1, qs, a).outcome, measure(s2, qs, b).outcome);
    }
}

TEST(Measurement, ConditionAndDropKeepsOtherRegisters) {
    RegisterLayout layout{{"a", 1}, {"b", 2}};
    const double h = 1.0 / std::sqrt(2.0);
    std::vector<Complex> amps(8);
    amps[0b101] = h;
    amps[0b011] = h;
    const auto s = StateVector::from_amplitudes(layout, amps);
    double prob = 0.0;
    const auto r = condition_and_drop(s, "a", 1, &prob);
    EXPECT_NEAR(prob, 0.5, kTight);
    EXPECT_EQ(r.layout(), (RegisterLayout{{"b", 2}}));
    EXPECT_NEAR(std::abs(r.amplitude(0b01)), 1.0, kTight);
}

TEST(InnerProduct, Basics) {
    Rng rng(17);
    const auto s = random_state(single(3), rng);
    EXPECT_NEAR(std::abs(inner_product(s, s) - 1.0), 0.0, kTight);
    const auto zero = StateVector::basis(single(1), 0);
    const auto one = StateVector::basis(single(1), 1);
    EXPECT_EQ(inner_product(zero, one), Complex(0.0));
    EXPECT_THROW((void)inner_product(zero, s), ValidationError);
}

TEST(InnerProduct, ConjugateLinearInFirstArgument) {
    auto a = StateVector::from_amplitudes(single(1), {Complex(0, 1), 0.0});
    const auto b = StateVector::basis(single(1), 0);
    EXPECT_NEAR(std::abs(inner_product(a, b) - Complex(0, -1)), 0.0, kTight);
}

TEST(FromAmplitudes, Validation) {
    EXPECT_THROW((void)StateVector::from_amplitudes(single(1), {1.0}),
                 ValidationError);
    EXPECT_THROW((void)StateVector::from_amplitudes(single(1), {1.0, 1.0}),
                 ValidationError);
}

TEST(GateSequenceTest, AdjointUndoes) {
    Rng rng(18);
    GateSequence seq;
    for (int k = 0; k < 30; ++k) {
        seq.push_controlled(random_unitary(rng),
                            {Control{static_cast<std::size_t>(k % 3), k % 2 == 0}},
                            3, "R");
    }
    auto s = random_state(single(4), rng);
    const std::vector<Complex> before(s.amplitudes().begin(),
                                      s.amplitudes().end());
    seq.apply(s);
    seq.adjoint().apply(s);
    EXPECT_LT(oracle::max_abs_diff(before, s.amplitudes()), 1e-12);
    EXPECT_EQ(s.gates().total, 60U);
}

TEST(Phase, AlignmentRemovesGlobalPhase) {
    Rng rng(19);
    const auto s = random_state(single(3), rng);
    std::vector<Complex> rotated(s.amplitudes().begin(), s.amplitudes().end());
    for (auto &a : rotated) {
        a *= std::polar(1.0, 1.234);
    }
    EXPECT_LT(max_deviation_up_to_phase(s.amplitudes(), rotated), 1e-14);
    const auto aligned = align_global_phase(rotated);
    std::size_t best = 0;
    for (std::size_t i = 0; i < aligned.size(); ++i) {
        if (std::abs(aligned[i]) > std::abs(aligned[best])) {
            best = i;
        }
    }
    EXPECT_NEAR(aligned[best].imag(), 0.0, 1e-15);
    EXPECT_GT(aligned[best].real(), 0.0);
}

TEST(Serialization, RoundTripIsLossless) {
    Rng rng(20);
    RegisterLayout layout{{"m", 2}, {"u", 2}};
    const auto s = random_state(layout, rng);
    const auto text = to_json(s);
    const auto back = state_from_json(text);
    EXPECT_EQ(back.layout(), layout);
    for (std::uint64_t i = 0; i < s.dimension(); ++i) {
        EXPECT_EQ(back.amplitude(i), s.amplitude(i));
    }
    EXPECT_EQ(to_json(back), text);
}

TEST(Serialization, MalformedInputRejected) {
    EXPECT_THROW((void)state_from_json("{"), ValidationError);
    EXPECT_THROW((void)state_from_json(R"({"num_qubits": 1})"), ValidationError);
}

} // namespace
