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
#include <sstream>

#include "oracles.hpp"
#include "qam/errors.hpp"
#include "qam/memory/cloning.hpp"
#include "qam/memory/memory_model.hpp"
#include "qam/memory/pattern.hpp"
#include "qam/memory/storage.hpp"
#include "qam/qsim/measurement.hpp"

namespace {

using namespace qam;
using namespace qam::memory;
namespace oracle = qam::testing;
using qam::testing::Complex;
using qsim::Rng;
using qsim::StateVector;

constexpr double kTight = 1e-12;

/// |m> (x) |00> as a dense vector over [m:n, u:2].
std::vector<Complex> with_clear_utility(const std::vector<Complex> &memory) {
    std::vector<Complex> out(memory.size() * 4);
    for (std::size_t i = 0; i < memory.size(); ++i) {
        out[i * 4] = memory[i];
    }
    return out;
}

MemoryModel model_of(std::initializer_list<const char *> rows) {
    std::vector<Pattern> patterns;
    for (const char *r : rows) {
        patterns.push_back(Pattern::parse(r));
    }
    return MemoryModel(std::move(patterns));
}

TEST(PatternTest, ParseAndIndex) {
    const auto p = Pattern::parse("1011");
    EXPECT_EQ(p.width(), 4U);
    EXPECT_EQ(p.to_index(), 0b1011U);
    EXPECT_EQ(p.to_string(), "1011");
    EXPECT_EQ(Pattern::from_index(0b0110, 4).to_string(), "0110");
    EXPECT_THROW((void)Pattern::parse("10a1"), ValidationError);
}

TEST(MemoryModelTest, RejectsDuplicates) {
    EXPECT_THROW(model_of({"01", "10", "01"}), ValidationError);
}

TEST(MemoryModelTest, RejectsRaggedWidths) {
    EXPECT_THROW(model_of({"01", "100"}), ValidationError);
}

TEST(MemoryModelTest, RejectsEmpty) {
    EXPECT_THROW(MemoryModel(std::vector<Pattern>{}), ValidationError);
}

TEST(PatternFile, CommentsAndBlankLines) {
    std::istringstream in("# header\n0101\n\n1100  # second\n");
    const auto model = parse_patterns(in);
    ASSERT_EQ(model.size(), 2U);
    EXPECT_EQ(model.pattern(1).to_string(), "1100");
}

TEST(PatternFile, DuplicateReportsLine) {
    std::istringstream in("01\n10\n01\n");
    try {
        (void)parse_patterns(in);
        FAIL() << "expected ValidationError";
    } catch (const ValidationError &e) {
        EXPECT_NE(std::string(e.what()).find('3'), std::string::npos) << e.what();
    }
}

TEST(PatternFile, RaggedRejected) {
    std::istringstream in("010\n01\n");
    EXPECT_THROW((void)parse_patterns(in), ValidationError);
}

TEST(PatternFile, MissingFileRejected) {
    EXPECT_THROW((void)read_pattern_file("/nonexistent/patterns.txt"),
                 ValidationError);
}

TEST(Storage, AnalyticStateMatchesOracle) {
    const auto model = model_of({"001", "110", "011"});
    const auto s = memory_state_analytic(model);
    EXPECT_LT(oracle::max_abs_diff(oracle::memory_amplitudes(model), s.amplitudes()),
              kTight);
    EXPECT_NEAR(s.norm_squared(), 1.0, kTight);
}

TEST(Storage, ThreeConstructionsAgreeOnRandomModels) {
    Rng rng(21);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int rep = 0; rep < 4; ++rep) {
            const std::size_t max_p = std::min<std::size_t>(std::size_t{1} << n, 12);
            const std::size_t p = 1 + oracle::uniform_below(rng, max_p);
            const auto model = oracle::random_model(rng, n, p);
            const auto expected =
                with_clear_utility(oracle::memory_amplitudes(model));
            const auto seq = store_sequential(model);
            const auto op = memory_state_from_operator(model);
            EXPECT_LT(oracle::max_abs_diff(expected, seq.state.amplitudes()), 1e-10)
                << "n=" << n << " p=" << p;
            EXPECT_LT(oracle::max_abs_diff(expected, op.amplitudes()), 1e-10)
                << "n=" << n << " p=" << p;
        }
    }
}

TEST(Storage, QuantumPatternRegisterMatches) {
    Rng rng(22);
    for (std::size_t n = 1; n <= 5; ++n) {
        const std::size_t p = std::min<std::size_t>(std::size_t{1} << n, 5);
        const auto model = oracle::random_model(rng, n, p);
        StorageOptions opts;
        opts.pattern_register = PatternRegister::kQuantum;
        const auto r = store_sequential(model, opts);
        EXPECT_EQ(r.state.layout(), storage_layout(n));
        EXPECT_LT(oracle::max_abs_diff(
                      with_clear_utility(oracle::memory_amplitudes(model)),
                      r.state.amplitudes()),
                  1e-10);
        EXPECT_GT(r.gates.count("LOAD"), 0U);
    }
}

TEST(Storage, IntermediateStateAfterFirstOfTwoPatterns) {
    const auto model = model_of({"01", "10"});
    std::vector<StateVector> seen;
    StorageOptions opts;
    opts.on_pattern_separated = [&](std::size_t i, const StateVector &s) {
        EXPECT_EQ(i, seen.size() + 1);
        seen.push_back(s);
    };
    (void)store_sequential(model, opts);
    ASSERT_EQ(seen.size(), 2U);
    const double h = 1.0 / std::sqrt(2.0);
    // index = m * 4 + u, u = u1 u2
    std::vector<Complex> expected(16);
    expected[0b01 * 4 + 0b00] = h;
    expected[0b01 * 4 + 0b01] = h;
    EXPECT_LT(oracle::max_abs_diff(expected, seen[0].amplitudes()), kTight);
}

TEST(Storage, IntermediateStatesFollowClosedForm) {
    Rng rng(23);
    const std::size_t n = 4;
    const std::size_t p = 6;
    const auto model = oracle::random_model(rng, n, p);
    StorageOptions opts;
    opts.on_pattern_separated = [&](std::size_t i, const StateVector &s) {
        std::vector<Complex> expected(s.dimension());
        for (std::size_t k = 0; k < i; ++k) {
            expected[model.pattern(k).to_index() * 4] = 1.0 / std::sqrt(double(p));
        }
        expected[model.pattern(i - 1).to_index() * 4 + 1] =
            std::sqrt(double(p - i) / double(p));
        EXPECT_LT(oracle::max_abs_diff(expected, s.amplitudes()), 1e-12)
            << "after pattern " << i;
    };
    (void)store_sequential(model, opts);
}

TEST(Storage, AlternatingSignGivesDualState) {
    Rng rng(24);
    for (std::size_t p : {1U, 2U, 3U, 5U, 8U}) {
        const auto model = oracle::random_model(rng, 4, p);
        const auto expected =
            with_clear_utility(oracle::memory_amplitudes(model, true));
        StorageOptions opts;
        opts.sign = StorageSign::kAlternating;
        EXPECT_LT(oracle::max_abs_diff(expected,
                                       store_sequential(model, opts).state.amplitudes()),
                  1e-10);
        EXPECT_LT(oracle::max_abs_diff(
                      expected,
                      memory_state_from_operator(model, StorageSign::kAlternating)
                          .amplitudes()),
                  1e-10);
        EXPECT_LT(oracle::max_abs_diff(oracle::memory_amplitudes(model, true),
                                       dual_state(model).amplitudes()),
                  kTight);
    }
}

TEST(MemoryOperator, GateCountFormula) {
    Rng rng(25);
    for (std::size_t n = 1; n <= 8; ++n) {
        for (std::size_t p = 1; p <= 16 && p <= (std::size_t{1} << n); ++p) {
            const auto model = oracle::random_model(rng, n, p);
            const auto seq = memory_operator(model, storage_layout(n));
            EXPECT_EQ(seq.size(), memory_operator_gate_count(n, p))
                << "n=" << n << " p=" << p;
        }
    }
    EXPECT_EQ(memory_operator_gate_count(3, 2), 19U);
}

TEST(MemoryOperator, ProductWithAdjointIsIdentity) {
    Rng rng(26);
    for (std::size_t n = 1; n <= 4; ++n) {
        const std::size_t p = std::min<std::size_t>(std::size_t{1} << n, 5);
        const auto model = oracle::random_model(rng, n, p);
        const auto layout = storage_layout(n);
        const auto seq = memory_operator(model, layout);
        const auto inverse = seq.adjoint();
        // Every basis column of M^dagger M must come back unchanged.
        for (std::uint64_t col = 0; col < (std::uint64_t{1} << (n + 2)); ++col) {
            auto s = StateVector::basis(layout, col);
            seq.apply(s);
            inverse.apply(s);
            std::vector<Complex> e(s.dimension());
            e[col] = 1.0;
            ASSERT_LT(oracle::max_abs_diff(e, s.amplitudes()), 1e-12)
                << "n=" << n << " column " << col;
        }
    }
}

TEST(MemoryOperator, ActsOnEmbeddedLayout) {
    const auto model = model_of({"10", "11", "00"});
    qsim::RegisterLayout layout{{"c", 1}, {"m", 2}, {"u", 2}};
    auto s = StateVector::zero(layout);
    apply_memory_operator(model, s);
    const auto expected = with_clear_utility(oracle::memory_amplitudes(model));
    // c = 0 occupies the first half of the vector.
    EXPECT_LT(oracle::max_abs_diff(expected, s.amplitudes()), 1e-12);
}

TEST(Cloning, OverlapAndBound) {
    EXPECT_DOUBLE_EQ(dual_overlap(model_of({"0", "1"})), 0.0);
    EXPECT_DOUBLE_EQ(cloning_bound(model_of({"0", "1"})), 2.0);
    EXPECT_DOUBLE_EQ(dual_overlap(model_of({"00", "01", "10"})), 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(cloning_bound(model_of({"00", "01", "10"})), 1.5);
    EXPECT_DOUBLE_EQ(cloning_bound(model_of({"00"})), 1.0);
}

TEST(Cloning, OverlapMatchesInnerProduct) {
    Rng rng(27);
    for (std::size_t p = 1; p <= 9; ++p) {
        const auto model = oracle::random_model(rng, 4, p);
        const auto m = memory_state_analytic(model);
        const auto d = dual_state(model);
        EXPECT_NEAR(std::abs(qsim::inner_product(m, d)), dual_overlap(model), 1e-12);
        EXPECT_GE(cloning_bound(model), 1.0);
        EXPECT_LE(cloning_bound(model), 2.0);
    }
}

} // namespace
