// Copyright 2026 The specred Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <numbers>
#include <regex>
#include <set>

#include "specred/basis.hpp"
#include "specred/mutation.hpp"
#include "test_support.hpp"

namespace specred {
namespace {

Circuit two_qubit_example() {
    return parse_circuit("qubits 2\ninput 2\nx 0\nh 0\nh 1\nx 0\nx 1\ncz 0 1\nx 0\nx 1\n");
}

std::vector<Circuit> sample_circuits() {
    return {two_qubit_example(), gen_ring_graph_state(4), gen_grover({3, {0, 1}, std::nullopt}),
            gen_quantum_walk(2, 3), gen_grover({5, {3, 9, 17}, 2})};
}

TEST(MutantSuite, SizesAndOrder) {
    Rng rng(1);
    const auto suite = generate_suite(gen_ring_graph_state(5), "GS-n5-v0", 5, rng);
    ASSERT_EQ(suite.mutants.size(), 15u);
    EXPECT_EQ(suite.program_id, "GS-n5-v0");
    std::set<std::string> ids;
    std::set<double> thetas;
    for (std::size_t i = 0; i < 15; ++i) {
        const auto& m = suite.mutants[i];
        EXPECT_EQ(static_cast<int>(m.op), static_cast<int>(i / 5));
        EXPECT_EQ(m.index, static_cast<int>(i % 5));
        EXPECT_GE(m.qubit, 0);
        EXPECT_LT(m.qubit, 5);
        ids.insert(m.id());
        if (m.op == MutationOp::RY) {
            EXPECT_GT(m.theta, 0.0);
            EXPECT_LT(m.theta, 2 * std::numbers::pi);
            thetas.insert(m.theta);
        }
    }
    EXPECT_EQ(ids.size(), 15u);
    EXPECT_EQ(thetas.size(), 5u);
}

TEST(MutantSuite, SingleQubitAlwaysTargetsZero) {
    Circuit c;
    c.num_qubits = 1;
    c.gates = {Gate::h(0)};
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        for (const auto& m : generate_suite(c, "p", 1, rng).mutants) EXPECT_EQ(m.qubit, 0);
    }
}

TEST(MutantSuite, DeterministicForSeed) {
    const auto c = gen_grover({4, {1, 6}, std::nullopt});
    Rng a(77), b(77);
    const auto s1 = generate_suite(c, "p", 5, a);
    const auto s2 = generate_suite(c, "p", 5, b);
    ASSERT_EQ(s1.mutants.size(), s2.mutants.size());
    for (std::size_t i = 0; i < s1.mutants.size(); ++i) EXPECT_EQ(s1.mutants[i].id(), s2.mutants[i].id());
}

TEST(MutantSuite, RejectsNonPositiveCount) {
    Rng rng(0);
    EXPECT_THROW(generate_suite(gen_ring_graph_state(3), "p", 0, rng), std::invalid_argument);
}

TEST(MutantSuite, QubitChoiceIsRoughlyUniform) {
    Rng rng(3);
    std::vector<int> hits(4, 0);
    for (int i = 0; i < 400; ++i)
        for (const auto& m : generate_suite(gen_ring_graph_state(4), "p", 5, rng).mutants) ++hits[m.qubit];
    // 6000 draws, 1500 expected per qubit, sd about 34.
    for (int h : hits) EXPECT_NEAR(h, 1500, 200);
}

TEST(Mutant, IdFormat) {
    Mutant x{MutationOp::X, 0, 2, 0.0};
    EXPECT_EQ(x.id(), "X0-q2");
    Mutant z{MutationOp::Z, 4, 0, 0.0};
    EXPECT_EQ(z.id(), "Z4-q0");
    Mutant r{MutationOp::RY, 2, 1, std::numbers::pi};
    EXPECT_EQ(r.id(), "RY2-q1-t3.141593");
    const std::regex pattern("(X|Z|RY)[0-9]+-q[0-9]+(-t[0-9]+\\.[0-9]{6})?");
    Rng rng(8);
    for (const auto& m : generate_suite(gen_ring_graph_state(6), "p", 5, rng).mutants)
        EXPECT_TRUE(std::regex_match(m.id(), pattern)) << m.id();
}

TEST(Mutant, OperatorNames) {
    for (auto op : {MutationOp::X, MutationOp::Z, MutationOp::RY}) EXPECT_EQ(parse_mutation_op(to_string(op)), op);
    EXPECT_THROW(parse_mutation_op("Y"), std::invalid_argument);
}

TEST(ApplyMutant, AppendsOneGateAtTheEnd) {
    const auto c = gen_ring_graph_state(3);
    const auto m = apply_mutant(c, {MutationOp::RY, 0, 2, 0.3});
    ASSERT_EQ(m.gates.size(), c.gates.size() + 1);
    EXPECT_TRUE(std::equal(c.gates.begin(), c.gates.end(), m.gates.begin()));
    EXPECT_EQ(m.gates.back(), Gate::ry(0.3, 2));
    EXPECT_THROW(apply_mutant(c, {MutationOp::X, 0, 3, 0.0}), std::invalid_argument);
}

TEST(ApplyMutant, XOnExampleProgramGivesFaultyState) {
    const auto s = simulate(apply_mutant(two_qubit_example(), {MutationOp::X, 0, 1, 0.0}));
    const auto want = testing::signed_uniform(2, {{0, 1}, {1, -1}, {2, 1}, {3, 1}});
    EXPECT_LT((s.amplitudes() - want.amplitudes()).norm(), 1e-12);
}

TEST(ApplyMutant, ZLeavesProbabilitiesExactlyInvariant) {
    for (const auto& c : sample_circuits()) {
        const auto p = probabilities(simulate(c));
        for (int q = 0; q < c.num_qubits; ++q) {
            const auto pz = probabilities(simulate(apply_mutant(c, {MutationOp::Z, 0, q, 0.0})));
            EXPECT_EQ(pz, p) << q;
        }
    }
}

TEST(ApplyMutant, XPermutesByBitFlip) {
    for (const auto& c : sample_circuits()) {
        const int n = c.num_qubits;
        const auto p = probabilities(simulate(c));
        for (int q = 0; q < n; ++q) {
            const auto px = probabilities(simulate(apply_mutant(c, {MutationOp::X, 0, q, 0.0})));
            const std::uint64_t flip = std::uint64_t{1} << (n - 1 - q);
            for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j)
                EXPECT_EQ(px(static_cast<Eigen::Index>(j)), p(static_cast<Eigen::Index>(j ^ flip)));
        }
    }
}

TEST(ApplyMutant, RyPiMatchesXProbabilities) {
    for (const auto& c : sample_circuits()) {
        for (int q = 0; q < c.num_qubits; ++q) {
            const auto px = probabilities(simulate(apply_mutant(c, {MutationOp::X, 0, q, 0.0})));
            const auto pr = probabilities(simulate(apply_mutant(c, {MutationOp::RY, 0, q, std::numbers::pi})));
            EXPECT_LT((px - pr).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}

TEST(ApplyMutant, SmallRotationIsCloseToOriginal) {
    for (const auto& c : sample_circuits()) {
        const auto p = probabilities(simulate(c));
        for (int q = 0; q < c.num_qubits; ++q) {
            const auto pr = probabilities(simulate(apply_mutant(c, {MutationOp::RY, 0, q, 1e-3})));
            EXPECT_LT(0.5 * (p - pr).cwiseAbs().sum(), 1e-3);
        }
    }
}

// Under H on qubit q, a Z mutant on q moves the transformed distribution the
// same way an X mutant moves the untransformed one.
TEST(ApplyMutant, ZUnderHadamardActsAsBitFlip) {
    for (const auto& c : sample_circuits()) {
        const int n = c.num_qubits;
        for (int q = 0; q < n; ++q) {
            std::string text(static_cast<std::size_t>(n), '1');
            text[static_cast<std::size_t>(q)] = 'h';
            const auto mask = parse_mask(text);
            const auto base = probabilities(apply_basis_transform(simulate(c), mask));
            const auto mut =
                probabilities(apply_basis_transform(simulate(apply_mutant(c, {MutationOp::Z, 0, q, 0.0})), mask));
            const std::uint64_t flip = std::uint64_t{1} << (n - 1 - q);
            for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j)
                EXPECT_NEAR(mut(static_cast<Eigen::Index>(j)), base(static_cast<Eigen::Index>(j ^ flip)), 1e-12);
        }
    }
}

TEST(MutationScore, Examples) {
    EXPECT_DOUBLE_EQ(mutation_score(15, 15), 100.0);
    EXPECT_DOUBLE_EQ(mutation_score(0, 15), 0.0);
    EXPECT_DOUBLE_EQ(mutation_score(9, 15), 60.0);
    EXPECT_THROW(mutation_score(0, 0), std::invalid_argument);
    EXPECT_THROW(mutation_score(16, 15), std::invalid_argument);
}

}  // namespace
}  // namespace specred
