// Copyright 2026 The hwenc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "hwenc/compiler.h"
#include "hwenc/encoders.h"
#include "hwenc/error.h"
#include "hwenc/simulator.h"
#include "oracles.h"

using namespace hwenc;

namespace {

Circuit random_circuit(std::mt19937_64& rng, int n, int gates) {
    Circuit c;
    c.n = n;
    for (int i = 0; i < gates; ++i) c.gates.push_back(oracle::random_gate(rng, n));
    return c;
}

double max_diff(const SparseState& s, const std::vector<Complex>& dense) {
    double d = 0.0;
    for (std::uint64_t w = 0; w < dense.size(); ++w) d = std::max(d, std::abs(s.amplitude(w) - dense[w]));
    return d;
}

// Ry(t) = exp(-i t Y), so Ry(pi/4)|0> is an equal superposition.
Circuit plus_state(int n) {
    Circuit c;
    c.n = n;
    for (int q = 1; q <= n; ++q) c.gates.push_back(Gate::ry(q, std::numbers::pi / 4));
    return c;
}

}  // namespace

TEST(SparseState, BasisAndQueries) {
    const SparseState s = SparseState::basis(3, 5);
    EXPECT_EQ(s.amplitude(5), Complex(1.0));
    EXPECT_EQ(s.amplitude(BitString::parse("101")), Complex(1.0));
    EXPECT_EQ(s.amplitude(2), Complex(0.0));
    EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
    EXPECT_EQ(s.support(), std::vector<std::uint64_t>{5});
}

TEST(SparseState, AgreesWithDenseOracle) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const Circuit c = random_circuit(rng, n, 1 + static_cast<int>(rng() % 12));
        const auto want = oracle::simulate(c);
        const SparseState s = run(c);
        EXPECT_LT(max_diff(s, want), 1e-11) << trial;
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
        const auto dense = run_dense(c);
        double d = 0.0;
        for (std::size_t w = 0; w < want.size(); ++w) d = std::max(d, std::abs(dense[w] - want[w]));
        EXPECT_LT(d, 1e-11) << trial;
    }
}

TEST(SparseState, LoweredCircuitsMatchUpToPhase) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 40; ++trial) {
        const Circuit c = random_circuit(rng, 4, 5);
        const LoweringReport low = lower(c);
        const auto a = oracle::simulate(c);
        const auto b = run_dense(low.circuit);
        EXPECT_LT(oracle::phase_deviation({a}, {b}), 1e-9) << trial;
    }
}

TEST(SparseState, StaysSparseForEncoders) {
    std::mt19937_64 rng(33);
    const auto x = oracle::random_real(rng, 15);
    const SparseState s = run(encode_dense_real(6, 2, DataVector::real(x)).circuit);
    EXPECT_EQ(s.amps.size(), 15u);
    for (std::uint64_t w : s.support()) EXPECT_EQ(std::popcount(w), 2);
}

TEST(SparseState, InitialStateWidthIsChecked) {
    Circuit c;
    c.n = 3;
    EXPECT_THROW(run(c, SparseState::basis(2)), InvalidArgument);
    const SparseState s = run(c, SparseState::basis(3, 6));
    EXPECT_EQ(s.support(), std::vector<std::uint64_t>{6});
}

TEST(Sampling, DeterministicAndComplete) {
    const SparseState s = run(plus_state(3));
    const auto a = sample(s, 8000, 17);
    const auto b = sample(s, 8000, 17);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, sample(s, 8000, 18));
    long total = 0;
    for (const auto& [bits, n] : a) {
        total += n;
        EXPECT_NEAR(n / 8000.0, 0.125, 5 * std::sqrt(0.125 * 0.875 / 8000));
    }
    EXPECT_EQ(total, 8000);
    EXPECT_EQ(a.size(), 8u);
    EXPECT_THROW(sample(s, 0, 1), InvalidArgument);
}

TEST(Sampling, OnlyTheSupportAppears) {
    const auto counts = sample(SparseState::basis(4, 9), 100, 1);
    ASSERT_EQ(counts.size(), 1u);
    EXPECT_EQ(counts.begin()->first, BitString::parse("1001"));
    EXPECT_EQ(counts.begin()->second, 100);
}

TEST(Probabilities, SumToOne) {
    std::mt19937_64 rng(34);
    const auto p = probabilities(run(random_circuit(rng, 5, 8)));
    double total = 0.0;
    for (const auto& [bits, v] : p) total += v;
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(NoiseSpec, Parsing) {
    EXPECT_EQ(parse_noise("none").p2, 0.0);
    EXPECT_EQ(parse_noise("").p2, 0.0);
    EXPECT_DOUBLE_EQ(parse_noise("depol:0.01").p2, 0.01);
    EXPECT_DOUBLE_EQ(parse_noise("depol:0").p2, 0.0);
    for (const char* bad : {"depol:", "depol:1", "depol:-0.1", "depol:0.1x", "amp:0.1", "depol"}) {
        EXPECT_THROW(parse_noise(bad), InvalidArgument) << bad;
    }
}

TEST(NoisyRun, NeedsACnotLevelCircuit) {
    EXPECT_THROW(run_noisy(plus_state(2), {0.01, 0}, 10), InvalidArgument);
    Circuit c = lower(plus_state(2)).circuit;
    EXPECT_THROW(run_noisy(c, {0.01, 0}, 0), InvalidArgument);
    EXPECT_THROW(run_noisy(c, {1.0, 0}, 10), InvalidArgument);
}

TEST(NoisyRun, NoiselessMatchesIdealDistribution) {
    std::mt19937_64 rng(35);
    const auto x = oracle::random_real(rng, 10);
    const Circuit c = lower(encode_dense_real(5, 2, DataVector::real(x)).circuit).circuit;
    const auto ideal = probabilities(run(c));
    const long shots = 100000;
    const auto counts = run_noisy(c, {0.0, 0}, shots, 5);
    long total = 0;
    for (const auto& [bits, n] : counts) {
        total += n;
        ASSERT_TRUE(ideal.count(bits)) << bits.to_string();
    }
    EXPECT_EQ(total, shots);
    for (const auto& [bits, p] : ideal) {
        const auto it = counts.find(bits);
        const double f = it == counts.end() ? 0.0 : it->second / static_cast<double>(shots);
        EXPECT_NEAR(f, p, 5 * std::sqrt(p * (1 - p) / shots) + 1e-12) << bits.to_string();
    }
}

TEST(NoisyRun, SingleCnotFlipStatistics) {
    // |00> through one CNOT: only the Pauli pair lands, 3 of the 15 leave 00 untouched
    Circuit c;
    c.n = 2;
    c.level = Level::kCnot;
    c.gates.push_back(Gate::cnot(1, 2));
    const double p = 0.5;
    const long shots = 100000;
    const auto counts = run_noisy(c, {p, 0}, shots, 9);
    auto freq = [&](const char* s) {
        const auto it = counts.find(BitString::parse(s));
        return it == counts.end() ? 0.0 : it->second / static_cast<double>(shots);
    };
    const double want00 = 1 - p + p * 3 / 15;
    const double want_each = p * 4 / 15;
    const double tol = 5 * std::sqrt(0.25 / shots);
    EXPECT_NEAR(freq("00"), want00, tol);
    EXPECT_NEAR(freq("01"), want_each, tol);
    EXPECT_NEAR(freq("10"), want_each, tol);
    EXPECT_NEAR(freq("11"), want_each, tol);
}

TEST(NoisyRun, SeedControlsTheTrajectories) {
    std::mt19937_64 rng(36);
    const Circuit c = lower(random_circuit(rng, 4, 6)).circuit;
    const NoiseModel m{0.05, 123};
    EXPECT_EQ(run_noisy(c, m, 2000), run_noisy(c, m, 2000));
    EXPECT_EQ(run_noisy(c, m, 2000), run_noisy(c, {0.05, 7}, 2000, 123));
    EXPECT_NE(run_noisy(c, m, 2000, 1), run_noisy(c, m, 2000, 2));
}

TEST(Seeds, DerivedSeedsAreDistinct) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t s : {0ULL, 1ULL, 7ULL}) {
        for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(s, i));
    }
    EXPECT_EQ(seen.size(), 3000u);
    EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
    EXPECT_NE(derive_seed(7, 0), 7u);
}
