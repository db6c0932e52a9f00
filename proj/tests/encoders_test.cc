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

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <set>
#include <map>
#include <string>

#include "hwenc/encoders.h"
#include "hwenc/error.h"
#include "oracles.h"

using namespace hwenc;

namespace {

std::vector<Complex> as_complex(const std::vector<double>& x) { return {x.begin(), x.end()}; }

SparseTuple random_sparse(std::mt19937_64& rng, int n, std::size_t s, bool complex) {
    std::set<std::uint64_t> words;
    while (words.size() < s) words.insert(rng() & ((std::uint64_t{1} << n) - 1));
    std::vector<std::uint64_t> order(words.begin(), words.end());
    std::shuffle(order.begin(), order.end(), rng);
    std::stable_sort(order.begin(), order.end(),
                     [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
    SparseTuple y;
    y.mode = complex ? Mode::kComplex : Mode::kReal;
    const auto vals = complex ? oracle::random_complex(rng, s) : as_complex(oracle::random_real(rng, s));
    for (std::size_t i = 0; i < s; ++i) y.pairs.push_back({vals[i], BitString(n, order[i])});
    return y;
}

std::vector<Complex> values_of(const SparseTuple& y) {
    std::vector<Complex> v;
    for (const auto& e : y.pairs) v.push_back(e.value);
    return v;
}

}  // namespace

TEST(Binomial, SmallValuesAndSaturation) {
    EXPECT_EQ(binomial(6, 2), 15u);
    EXPECT_EQ(binomial(6, 7), 0u);
    EXPECT_EQ(binomial(63, 31), oracle::choose(63, 31));
    EXPECT_EQ(binomial(200, 100), UINT64_MAX);
}

TEST(DenseEncoder, GoldenSixChooseTwoCircuit) {
    std::mt19937_64 rng(1);
    const EncoderReport r = encode_dense_real(6, 2, DataVector::real(oracle::random_real(rng, 15)));
    ASSERT_EQ(r.circuit.gates.size(), 16u);
    EXPECT_EQ(r.circuit.gates[0], Gate::x(5));
    EXPECT_EQ(r.circuit.gates[1], Gate::x(6));
    struct Row {
        int in, out;
        QubitSet ctrls;
    };
    const std::vector<Row> want = {{5, 1, {}}, {1, 2, {}}, {2, 3, {}}, {3, 4, {}}, {6, 5, {4}},
                                   {4, 1, {5}}, {1, 2, {5}}, {2, 3, {5}}, {5, 4, {3}}, {3, 1, {4}},
                                   {1, 2, {4}}, {4, 3, {2}}, {2, 1, {3}}, {3, 2, {1}}};
    for (std::size_t i = 0; i < want.size(); ++i) {
        const Gate& g = r.circuit.gates[i + 2];
        SCOPED_TRACE(i);
        EXPECT_EQ(g.kind, GateKind::kRBS);
        EXPECT_EQ(g.ins, std::vector<int>{want[i].in});
        EXPECT_EQ(g.outs, std::vector<int>{want[i].out});
        EXPECT_EQ(g.ctrls, want[i].ctrls);
    }
    EXPECT_EQ(r.ordering.front().to_string(), "110000");
    EXPECT_EQ(r.ordering.back().to_string(), "000011");
    EXPECT_EQ(r.param_count, 14);
}

TEST(DenseEncoder, RealRoundTrip) {
    std::mt19937_64 rng(2);
    for (int n = 2; n <= 10; ++n) {
        for (int k = 1; k < n; ++k) {
            if (std::min(k, n - k) > 4) continue;
            const std::size_t full = oracle::choose(n, k);
            for (std::size_t d : {full, std::max<std::size_t>(1, full / 2)}) {
                SCOPED_TRACE("n=" + std::to_string(n) + " k=" + std::to_string(k) + " d=" + std::to_string(d));
                const auto x = oracle::random_real(rng, d);
                const EncoderReport r = encode_dense_real(n, k, DataVector::real(x));
                EXPECT_EQ(r.param_count, static_cast<int>(d) - 1);
                EXPECT_EQ(r.circuit.parameter_count(), static_cast<int>(d) - 1);
                EXPECT_EQ(r.ordering.size(), d);
                for (const BitString& b : r.ordering) EXPECT_EQ(b.hamming_weight(), k);
                EXPECT_LT(oracle::load_error(oracle::simulate(r.circuit), r.ordering, oracle::sign_free(as_complex(x))), 1e-10);
            }
        }
    }
}

TEST(DenseEncoder, ComplexRoundTrip) {
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 9; ++n) {
        for (int k = 1; k < n; ++k) {
            if (std::min(k, n - k) > 4) continue;
            const std::size_t d = oracle::choose(n, k);
            SCOPED_TRACE("n=" + std::to_string(n) + " k=" + std::to_string(k));
            const auto x = oracle::random_complex(rng, d);
            const EncoderReport r = encode_dense_complex(n, k, DataVector::complex(x));
            EXPECT_EQ(r.param_count, 2 * static_cast<int>(d) - 1);
            EXPECT_EQ(r.circuit.parameter_count(), 2 * static_cast<int>(d) - 1);
            EXPECT_LT(oracle::load_error(oracle::simulate(r.circuit), r.ordering, x), 1e-10);
        }
    }
}

TEST(DenseEncoder, AllOnesTargetInComplexMode) {
    // d = 1 at k = n: only the phase of the single entry is loaded
    const std::vector<Complex> x = {std::polar(2.0, 0.9)};
    const EncoderReport r = encode_dense_complex(3, 3, DataVector::complex(x));
    EXPECT_LT(oracle::load_error(oracle::simulate(r.circuit), r.ordering, x), 1e-12);
    EXPECT_EQ(r.param_count, 1);
}

TEST(DenseEncoder, MirroredWeightUsesAntiControls) {
    std::mt19937_64 rng(4);
    const auto x = oracle::random_real(rng, 15);
    const EncoderReport r = encode_dense_real(6, 4, DataVector::real(x));
    bool any_anti = false;
    for (const Gate& g : r.circuit.gates) any_anti = any_anti || !g.anti_ctrls.empty();
    EXPECT_TRUE(any_anti);
    EXPECT_EQ(r.ordering.front().to_string(), "001111");
    EXPECT_LT(oracle::load_error(oracle::simulate(r.circuit), r.ordering, as_complex(x)), 1e-10);
}

TEST(DenseEncoder, SupportStaysInsideTheWeightClass) {
    std::mt19937_64 rng(5);
    for (auto [n, k] : {std::pair{6, 2}, std::pair{7, 3}, std::pair{6, 5}}) {
        const EncoderReport r = encode_dense_real(n, k, DataVector::real(oracle::random_real(rng, oracle::choose(n, k))));
        Circuit prefix;
        prefix.n = n;
        for (const Gate& g : r.circuit.gates) {
            prefix.gates.push_back(g);
            if (!g.is_mixing()) continue;
            const auto v = oracle::simulate(prefix);
            for (std::uint64_t w = 0; w < v.size(); ++w)
                if (std::popcount(w) != k) EXPECT_EQ(std::abs(v[w]), 0.0);
        }
    }
}

TEST(DenseEncoder, ControlCensus) {
    for (int n = 2; n <= 12; ++n) {
        for (int k = 1; 2 * k <= n; ++k) {
            const std::size_t d = oracle::choose(n, k);
            const EncoderReport r = encode_dense_real(n, k, DataVector::real(std::vector<double>(d, 1.0)));
            std::map<int, std::uint64_t> census;
            for (const Gate& g : r.circuit.gates)
                if (g.is_mixing()) ++census[g.control_count()];
            std::uint64_t total = 0;
            for (int ell = 0; ell <= k - 1; ++ell) {
                EXPECT_EQ(census[ell], oracle::choose(n - (k - ell), ell + 1)) << n << " " << k << " " << ell;
                total += oracle::choose(n - (k - ell), ell + 1);
            }
            EXPECT_EQ(total, d - 1);
        }
    }
}

TEST(DenseEncoder, Errors) {
    EXPECT_THROW(encode_dense_real(4, 2, DataVector::real(std::vector<double>(7, 1.0))), InvalidArgument);
    EXPECT_THROW(encode_dense_real(4, 5, DataVector::real({1.0})), InvalidArgument);
    EXPECT_THROW(encode_dense_real(4, 2, DataVector::real({0.0, 0.0})), InvalidArgument);
    EXPECT_THROW(encode_dense_real(4, 2, DataVector::complex({Complex(1, 1), Complex(1)})), InvalidArgument);
    EXPECT_THROW(encode_dense_real(0, 0, DataVector::real({1.0})), InvalidArgument);
}

TEST(DenseEncoder, OrderingHelperMatchesTheGenerator) {
    const auto seq = ehrlich_full_sequence(EhrlichState::ones_marked(7, 3));
    const auto ord = dense_ordering(7, 3, 20);
    EXPECT_EQ(ord, std::vector<BitString>(seq.begin(), seq.begin() + 20));
    const auto mirrored = dense_ordering(7, 4, 35);
    for (std::size_t i = 0; i < 35; ++i) EXPECT_EQ(mirrored[i], seq[i].complement());
}

TEST(SparseEncoder, GoldenSevenAddressCircuit) {
    const std::vector<std::string> addr = {"000111", "001011", "001110", "010011", "011010", "100101", "111010"};
    SparseTuple y;
    std::mt19937_64 rng(6);
    const auto vals = oracle::random_real(rng, addr.size());
    for (std::size_t i = 0; i < addr.size(); ++i) y.pairs.push_back({vals[i], BitString::parse(addr[i])});
    const EncoderReport r = encode_sparse(6, y);
    ASSERT_EQ(r.circuit.gates.size(), 9u);
    for (int q = 1; q <= 3; ++q) EXPECT_EQ(r.circuit.gates[q - 1], Gate::x(q));
    struct Row {
        std::vector<int> ins, outs;
        QubitSet ctrls;
    };
    const std::vector<Row> want = {{{3}, {4}, {}},       {{1}, {3}, {4}},          {{3, 4}, {1, 5}, {}},
                                   {{1}, {4}, {5}},      {{2, 4, 5}, {1, 3, 6}, {}}, {{1, 3}, {2, 4, 5}, {6}}};
    for (std::size_t i = 0; i < want.size(); ++i) {
        SCOPED_TRACE(i);
        const Gate& g = r.circuit.gates[i + 3];
        EXPECT_TRUE(g.is_mixing());
        EXPECT_EQ(g.ins, want[i].ins);
        EXPECT_EQ(g.outs, want[i].outs);
        EXPECT_EQ(g.ctrls, want[i].ctrls);
        EXPECT_TRUE(g.anti_ctrls.empty());
    }
    EXPECT_EQ(r.param_count, 6);
    EXPECT_LT(oracle::load_error(oracle::simulate(r.circuit), r.ordering, as_complex(vals)), 1e-10);
}

TEST(SparseEncoder, RandomRoundTrip) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const std::size_t s = 1 + rng() % std::min<std::uint64_t>(20, std::uint64_t{1} << n);
        const bool complex = trial % 3 == 0;
        const SparseTuple y = random_sparse(rng, n, s, complex);
        SCOPED_TRACE("trial " + std::to_string(trial));
        const EncoderReport r = encode_sparse(n, y);
        EXPECT_EQ(r.param_count, complex ? 2 * static_cast<int>(s) - 1 : static_cast<int>(s) - 1);
        EXPECT_LT(oracle::load_error(oracle::simulate(r.circuit), r.ordering, oracle::sign_free(values_of(y))), 1e-10);
    }
}

TEST(SparseEncoder, SingleAddressIsAnXLayer) {
    SparseTuple y;
    y.pairs.push_back({Complex(-3.0), BitString::parse("0101")});
    const EncoderReport r = encode_sparse(4, y);
    EXPECT_EQ(r.param_count, 0);
    EXPECT_EQ(r.circuit.gates.size(), 2u);
}

TEST(SparseEncoder, TwoSameWeightAddresses) {
    SparseTuple y;
    y.pairs = {{Complex(0.6), BitString::parse("0011")}, {Complex(-0.8), BitString::parse("0110")}};
    const EncoderReport r = encode_sparse(4, y);
    ASSERT_EQ(r.circuit.gates.size(), 3u);
    const Gate& g = r.circuit.gates.back();
    EXPECT_EQ(g.ins.size(), g.outs.size());
    EXPECT_DOUBLE_EQ(g.theta, std::atan2(-0.8, 0.6));
}

TEST(SparseEncoder, OrderingErrors) {
    SparseTuple y;
    y.pairs = {{Complex(1), BitString::parse("0111")}, {Complex(1), BitString::parse("0011")}};
    try {
        encode_sparse(4, y);
        FAIL();
    } catch (const InvalidArgument& e) {
        EXPECT_NE(std::string(e.what()).find("0111"), std::string::npos);
    }
    SparseOptions sorted;
    sorted.sort_by_weight = true;
    EXPECT_NO_THROW(encode_sparse(4, y, sorted));
    y.pairs = {{Complex(1), BitString::parse("0011")}, {Complex(1), BitString::parse("0011")}};
    EXPECT_THROW(encode_sparse(4, y), InvalidArgument);
    y.pairs = {{Complex(1), BitString::parse("011")}};
    EXPECT_THROW(encode_sparse(4, y), InvalidArgument);
    EXPECT_THROW(encode_sparse(4, SparseTuple{}), InvalidArgument);
}

TEST(BinaryEncoder, GoldenStageSkeleton) {
    const auto stages = binary_stages(6);
    ASSERT_EQ(stages.size(), 6u);
    const std::vector<std::string> seeds = {"100000", "110000", "000111", "111100", "011111", "111111"};
    const std::vector<std::set<int>> marks = {{1}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4}, {1}, {}};
    const std::vector<int> targets = {6, 6, 3, 3, 5, 1};
    const std::vector<QubitSet> ctrls = {{}, {5}, {1, 2}, {4, 5, 6}, {1, 2, 3, 4}, {2, 3, 4, 5, 6}};
    for (int w = 0; w < 6; ++w) {
        SCOPED_TRACE(w);
        EXPECT_EQ(stages[w].seed.bits.to_string(), seeds[w]);
        EXPECT_EQ(stages[w].seed.marked, marks[w]);
        EXPECT_EQ(stages[w].bridge_target, targets[w]);
        EXPECT_EQ(stages[w].bridge_ctrls, ctrls[w]);
    }

    std::mt19937_64 rng(8);
    const EncoderReport r = encode_binary(6, DataVector::real(oracle::random_real(rng, 64)));
    EXPECT_EQ(r.param_count, 63);
    ASSERT_EQ(r.circuit.gates.size(), 63u);
    const std::vector<std::size_t> bridge_at = {0, 6, 21, 41, 56, 62};
    for (std::size_t i = 0; i < bridge_at.size(); ++i) {
        const Gate& g = r.circuit.gates[bridge_at[i]];
        EXPECT_EQ(g.kind, GateKind::kRy);
        EXPECT_EQ(g.target(), targets[i]);
        EXPECT_EQ(g.ctrls, ctrls[i]);
    }
    // last bitstring of each stage, which the next bridge extends
    const std::vector<std::string> stage_ends = {"010000", "000011", "111000", "001111", "111110", "111111"};
    const std::vector<std::size_t> end_at = {6, 21, 41, 56, 62, 63};
    for (std::size_t i = 0; i < end_at.size(); ++i) EXPECT_EQ(r.ordering[end_at[i]].to_string(), stage_ends[i]);
}

TEST(BinaryEncoder, RoundTrip) {
    std::mt19937_64 rng(9);
    for (int n = 1; n <= 8; ++n) {
        for (bool complex : {false, true}) {
            SCOPED_TRACE("n=" + std::to_string(n) + (complex ? " complex" : " real"));
            const std::size_t d = std::size_t{1} << n;
            const auto x = complex ? oracle::random_complex(rng, d) : as_complex(oracle::random_real(rng, d));
            DataVector v = DataVector::complex(x);
            if (!complex) v.mode = Mode::kReal;
            const EncoderReport r = encode_binary(n, v);
            EXPECT_EQ(r.param_count, complex ? 2 * static_cast<int>(d) - 1 : static_cast<int>(d) - 1);
            EXPECT_LT(oracle::load_error(oracle::simulate(r.circuit), r.ordering, x), 1e-10);
        }
    }
}

TEST(BinaryEncoder, SingleQubit) {
    const EncoderReport r = encode_binary(1, DataVector::real({0.6, 0.8}));
    ASSERT_EQ(r.circuit.gates.size(), 1u);
    EXPECT_EQ(r.circuit.gates[0].kind, GateKind::kRy);
    EXPECT_DOUBLE_EQ(std::cos(r.circuit.gates[0].theta), 0.6);
}

TEST(BinaryEncoder, LengthMismatch) {
    EXPECT_THROW(encode_binary(3, DataVector::real({1.0, 2.0})), InvalidArgument);
}
