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
#include <numbers>
#include <random>

#include "hwenc/coordinates.h"
#include "hwenc/error.h"
#include "oracles.h"

using namespace hwenc;

namespace {

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST(SafeAtan2, Conventions) {
    EXPECT_EQ(safe_atan2(0.0, 0.0), 0.0);
    EXPECT_EQ(safe_atan2(-0.0, 0.0), 0.0);
    EXPECT_DOUBLE_EQ(safe_atan2(-0.0, -1.0), std::numbers::pi);
    EXPECT_DOUBLE_EQ(safe_atan2(1.0, 0.0), std::numbers::pi / 2);
}

TEST(Angles, RealAnglesRebuildTheVector) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = 1 + rng() % 40;
        const auto x = oracle::random_real(rng, d);
        const DataVector v = DataVector::real(x);
        const AngleSet a = angles_real(v);
        ASSERT_EQ(a.thetas.size(), d - 1);
        EXPECT_TRUE(a.phis.empty());
        const auto back = oracle::hyperspherical(a.thetas, {}, v.norm());
        EXPECT_LT(max_diff(back, oracle::sign_free(v.entries)), 1e-12);
    }
}

TEST(Angles, ComplexAnglesRebuildTheVector) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = 1 + rng() % 40;
        const DataVector v = DataVector::complex(oracle::random_complex(rng, d));
        const AngleSet a = angles_complex(v);
        ASSERT_EQ(a.thetas.size(), d - 1);
        ASSERT_EQ(a.phis.size(), d);
        const auto back = oracle::hyperspherical(a.thetas, a.phis, v.norm());
        EXPECT_LT(max_diff(back, v.entries), 1e-12);
        EXPECT_LT(max_diff(reconstruct(a, v.norm()).entries, v.entries), 1e-12);
    }
}

TEST(Angles, PolarAnglesStayInRange) {
    const AngleSet a = angles_real(DataVector::real({-1.0, 2.0, -3.0, -0.5}));
    for (std::size_t i = 0; i + 1 < a.thetas.size(); ++i) {
        EXPECT_GE(a.thetas[i], 0.0);
        EXPECT_LE(a.thetas[i], std::numbers::pi);
    }
    EXPECT_LT(a.thetas.back(), 0.0);  // the last pair keeps the sign of its second entry
}

TEST(Angles, ZeroTailGivesZeroAngles) {
    const AngleSet a = angles_real(DataVector::real({1.0, 0.0, 0.0}));
    EXPECT_EQ(a.thetas, (std::vector<double>{0.0, 0.0}));
    const AngleSet c = angles_complex(DataVector::complex({Complex(0, 2), Complex(0), Complex(0)}));
    EXPECT_EQ(c.thetas, (std::vector<double>{0.0, 0.0}));
    EXPECT_DOUBLE_EQ(c.phis[0], std::numbers::pi / 2);
}

TEST(Angles, PhasesStayBounded) {
    std::mt19937_64 rng(13);
    const AngleSet a = angles_complex(DataVector::complex(oracle::random_complex(rng, 4096)));
    for (double p : a.phis) {
        EXPECT_GT(p, -std::numbers::pi);
        EXPECT_LE(p, std::numbers::pi);
    }
}

TEST(Angles, KnownComplexPair) {
    const AngleSet a = angles_complex(DataVector::complex({Complex(0, 1), Complex(1, 0)}));
    EXPECT_DOUBLE_EQ(a.phis[0], std::numbers::pi / 2);
    EXPECT_DOUBLE_EQ(a.thetas[0], std::numbers::pi / 4);
    EXPECT_DOUBLE_EQ(a.phis[1], std::numbers::pi / 2);
}

TEST(Angles, KnownTwoEntryCase) {
    const AngleSet a = angles_real(DataVector::real({1.0, 1.0}));
    EXPECT_DOUBLE_EQ(a.thetas[0], std::numbers::pi / 4);
}

TEST(DataVector, Validation) {
    EXPECT_THROW(DataVector::real({}).validate(), InvalidArgument);
    EXPECT_THROW(DataVector::real({0.0, 0.0}).validate(), InvalidArgument);
    DataVector bad = DataVector::real({1.0});
    bad.entries[0] = Complex(1.0, 1.0);
    EXPECT_THROW(bad.validate(), InvalidArgument);
    EXPECT_THROW(angles_real(DataVector::complex({Complex(1, 1)})), InvalidArgument);
    EXPECT_NO_THROW(DataVector::real({3.0, 4.0}).validate());
    EXPECT_DOUBLE_EQ(DataVector::real({3.0, 4.0}).norm(), 5.0);
}
