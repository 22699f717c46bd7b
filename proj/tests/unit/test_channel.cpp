// SPDX-License-Identifier: Apache-2.0
//
// risce: semi-blind channel estimation for RIS-assisted MIMO links
// Copyright (C) 2026 The risce authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "risce/channel.hpp"
#include "risce/errors.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace risce;
using risce::test::kron_oracle;
using risce::test::random_matrix;

namespace {

std::vector<double> singular_values(const CMatrix& a) {
    Eigen::JacobiSVD<CMatrix> svd(a);
    const auto& s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

Index rank_of(const CMatrix& a) {
    const auto s = singular_values(a);
    Index r = 0;
    for (double v : s) r += v > 1e-10 * s.front() ? 1 : 0;
    return r;
}

}  // namespace

TEST(UlaSteering, UnitNormAndPhaseProgression) {
    const CVector a = ula_steering(8, 0.3);
    EXPECT_NEAR(a.norm(), 1.0, 1e-14);
    const cplx step = std::exp(cplx(0.0, -M_PI * std::sin(0.3)));
    for (Index m = 1; m < 8; ++m) EXPECT_NEAR(std::abs(a(m) - a(m - 1) * step), 0.0, 1e-14);
}

TEST(SvChannel, SinglePathIsRankOne) {
    Rng rng(1);
    GeometricChannelParams p;
    for (int trial = 0; trial < 20; ++trial) {
        const CMatrix h = sv_channel(8, 32, p, rng);
        ASSERT_EQ(h.rows(), 8);
        ASSERT_EQ(h.cols(), 32);
        const auto s = singular_values(h);
        EXPECT_GT(s[0], 0.0);
        EXPECT_LT(s[1] / s[0], 1e-10);
    }
}

TEST(SvChannel, ScalarArray) {
    Rng rng(2);
    GeometricChannelParams p;
    double energy = 0.0;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) {
        const CMatrix h = sv_channel(1, 1, p, rng);
        ASSERT_EQ(h.size(), 1);
        energy += std::norm(h(0, 0));
    }
    // |entry|^2 of a CN(0, 1) gain is exponential with unit mean.
    EXPECT_NEAR(energy / draws, 1.0, 0.05);
}

TEST(SvChannel, MeanEnergyIsRxTimesTx) {
    Rng rng(3);
    for (int paths : {1, 3}) {
        GeometricChannelParams p;
        p.num_paths = paths;
        double energy = 0.0;
        const int draws = 10000;
        for (int i = 0; i < draws; ++i) energy += sv_channel(4, 3, p, rng).squaredNorm();
        EXPECT_NEAR(energy / draws / 12.0, 1.0, 0.05) << paths << " paths";
    }
}

TEST(SvChannel, DeterministicGivenSeed) {
    GeometricChannelParams p;
    p.num_paths = 2;
    Rng a(42), b(42);
    EXPECT_EQ(sv_channel(4, 6, p, a), sv_channel(4, 6, p, b));
}

TEST(SvChannel, InvalidArguments) {
    Rng rng(4);
    GeometricChannelParams p;
    EXPECT_THROW(sv_channel(0, 2, p, rng), DimensionError);
    p.num_paths = 0;
    EXPECT_THROW(sv_channel(2, 2, p, rng), ConfigError);
}

TEST(RayleighChannel, Moments) {
    Rng rng(5);
    const CMatrix h = rayleigh_channel(100, 100, rng);
    const double n = static_cast<double>(h.size());
    const cplx mean = h.sum() / n;
    // Standard error of the mean of a CN(0, 1) sample: 1 / sqrt(n).
    EXPECT_LT(std::abs(mean), 3.0 / std::sqrt(n));
    EXPECT_NEAR(h.squaredNorm() / n, 1.0, 0.05);
}

TEST(RayleighChannel, FullRank) {
    Rng rng(6);
    const CMatrix h = rayleigh_channel(8, 5, rng);
    EXPECT_GT(singular_values(h).back(), 1e-10);
}

TEST(Combine, SingleElementIsKron) {
    Rng rng(7);
    const CMatrix g = random_matrix(1, 3, rng);  // N = 1, L = 3
    const CMatrix h = random_matrix(4, 1, rng);  // M = 4
    EXPECT_EQ(combine(g, h), kron_oracle(g.transpose(), h));
}

TEST(Combine, OnesAndIdentity) {
    const Index N = 3, L = 2, M = 3;
    const CMatrix theta = combine(CMatrix::Ones(N, L), CMatrix::Identity(M, N));
    ASSERT_EQ(theta.rows(), L * M);
    ASSERT_EQ(theta.cols(), N);
    for (Index n = 0; n < N; ++n) {
        for (Index l = 0; l < L; ++l) {
            for (Index m = 0; m < M; ++m) {
                EXPECT_EQ(theta(l * M + m, n), m == n ? cplx(1.0) : cplx(0.0));
            }
        }
    }
}

TEST(Combine, ColumnsAreKronOfFactors) {
    Rng rng(8);
    const CMatrix g = random_matrix(5, 2, rng);
    const CMatrix h = random_matrix(3, 5, rng);
    const ChannelState ch = make_channel_state(g, h);
    for (Index n = 0; n < 5; ++n) {
        const CMatrix expected = kron_oracle(g.row(n).transpose(), h.col(n));
        EXPECT_LE((CMatrix(ch.theta.col(n)) - expected).norm(), 1e-12);
    }
}

TEST(Combine, FullColumnRankWhenHIsFullRank) {
    Rng rng(9);
    const CMatrix g = random_matrix(4, 2, rng);
    const CMatrix h = random_matrix(6, 4, rng);
    EXPECT_EQ(rank_of(combine(g, h)), 4);
}

TEST(Combine, KhatriRaoRankBound) {
    Rng rng(10);
    for (int trial = 0; trial < 100; ++trial) {
        const Index N = 1 + trial % 4;
        const Index L = 1 + (trial / 4) % 3;
        const Index M = 1 + (trial / 12) % 3;
        const Index rg = 1 + trial % std::min(N, L);
        const Index rh = 1 + (trial / 3) % std::min(M, N);
        const CMatrix g = random_matrix(N, rg, rng) * random_matrix(rg, L, rng);
        const CMatrix h = random_matrix(M, rh, rng) * random_matrix(rh, N, rng);
        const Index bound = std::min(rank_of(g) + rank_of(h) - 1, N);
        EXPECT_GE(rank_of(combine(g, h)), bound);
    }
}

TEST(Combine, InnerDimensionMismatchThrows) {
    EXPECT_THROW(combine(CMatrix::Ones(3, 2), CMatrix::Ones(4, 4)), DimensionError);
}
