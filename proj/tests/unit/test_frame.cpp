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

#include "risce/config.hpp"
#include "risce/errors.hpp"
#include "risce/frame.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cmath>

using namespace risce;
using risce::test::kron_oracle;

namespace {

cplx dft_power(Index exponent, Index K) {
    const double angle = -2.0 * M_PI * static_cast<double>(exponent % K) / static_cast<double>(K);
    return {std::cos(angle), std::sin(angle)};
}

SystemConfig dims(int M, int N, int L, int T, int K) {
    SystemConfig c;
    c.M = M;
    c.N = N;
    c.L = L;
    c.T = T;
    c.K = K;
    return c;
}

}  // namespace

TEST(DftDesign, FirstRowIsAllOnes) {
    const FrameDesign d = design_dft_frames(64, 32, 2);
    EXPECT_EQ(d.lambda(0), CVector::Ones(2));
    EXPECT_EQ(d.psi(0), CVector::Ones(32));
}

TEST(DftDesign, SmallExample) {
    const FrameDesign d = design_dft_frames(4, 2, 2);
    EXPECT_NEAR(std::abs(d.omega - cplx(0.0, -1.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(d.Lambda(1, 0) - cplx(1.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(d.Lambda(1, 1) - cplx(-1.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(d.Psi(1, 0) - cplx(1.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(d.Psi(1, 1) - cplx(0.0, -1.0)), 0.0, 1e-15);
}

TEST(DftDesign, KronOfRowsIsTruncatedDftRow) {
    for (auto [K, N, L] : {std::tuple{64, 32, 2}, std::tuple{8, 4, 2}, std::tuple{12, 3, 3},
                           std::tuple{5, 4, 2}}) {
        const FrameDesign d = design_dft_frames(K, N, L);
        for (Index k = 0; k < K; ++k) {
            const CMatrix row = kron_oracle(d.lambda(k), d.psi(k));
            for (Index j = 0; j < N * L; ++j) {
                EXPECT_NEAR(std::abs(row(j, 0) - dft_power(k * j, K)), 0.0, 1e-12)
                    << "K=" << K << " k=" << k << " j=" << j;
            }
        }
    }
}

TEST(DftDesign, UnitModulusEntries) {
    const FrameDesign d = design_dft_frames(20, 7, 3);
    EXPECT_LE((d.Lambda.cwiseAbs().array() - 1.0).abs().maxCoeff(), 1e-12);
    EXPECT_LE((d.Psi.cwiseAbs().array() - 1.0).abs().maxCoeff(), 1e-12);
}

TEST(DftDesign, SemiUnitaryWhenEnoughSubframes) {
    for (auto [K, N, L] : {std::tuple{64, 32, 2}, std::tuple{8, 4, 2}, std::tuple{20, 5, 3}}) {
        const FrameDesign d = design_dft_frames(K, N, L);
        EXPECT_TRUE(d.semi_unitary);
        EXPECT_LE((d.Lambda.adjoint() * d.Lambda - K * CMatrix::Identity(L, L)).norm(), 1e-9 * K);
        EXPECT_LE((d.Psi.adjoint() * d.Psi - K * CMatrix::Identity(N, N)).norm(), 1e-9 * K);
    }
    EXPECT_FALSE(design_dft_frames(7, 4, 2).semi_unitary);
}

TEST(BuildZ, Scalar) {
    const CMatrix z = build_Z(design_dft_frames(1, 1, 1));
    ASSERT_EQ(z.rows(), 1);
    ASSERT_EQ(z.cols(), 1);
    EXPECT_EQ(z(0, 0), cplx(1.0));
}

TEST(BuildZ, BlocksMatchDefinition) {
    for (auto [K, N, L] : {std::tuple{2, 2, 1}, std::tuple{6, 3, 2}}) {
        const FrameDesign d = design_dft_frames(K, N, L);
        const CMatrix z = build_Z(d);
        ASSERT_EQ(z.rows(), K * L);
        ASSERT_EQ(z.cols(), N * L);
        for (Index k = 0; k < K; ++k) {
            const CMatrix block =
                kron_oracle(d.psi(k), CMatrix(d.lambda(k).asDiagonal())).transpose();
            EXPECT_LE((CMatrix(z.middleRows(k * L, L)) - block).norm(), 1e-14);
        }
    }
}

TEST(BuildZ, FullColumnRankUnderDftDesign) {
    const CMatrix z = build_Z(design_dft_frames(64, 32, 2));
    EXPECT_EQ(numerical_rank(z), 64);
}

TEST(Qam, FourPointAlphabet) {
    const QamConstellation q(4);
    const double a = 1.0 / std::sqrt(2.0);
    for (const cplx& p : q.points()) {
        EXPECT_NEAR(std::abs(p.real()), a, 1e-15);
        EXPECT_NEAR(std::abs(p.imag()), a, 1e-15);
    }
    EXPECT_EQ(q.points().size(), 4u);
}

TEST(Qam, UnitAverageEnergy) {
    for (int order : {4, 16, 64}) {
        const QamConstellation q(order);
        double e = 0.0;
        for (const cplx& p : q.points()) e += std::norm(p);
        EXPECT_NEAR(e / order, 1.0, 1e-12);
    }
}

TEST(Qam, GrayNeighboursDifferInOneBit) {
    for (int order : {4, 16, 64}) {
        const QamConstellation q(order);
        double dmin = 1e9;
        for (int a = 0; a < order; ++a)
            for (int b = a + 1; b < order; ++b) dmin = std::min(dmin, std::abs(q.point(a) - q.point(b)));
        for (int a = 0; a < order; ++a) {
            for (int b = a + 1; b < order; ++b) {
                if (std::abs(q.point(a) - q.point(b)) < dmin * (1.0 + 1e-9)) {
                    EXPECT_EQ(std::popcount(static_cast<unsigned>(a ^ b)), 1) << a << " " << b;
                }
            }
        }
    }
}

TEST(Qam, UnsupportedOrderThrows) {
    EXPECT_THROW(QamConstellation(8), ConfigError);
    Rng rng(1);
    EXPECT_THROW(generate_symbols(2, 4, 32, rng), ConfigError);
}

TEST(Symbols, PilotColumnIsOnes) {
    Rng rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        const SymbolFrame f = generate_symbols(3, 5, 64, rng);
        ASSERT_EQ(f.X.rows(), 3);
        ASSERT_EQ(f.X.cols(), 5);
        EXPECT_EQ(CVector(f.X.col(0)), CVector::Ones(3));
        EXPECT_EQ(f.constellation_order, 64);
    }
}

TEST(Symbols, EmpiricalEnergy) {
    Rng rng(3);
    const SymbolFrame f = generate_symbols(10, 10001, 64, rng);
    const double e = f.X.rightCols(10000).squaredNorm() / 1e5;
    EXPECT_NEAR(e, 1.0, 0.01);
}

TEST(Symbols, DataEntriesAreConstellationPoints) {
    Rng rng(4);
    const QamConstellation q(16);
    const SymbolFrame f = generate_symbols(2, 50, 16, rng);
    for (Index t = 1; t < 50; ++t) {
        for (Index l = 0; l < 2; ++l) {
            EXPECT_EQ(q.point(q.nearest(f.X(l, t))), f.X(l, t));
        }
    }
}

TEST(Detect, ExactInputUnchanged) {
    Rng rng(5);
    const SymbolFrame f = generate_symbols(2, 20, 64, rng);
    EXPECT_EQ(detect_nearest(f.X, 64).X, f.X);
}

TEST(Detect, SmallPerturbationIsRemoved) {
    Rng rng(6);
    const SymbolFrame f = generate_symbols(2, 40, 64, rng);
    CMatrix noisy = f.X;
    for (Index i = 0; i < noisy.size(); ++i) {
        noisy.data()[i] += 1e-3 * std::polar(1.0, uniform_angle(rng));
    }
    EXPECT_EQ(detect_nearest(noisy, 64).X, f.X);
}

TEST(Detect, GuessingBaseline) {
    // Detection independent of the transmitted symbol is right with probability 1/order.
    Rng rng(7);
    const int order = 16;
    const SymbolFrame f = generate_symbols(4, 5001, order, rng);
    CMatrix noise(4, 5001);
    for (Index i = 0; i < noise.size(); ++i) noise.data()[i] = complex_normal(rng, 1e6);
    const SymbolFrame d = detect_nearest(f.X + noise, order);
    Index wrong = 0;
    for (Index t = 1; t < f.X.cols(); ++t)
        for (Index l = 0; l < 4; ++l) wrong += d.X(l, t) != f.X(l, t) ? 1 : 0;
    const double ser = static_cast<double>(wrong) / (4.0 * 5000.0);
    // Huge noise pushes decisions to the corner points, so only their
    // symbols are ever right; SER must still be close to the guessing rate.
    EXPECT_NEAR(ser, static_cast<double>(order - 1) / order, 0.02);
}

TEST(Identifiability, ReferenceSetup) {
    const auto r = validate_identifiability(dims(8, 32, 2, 4, 64));
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.k_min, 16);
    EXPECT_TRUE(r.k_ge_ln);
    EXPECT_TRUE(r.t_ge_l);
}

TEST(Identifiability, TooFewSubframes) {
    const auto r = validate_identifiability(dims(8, 32, 2, 4, 15));
    EXPECT_FALSE(r.ok);
    EXPECT_FALSE(r.kt_ge_nl);
    EXPECT_EQ(r.binding_constraint, "KT >= NL");
    EXPECT_NE(describe(r).find("KT >= NL"), std::string::npos);
}

TEST(Identifiability, TooFewReceiveAntennas) {
    const auto r = validate_identifiability(dims(1, 1, 2, 4, 1));
    EXPECT_FALSE(r.ok);
    EXPECT_TRUE(r.kt_ge_nl);
    EXPECT_FALSE(r.km_ge_l);
    EXPECT_EQ(r.binding_constraint, "KM >= L");
}

TEST(Identifiability, ScalarSystem) {
    const auto r = validate_identifiability(dims(1, 1, 1, 1, 1));
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.k_min, 1);
}

TEST(Identifiability, BoundaryPassesAndFlagsDesign) {
    const auto r = validate_identifiability(dims(4, 8, 2, 4, 4));
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.k_min, 4);
    EXPECT_FALSE(r.k_ge_ln);
    EXPECT_FALSE(r.k_ge_n);
    EXPECT_EQ(r.notes.size(), 2u);
}

TEST(Identifiability, PilotOnlyBoundary) {
    const auto r = validate_identifiability(dims(4, 4, 2, 1, 8));
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.k_min, 8);
    EXPECT_TRUE(r.k_ge_n);
    EXPECT_TRUE(r.k_ge_ln);
    EXPECT_FALSE(r.t_ge_l);
}

TEST(Identifiability, CoderRankMatchesReport) {
    for (int K : {4, 7, 8, 12}) {
        const FrameDesign d = design_dft_frames(K, 8, 2);
        const Index expected = 2 * std::min<Index>(K, 8);
        EXPECT_EQ(numerical_rank(build_Z(d)), expected) << "K=" << K;
        EXPECT_EQ(validate_identifiability(dims(4, 8, 2, 4, K)).k_ge_n, K >= 8);
    }
}
