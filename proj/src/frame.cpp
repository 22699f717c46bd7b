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

#include "risce/frame.hpp"

#include "risce/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace risce {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// omega^e with the exponent reduced mod K first, so entries stay unit modulus
// to machine precision however large e gets.
cplx dft_power(long long e, int K) {
    const long long r = ((e % K) + K) % K;
    return std::polar(1.0, -kTwoPi * static_cast<double>(r) / K);
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

FrameDesign design_dft_frames(int K, int N, int L) {
    if (K < 1 || N < 1 || L < 1) throw DimensionError("design_dft_frames: K, N, L must be >= 1");
    FrameDesign d;
    d.omega = dft_power(1, K);
    d.Lambda.resize(K, L);
    d.Psi.resize(K, N);
    for (int k = 0; k < K; ++k) {
        for (int l = 0; l < L; ++l) d.Lambda(k, l) = dft_power(1LL * k * N * l, K);
        for (int n = 0; n < N; ++n) d.Psi(k, n) = dft_power(1LL * k * n, K);
    }
    d.semi_unitary = K >= L * N;
    return d;
}

CMatrix build_Z(const FrameDesign& design) {
    const Index K = design.K();
    const Index L = design.L();
    const Index N = design.N();
    // Block k is (psi_k kron diag(lambda_k))^T; its only nonzeros sit at
    // (l, n L + l) with value psi_k[n] lambda_k[l].
    CMatrix Z = CMatrix::Zero(K * L, N * L);
    for (Index k = 0; k < K; ++k) {
        for (Index n = 0; n < N; ++n) {
            for (Index l = 0; l < L; ++l) {
                Z(k * L + l, n * L + l) = design.Psi(k, n) * design.Lambda(k, l);
            }
        }
    }
    return Z;
}

SymbolFrame generate_symbols(int L, int T, int order, Rng& rng) {
    if (L < 1 || T < 1) throw DimensionError("generate_symbols: L and T must be >= 1");
    const QamConstellation qam(order);
    std::uniform_int_distribution<int> pick(0, order - 1);
    SymbolFrame f;
    f.constellation_order = order;
    f.X.resize(L, T);
    for (int t = 0; t < T; ++t) {
        for (int l = 0; l < L; ++l) f.X(l, t) = qam.point(pick(rng));
    }
    f.X.col(0).setOnes();
    return f;
}

SymbolFrame detect_nearest(const CMatrix& X_hat, int order) {
    const QamConstellation qam(order);
    SymbolFrame f;
    f.constellation_order = order;
    f.X.resize(X_hat.rows(), X_hat.cols());
    for (Index t = 0; t < X_hat.cols(); ++t) {
        for (Index l = 0; l < X_hat.rows(); ++l) f.X(l, t) = qam.point(qam.nearest(X_hat(l, t)));
    }
    if (f.X.cols() > 0) f.X.col(0).setOnes();
    return f;
}

IdentifiabilityReport validate_identifiability(const SystemConfig& cfg) {
    IdentifiabilityReport r;
    if (cfg.M < 1 || cfg.N < 1 || cfg.L < 1 || cfg.T < 1 || cfg.K < 1) {
        r.binding_constraint = "dimensions >= 1";
        return r;
    }
    const long long KT = 1LL * cfg.K * cfg.T;
    const long long NL = 1LL * cfg.N * cfg.L;
    const long long KM = 1LL * cfg.K * cfg.M;
    r.k_min = std::max(ceil_div(cfg.N * cfg.L, cfg.T), ceil_div(cfg.L, cfg.M));
    r.kt_ge_nl = KT >= NL;
    r.km_ge_l = KM >= cfg.L;
    r.k_ge_ln = cfg.K >= cfg.L * cfg.N;
    r.k_ge_n = cfg.K >= cfg.N;
    r.t_ge_l = cfg.T >= cfg.L;
    r.ok = r.kt_ge_nl && r.km_ge_l;
    if (!r.kt_ge_nl) {
        r.binding_constraint = "KT >= NL";
    } else if (!r.km_ge_l) {
        r.binding_constraint = "KM >= L";
    }
    if (!r.k_ge_n) {
        r.notes.push_back("K < N: DFT coding matrix Z has rank K L < N L; theta cannot be "
                          "estimated with this design");
    }
    if (!r.k_ge_ln) {
        r.notes.push_back("K < LN: DFT coding is not semi-unitary; fast updates unavailable");
    }
    if (!r.t_ge_l) {
        r.notes.push_back("T < L: symbol matrix cannot have full row rank");
    }
    return r;
}

std::string describe(const IdentifiabilityReport& r) {
    std::ostringstream os;
    os << "identifiable: " << (r.ok ? "yes" : "no") << "\n";
    if (!r.ok) os << "binding constraint: " << r.binding_constraint << "\n";
    os << "K_min: " << r.k_min << "\n"
       << "KT >= NL: " << (r.kt_ge_nl ? "yes" : "no") << "\n"
       << "KM >= L: " << (r.km_ge_l ? "yes" : "no") << "\n"
       << "K >= N (full-rank coding matrix): " << (r.k_ge_n ? "yes" : "no") << "\n"
       << "K >= LN (semi-unitary design): " << (r.k_ge_ln ? "yes" : "no") << "\n"
       << "T >= L (full row-rank X): " << (r.t_ge_l ? "yes" : "no") << "\n";
    for (const auto& note : r.notes) os << "note: " << note << "\n";
    return os.str();
}

}  // namespace risce
