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

#include "risce/errors.hpp"
#include "risce/receivers.hpp"

#include <string>

namespace risce {

namespace {

constexpr double kPilotFloor = 1e-12;

void require_semi_unitary(const FrameDesign& design, const char* who) {
    if (!design.semi_unitary) {
        throw ConfigError(std::string(who) + ": inverse-free update needs K >= L N (K=" +
                          std::to_string(design.K()) + ", L=" + std::to_string(design.L()) +
                          ", N=" + std::to_string(design.N()) + ")");
    }
}

}  // namespace

CMatrix build_F(const CMatrix& X, const CMatrix& Z) {
    const Index L = X.rows();
    const Index T = X.cols();
    if (L == 0 || Z.rows() % L != 0) {
        throw DimensionError("build_F: Z has " + std::to_string(Z.rows()) +
                             " rows, not a multiple of L=" + std::to_string(L));
    }
    const Index K = Z.rows() / L;
    CMatrix F(K * T, Z.cols());
    const CMatrix Xt = X.transpose();
    for (Index k = 0; k < K; ++k) {
        F.middleRows(k * T, T).noalias() = Xt * Z.middleRows(k * L, L);
    }
    return F;
}

CMatrix estimate_theta(const CVector& y3, const CMatrix& F, Index M, Index L) {
    const Index KT = F.rows();
    const Index NL = F.cols();
    if (M < 1 || L < 1 || y3.size() != KT * M || NL % L != 0) {
        throw DimensionError("estimate_theta: y3 (" + std::to_string(y3.size()) +
                             ") does not match F (" + std::to_string(KT) + "x" +
                             std::to_string(NL) + ") with M=" + std::to_string(M));
    }
    const PseudoInverse W = pinv_with_rank(F);
    if (W.rank < NL) throw EstimationSingularError("estimate_theta: F(X) is rank deficient", W.rank, NL);
    // (W kron I_M) vec(Yw) = vec(Yw W^T)
    const Eigen::Map<const CMatrix> Yw(y3.data(), M, KT);
    const CMatrix R = Yw * W.matrix.transpose();
    return Eigen::Map<const CMatrix>(R.data(), L * M, NL / L);
}

CMatrix build_E(const CMatrix& theta, const FrameDesign& design) {
    const Index L = design.L();
    const Index N = design.N();
    if (theta.cols() != N || theta.rows() % L != 0) {
        throw DimensionError("build_E: theta is " + std::to_string(theta.rows()) + "x" +
                             std::to_string(theta.cols()) + ", expected (L M) x N with L=" +
                             std::to_string(L) + ", N=" + std::to_string(N));
    }
    const Index M = theta.rows() / L;
    const Index K = design.K();
    CMatrix E(K * M, L);
    CVector col(L * M);
    for (Index k = 0; k < K; ++k) {
        col.noalias() = theta * design.Psi.row(k).transpose();
        const Eigen::Map<const CMatrix> omega(col.data(), M, L);
        E.middleRows(k * M, M) = omega * design.Lambda.row(k).asDiagonal();
    }
    return E;
}

CMatrix build_E_from_channels(const CMatrix& G, const CMatrix& H, const FrameDesign& design) {
    const Index M = H.rows();
    if (H.cols() != G.rows() || H.cols() != design.N() || G.cols() != design.L()) {
        throw DimensionError("build_E_from_channels: G, H and design disagree");
    }
    const Index K = design.K();
    CMatrix E(K * M, G.cols());
    for (Index k = 0; k < K; ++k) {
        E.middleRows(k * M, M).noalias() =
            H * design.Psi.row(k).asDiagonal() * G * design.Lambda.row(k).asDiagonal();
    }
    return E;
}

CMatrix estimate_X(const CMatrix& y2t, const CMatrix& E) {
    if (y2t.rows() != E.rows()) {
        throw DimensionError("estimate_X: Y_(2)^T has " + std::to_string(y2t.rows()) +
                             " rows but E has " + std::to_string(E.rows()));
    }
    const PseudoInverse W = pinv_with_rank(E);
    if (W.rank < E.cols()) {
        throw EstimationSingularError("estimate_X: E(theta) is rank deficient", W.rank, E.cols());
    }
    return W.matrix * y2t;
}

CMatrix fast_estimate_theta(const CVector& y3, const CMatrix& X, const FrameDesign& design) {
    require_semi_unitary(design, "fast_estimate_theta");
    const Index L = design.L();
    const Index N = design.N();
    const Index K = design.K();
    const Index T = X.cols();
    if (X.rows() != L || T == 0 || y3.size() % (K * T) != 0) {
        throw DimensionError("fast_estimate_theta: X or y3 does not match the design");
    }
    const Index M = y3.size() / (K * T);

    const Eigen::VectorXd row_energy = X.rowwise().squaredNorm();
    for (Index l = 0; l < L; ++l) {
        if (row_energy(l) == 0.0) {
            throw DegenerateInputError("fast_estimate_theta: symbol row " + std::to_string(l) +
                                       " is zero");
        }
    }
    // zeta = 1_N kron [1/||x_1||^2, ..., 1/||x_L||^2]
    Eigen::VectorXd zeta(N * L);
    for (Index n = 0; n < N; ++n) zeta.segment(n * L, L) = row_energy.cwiseInverse();

    const CMatrix F = build_F(X, build_Z(design));
    const Eigen::Map<const CMatrix> Yw(y3.data(), M, K * T);
    // (diag(zeta) F^H kron I_M) vec(Yw) = vec(Yw conj(F) diag(zeta))
    CMatrix R = Yw * F.conjugate();
    R = R * zeta.asDiagonal();
    R /= static_cast<double>(K);
    return Eigen::Map<const CMatrix>(R.data(), L * M, N);
}

CMatrix remap_phi(const CMatrix& theta, Index M, Index N, Index L) {
    if (theta.rows() != L * M || theta.cols() != N) {
        throw DimensionError("remap_phi: theta must be (L M) x N");
    }
    CMatrix out(L, N * M);
    for (Index n = 0; n < N; ++n) {
        for (Index l = 0; l < L; ++l) {
            for (Index m = 0; m < M; ++m) out(l, n * M + m) = theta(l * M + m, n);
        }
    }
    return out;
}

CMatrix fast_estimate_X(const CMatrix& y2t, const CMatrix& theta, const FrameDesign& design) {
    require_semi_unitary(design, "fast_estimate_X");
    const Index L = design.L();
    const Index N = design.N();
    const Index K = design.K();
    if (theta.cols() != N || theta.rows() % L != 0) {
        throw DimensionError("fast_estimate_X: theta does not match the design");
    }
    const Index M = theta.rows() / L;
    const Eigen::VectorXd energy = remap_phi(theta, M, N, L).rowwise().squaredNorm();
    for (Index l = 0; l < L; ++l) {
        if (energy(l) == 0.0) {
            throw DegenerateInputError("fast_estimate_X: row " + std::to_string(l) +
                                       " of phi(theta) is zero");
        }
    }
    const CMatrix E = build_E(theta, design);
    if (y2t.rows() != E.rows()) throw DimensionError("fast_estimate_X: Y_(2)^T does not match E");
    CMatrix X = E.adjoint() * y2t;
    X = energy.cwiseInverse().asDiagonal() * X;
    X /= static_cast<double>(K);
    return X;
}

double model_residual(const CMatrix& y2t, const CMatrix& E, const CMatrix& X) {
    return (y2t - E * X).squaredNorm();
}

AmbiguityFreeEstimate remove_ambiguity(const CMatrix& theta_hat, const CMatrix& X_hat, Index M) {
    const Index L = X_hat.rows();
    if (X_hat.cols() < 1 || theta_hat.rows() != L * M) {
        throw DimensionError("remove_ambiguity: theta must have L M rows and X a pilot column");
    }
    AmbiguityFreeEstimate out{theta_hat, X_hat};
    for (Index l = 0; l < L; ++l) {
        const cplx d = X_hat(l, 0);
        if (std::abs(d) < kPilotFloor) {
            throw DegenerateInputError("remove_ambiguity: pilot entry " + std::to_string(l) +
                                       " is numerically zero");
        }
        out.theta.middleRows(l * M, M) *= d;
        out.X.row(l) /= d;
        out.X(l, 0) = 1.0;
    }
    return out;
}

}  // namespace risce
