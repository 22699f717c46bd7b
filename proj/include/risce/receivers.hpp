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
//
// Channel/symbol estimators.
//
// Two-stage semi-blind (TSB) receiver:
//   stage 1, BALS: alternate LS updates of the combined channel theta
//            (LM x N) and the symbols X (L x T);
//   stage 2, KRF:  split each column of theta into g_n kron h_n by a
//            rank-one SVD and rebuild theta = G^T khatri_rao H.
// Competitors: trilinear ALS over (H, G, X) and pilot-only LS / LS+KRF.

#pragma once

#include "risce/config.hpp"
#include "risce/forward_model.hpp"
#include "risce/frame.hpp"
#include "risce/linalg.hpp"
#include "risce/rng.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace risce {

enum class InitMode { RandomConstellation, Gaussian };

/// Options shared by the alternating receivers (BALS and TALS).
struct BalsOptions {
    int max_iterations = 500;
    /// Stop when |e(i) - e(i-1)| <= rel_tol * e(i).
    double rel_tol = 1e-6;
    /// Inverse-free updates; requires the semi-unitary DFT design (K >= LN).
    bool use_fast_updates = false;
    InitMode init_mode = InitMode::RandomConstellation;
};

struct ReceiverReport {
    std::string receiver;
    /// Final combined-channel estimate (after KRF when the receiver has that stage).
    CMatrix theta_hat;
    /// Estimate before KRF refinement; equals theta_hat for single-stage receivers.
    CMatrix theta_raw;
    /// Ambiguity-free symbol estimate (empty for pilot-only baselines).
    CMatrix X_hat;
    std::optional<CMatrix> G_hat;
    std::optional<CMatrix> H_hat;
    int iterations = 0;
    /// e(i) = sum_k ||Y_k - model_k||_F^2 after each iteration.
    std::vector<double> residual_trace;
    std::uint64_t flops = 0;
};

// ---- structured building blocks -------------------------------------------

/// F(X) = (I_K kron X^T) Z (KT x NL), assembled block by block.
CMatrix build_F(const CMatrix& X, const CMatrix& Z);

/// unvec_{LM x N}((pinv(F) kron I_M) y3), with the Kronecker factor applied
/// by reshaping. Throws EstimationSingularError when F lacks full column rank.
CMatrix estimate_theta(const CVector& y3, const CMatrix& F, Index M, Index L);

/// E(theta) = [E_1; ...; E_K] (KM x L), E_k = unvec_{M x L}(theta psi_k) diag(lambda_k).
CMatrix build_E(const CMatrix& theta, const FrameDesign& design);

/// Same matrix from the individual channels: E_k = H diag(psi_k) G diag(lambda_k).
CMatrix build_E_from_channels(const CMatrix& G, const CMatrix& H, const FrameDesign& design);

/// pinv(E) Y_(2)^T. Throws EstimationSingularError when E lacks full column rank.
CMatrix estimate_X(const CMatrix& y2t, const CMatrix& E);

/// Inverse-free combined-channel update (1/K) diag(zeta) F(X)^H applied to y3,
/// zeta = 1_N kron [1/||x_1||^2, ..., 1/||x_L||^2] with x_l the l-th row of X.
CMatrix fast_estimate_theta(const CVector& y3, const CMatrix& X, const FrameDesign& design);

/// [phi(theta)]_{l, n M + m} = [theta]_{l M + m, n}; L x NM.
CMatrix remap_phi(const CMatrix& theta, Index M, Index N, Index L);

/// Inverse-free symbol update (1/K) diag(xi) E(theta)^H Y_(2)^T with
/// xi_l = 1 / ||row l of phi(theta)||^2.
CMatrix fast_estimate_X(const CMatrix& y2t, const CMatrix& theta, const FrameDesign& design);

/// ||Y_(2)^T - E X||_F^2, which equals ||vec(Y_(3)^T) - (F(X) kron I_M) vec(theta)||^2
/// when E = E(theta).
double model_residual(const CMatrix& y2t, const CMatrix& E, const CMatrix& X);

struct AmbiguityFreeEstimate {
    CMatrix theta;
    CMatrix X;
};

/// Resolves the diagonal scaling with the all-ones pilot column:
/// D = diag(X_hat(:, 0)), theta <- (D kron I_M) theta_hat, X <- D^-1 X_hat.
/// Throws DegenerateInputError when a pilot entry has magnitude below 1e-12.
AmbiguityFreeEstimate remove_ambiguity(const CMatrix& theta_hat, const CMatrix& X_hat, Index M);

struct KrfResult {
    CMatrix G;      // N x L
    CMatrix H;      // M x N
    CMatrix theta;  // G^T khatri_rao H
};

/// Per-column rank-one factorization of theta_hat (LM x N).
KrfResult krf_decouple(const CMatrix& theta_hat, Index M, Index L, Index N);

// ---- receivers ----------------------------------------------------------

/// Stage 1 only; theta_hat == theta_raw.
ReceiverReport bals(const Unfoldings& unf, const FrameDesign& design, const SystemConfig& cfg,
                    const BalsOptions& opts, Rng& rng);

/// BALS followed by KRF.
ReceiverReport tsb(const Unfoldings& unf, const FrameDesign& design, const SystemConfig& cfg,
                   const BalsOptions& opts, Rng& rng);

/// H (N x KT) system of the TALS H-step: block k = diag(psi_k) G diag(lambda_k) X.
CMatrix tals_h_system(const CMatrix& G, const CMatrix& X, const FrameDesign& design);

/// Stacked (KTM x NL) system of the TALS G-step: block k =
/// (diag(lambda_k) X)^T kron (H diag(psi_k)), so that y3 = B vec(G).
CMatrix tals_g_system(const CMatrix& H, const CMatrix& X, const FrameDesign& design);

/// Trilinear ALS over H, G and X. Fast updates are not used.
ReceiverReport tals_baseline(const Unfoldings& unf, const FrameDesign& design,
                             const SystemConfig& cfg, const BalsOptions& opts, Rng& rng);

struct PilotBaselineReports {
    ReceiverReport ls;
    ReceiverReport krf;
};

/// LS with a fully known symbol matrix, and the same estimate refined by KRF.
PilotBaselineReports pilot_baselines(const Unfoldings& unf, const FrameDesign& design,
                                     const SystemConfig& cfg, const CMatrix& X_known);

}  // namespace risce
