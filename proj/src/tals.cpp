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

#include "als_common.hpp"
#include "risce/cost_model.hpp"
#include "risce/receivers.hpp"

namespace risce {

CMatrix tals_h_system(const CMatrix& G, const CMatrix& X, const FrameDesign& design) {
    const Index N = G.rows();
    const Index T = X.cols();
    if (G.cols() != X.rows() || design.N() != N || design.L() != G.cols()) {
        throw DimensionError("tals_h_system: G, X and design disagree");
    }
    const Index K = design.K();
    CMatrix A(N, K * T);
    for (Index k = 0; k < K; ++k) {
        A.middleCols(k * T, T).noalias() =
            design.Psi.row(k).asDiagonal() * G * design.Lambda.row(k).asDiagonal() * X;
    }
    return A;
}

CMatrix tals_g_system(const CMatrix& H, const CMatrix& X, const FrameDesign& design) {
    const Index M = H.rows();
    const Index N = H.cols();
    const Index L = X.rows();
    const Index T = X.cols();
    if (design.N() != N || design.L() != L) {
        throw DimensionError("tals_g_system: H, X and design disagree");
    }
    const Index K = design.K();
    CMatrix B(K * T * M, N * L);
    for (Index k = 0; k < K; ++k) {
        const CMatrix left = (design.Lambda.row(k).asDiagonal() * X).transpose();  // T x L
        const CMatrix right = H * design.Psi.row(k).asDiagonal();                  // M x N
        B.middleRows(k * T * M, T * M) = kron(left, right);
    }
    return B;
}

ReceiverReport tals_baseline(const Unfoldings& unf, const FrameDesign& design,
                             const SystemConfig& cfg, const BalsOptions& opts, Rng& rng) {
    detail::check_options(opts);
    detail::check_identifiable(cfg);
    if (unf.M != cfg.M || unf.T != cfg.T || unf.K != cfg.K || design.K() != cfg.K ||
        design.N() != cfg.N || design.L() != cfg.L) {
        throw DimensionError("tals: data, design and config dimensions disagree");
    }

    CMatrix G(cfg.N, cfg.L);
    for (Index j = 0; j < G.cols(); ++j) {
        for (Index i = 0; i < G.rows(); ++i) G(i, j) = complex_normal(rng);
    }
    CMatrix X = detail::initial_symbols(cfg.L, cfg.T, cfg.constellation, opts.init_mode, rng);
    CMatrix H;
    CMatrix E;
    detail::ConvergenceMonitor monitor(opts.rel_tol, unf.y3.squaredNorm());
    const auto Yw = unf.wide();

    int iter = 0;
    while (iter < opts.max_iterations) {
        ++iter;
        // H-step: H A = [Y_1, ..., Y_K], solved as A^T H^T = [Y_1, ..., Y_K]^T.
        const LeastSquares hs = lstsq(tals_h_system(G, X, design).transpose(), Yw.transpose());
        if (hs.rank < cfg.N) {
            throw EstimationSingularError("tals: H-step system is rank deficient", hs.rank, cfg.N,
                                          iter);
        }
        H = hs.solution.transpose();

        // G-step: y3 = B vec(G).
        const LeastSquares gs = lstsq(tals_g_system(H, X, design), unf.y3);
        if (gs.rank < cfg.N * cfg.L) {
            throw EstimationSingularError("tals: G-step system is rank deficient", gs.rank,
                                          cfg.N * cfg.L, iter);
        }
        G = unvec(gs.solution, cfg.N, cfg.L);

        // X-step with E(G, H).
        E = build_E_from_channels(G, H, design);
        try {
            X = estimate_X(unf.y2t, E);
        } catch (const EstimationSingularError& e) {
            throw e.at_iteration(iter);
        }
        if (monitor.push(model_residual(unf.y2t, E, X))) break;
    }

    // Pilot column fixes the scaling: G diag(lambda) X = (G D) diag(lambda) (D^-1 X).
    const CVector pilot = X.col(0);
    auto fixed = remove_ambiguity(combine(G, H), X, cfg.M);
    G = G * pilot.asDiagonal();

    ReceiverReport r;
    r.receiver = "tals";
    r.theta_hat = combine(G, H);
    r.theta_raw = r.theta_hat;
    r.X_hat = std::move(fixed.X);
    r.G_hat = std::move(G);
    r.H_hat = std::move(H);
    r.iterations = iter;
    r.residual_trace = monitor.take_trace();
    r.flops = flops_tals(cfg).total(static_cast<flops_t>(iter));
    return r;
}

}  // namespace risce
