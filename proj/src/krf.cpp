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

#include "risce/cost_model.hpp"
#include "risce/errors.hpp"
#include "risce/receivers.hpp"

#include <cmath>
#include <string>

namespace risce {

KrfResult krf_decouple(const CMatrix& theta_hat, Index M, Index L, Index N) {
    if (theta_hat.rows() != L * M || theta_hat.cols() != N) {
        throw DimensionError("krf_decouple: theta must be (L M) x N");
    }
    KrfResult out;
    out.G.resize(N, L);
    out.H.resize(M, N);
    // Columns are independent rank-one problems: theta_n = vec(h_n g_n^T).
    for (Index n = 0; n < N; ++n) {
        const CVector col = theta_hat.col(n);
        if (col.cwiseAbs().maxCoeff() == 0.0) {
            throw DegenerateInputError("krf_decouple: column " + std::to_string(n) + " is zero");
        }
        const Rank1Factorization f = rank1_truncated_svd(unvec(col, M, L));
        const double root = std::sqrt(f.sigma);
        out.G.row(n) = root * f.v.conjugate().transpose();
        out.H.col(n) = root * f.u;
    }
    out.theta = combine(out.G, out.H);
    return out;
}

PilotBaselineReports pilot_baselines(const Unfoldings& unf, const FrameDesign& design,
                                     const SystemConfig& cfg, const CMatrix& X_known) {
    if (X_known.rows() != cfg.L || X_known.cols() != cfg.T) {
        throw DimensionError("pilot_baselines: X_known must be L x T");
    }
    PilotBaselineReports out;
    const CMatrix theta = estimate_theta(unf.y3, build_F(X_known, build_Z(design)), cfg.M, cfg.L);

    out.ls.receiver = "ls";
    out.ls.theta_raw = theta;
    out.ls.theta_hat = theta;
    out.ls.flops = flops_pilot_ls(cfg).one_shot;

    KrfResult krf = krf_decouple(theta, cfg.M, cfg.L, cfg.N);
    out.krf.receiver = "krf";
    out.krf.theta_raw = theta;
    out.krf.theta_hat = std::move(krf.theta);
    out.krf.G_hat = std::move(krf.G);
    out.krf.H_hat = std::move(krf.H);
    out.krf.flops = flops_pilot_krf(cfg).one_shot;
    return out;
}

}  // namespace risce
