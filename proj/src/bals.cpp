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

ReceiverReport bals(const Unfoldings& unf, const FrameDesign& design, const SystemConfig& cfg,
                    const BalsOptions& opts, Rng& rng) {
    detail::check_options(opts);
    detail::check_identifiable(cfg);
    if (unf.M != cfg.M || unf.T != cfg.T || unf.K != cfg.K || design.K() != cfg.K ||
        design.N() != cfg.N || design.L() != cfg.L) {
        throw DimensionError("bals: data, design and config dimensions disagree");
    }
    if (opts.use_fast_updates && !design.semi_unitary) {
        throw ConfigError("bals: fast updates need K >= L N");
    }

    const CMatrix Z = build_Z(design);
    CMatrix X = detail::initial_symbols(cfg.L, cfg.T, cfg.constellation, opts.init_mode, rng);
    CMatrix theta;
    detail::ConvergenceMonitor monitor(opts.rel_tol, unf.y3.squaredNorm());

    int iter = 0;
    while (iter < opts.max_iterations) {
        ++iter;
        try {
            if (opts.use_fast_updates) {
                theta = fast_estimate_theta(unf.y3, X, design);
                X = fast_estimate_X(unf.y2t, theta, design);
            } else {
                theta = estimate_theta(unf.y3, build_F(X, Z), cfg.M, cfg.L);
                X = estimate_X(unf.y2t, build_E(theta, design));
            }
        } catch (const EstimationSingularError& e) {
            throw e.at_iteration(iter);
        }
        if (monitor.push(model_residual(unf.y2t, build_E(theta, design), X))) break;
    }

    auto fixed = remove_ambiguity(theta, X, cfg.M);
    ReceiverReport r;
    r.receiver = opts.use_fast_updates ? "bals-fast" : "bals";
    r.theta_raw = fixed.theta;
    r.theta_hat = std::move(fixed.theta);
    r.X_hat = std::move(fixed.X);
    r.iterations = iter;
    r.residual_trace = monitor.take_trace();
    r.flops = flops_bals(cfg, opts.use_fast_updates).total(static_cast<flops_t>(iter));
    return r;
}

ReceiverReport tsb(const Unfoldings& unf, const FrameDesign& design, const SystemConfig& cfg,
                   const BalsOptions& opts, Rng& rng) {
    ReceiverReport r = bals(unf, design, cfg, opts, rng);
    KrfResult krf = krf_decouple(r.theta_raw, cfg.M, cfg.L, cfg.N);
    r.receiver = opts.use_fast_updates ? "tsb-fast" : "tsb";
    r.theta_hat = std::move(krf.theta);
    r.G_hat = std::move(krf.G);
    r.H_hat = std::move(krf.H);
    r.flops += flops_krf(cfg).one_shot;
    return r;
}

}  // namespace risce
