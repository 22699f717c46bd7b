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

#include <stdexcept>
#include <utility>

namespace risce {

using namespace flops;

const StepCost& FlopsBreakdown::step(const std::string& name) const {
    for (const auto& s : steps) {
        if (s.step == name) return s;
    }
    throw std::out_of_range("no step '" + name + "' in " + receiver);
}

void FlopsBreakdown::add(StepCost s) {
    (s.per_iteration ? per_iteration : one_shot) += s.flops;
    steps.push_back(std::move(s));
}

namespace {

struct Dims {
    flops_t M, N, L, T, K;
    explicit Dims(const SystemConfig& c)
        : M(static_cast<flops_t>(c.M)),
          N(static_cast<flops_t>(c.N)),
          L(static_cast<flops_t>(c.L)),
          T(static_cast<flops_t>(c.T)),
          K(static_cast<flops_t>(c.K)) {}
};

// Theta update with a known (or current) X: build F, solve the KT x NL LS,
// apply the pseudo-inverse to the M right-hand sides.
StepCost theta_ls_step(const Dims& d, bool per_iteration) {
    const flops_t KT = d.K * d.T;
    const flops_t NL = d.N * d.L;
    return {"theta-step",
            KT * NL + ls_solve(KT, NL) + matmul(NL, KT, d.M),
            ls_dominant(KT, NL), per_iteration};
}

}  // namespace

FlopsBreakdown flops_bals(const SystemConfig& cfg, bool fast_updates) {
    const Dims d(cfg);
    const flops_t KT = d.K * d.T;
    const flops_t KM = d.K * d.M;
    const flops_t NL = d.N * d.L;
    const flops_t form_E = d.K * matmul(d.L * d.M, d.N, 1) + KM * d.L;

    FlopsBreakdown b;
    b.receiver = fast_updates ? "bals-fast" : "bals";
    if (fast_updates) {
        b.add({"theta-step", KT * NL + matmul(d.M, KT, NL) + NL * d.M, 0, true});
        b.add({"x-step", form_E + d.L * d.M * d.N + matmul(d.L, KM, d.T) + d.L * d.T, 0, true});
    } else {
        b.add(theta_ls_step(d, true));
        b.add({"x-step", form_E + ls_solve(KM, d.L) + matmul(d.L, KM, d.T),
               ls_dominant(KM, d.L), true});
    }
    return b;
}

FlopsBreakdown flops_tals(const SystemConfig& cfg) {
    const Dims d(cfg);
    const flops_t KT = d.K * d.T;
    const flops_t KM = d.K * d.M;
    const flops_t KTM = KT * d.M;
    const flops_t NL = d.N * d.L;

    FlopsBreakdown b;
    b.receiver = "tals";
    // H-step: N x KT system, solved for the M rows of H.
    b.add({"h-step", d.K * matmul(d.N, d.L, d.T) + ls_solve(KT, d.N) + matmul(d.M, KT, d.N),
           ls_dominant(KT, d.N), true});
    // G-step: stacked KTM x NL system for vec(G).
    b.add({"g-step", d.K * d.M * d.N + KTM * NL + ls_solve(KTM, NL) + matmul(NL, KTM, 1),
           ls_dominant(KTM, NL), true});
    // X-step with E(G, H).
    b.add({"x-step", d.K * matmul(d.M, d.N, d.L) + ls_solve(KM, d.L) + matmul(d.L, KM, d.T),
           ls_dominant(KM, d.L), true});
    return b;
}

FlopsBreakdown flops_krf(const SystemConfig& cfg) {
    const Dims d(cfg);
    FlopsBreakdown b;
    b.receiver = "krf";
    b.add({"krf", kKrfSweeps * 2 * d.N * d.M * d.L, 0, false});
    return b;
}

FlopsBreakdown flops_tsb(const SystemConfig& cfg, bool fast_updates) {
    FlopsBreakdown b = flops_bals(cfg, fast_updates);
    b.receiver = fast_updates ? "tsb-fast" : "tsb";
    for (const auto& s : flops_krf(cfg).steps) b.add(s);
    return b;
}

FlopsBreakdown flops_pilot_ls(const SystemConfig& cfg) {
    FlopsBreakdown b;
    b.receiver = "ls";
    b.add(theta_ls_step(Dims(cfg), false));
    return b;
}

FlopsBreakdown flops_pilot_krf(const SystemConfig& cfg) {
    FlopsBreakdown b = flops_pilot_ls(cfg);
    b.receiver = "krf";
    for (const auto& s : flops_krf(cfg).steps) b.add(s);
    return b;
}

}  // namespace risce
