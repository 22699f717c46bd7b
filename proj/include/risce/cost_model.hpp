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
// Analytic operation counts, in complex multiply-adds:
//   LS solve with an I x J full-column-rank matrix: 2 I J^2 + J^3,
//   of which 2 I J^2 is the dominant term;
//   matrix product (I x J)(J x P): I J P.

#pragma once

#include "risce/config.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace risce {

using flops_t = std::uint64_t;

namespace flops {

constexpr flops_t ls_dominant(flops_t rows, flops_t cols) { return 2 * rows * cols * cols; }
constexpr flops_t ls_solve(flops_t rows, flops_t cols) {
    return ls_dominant(rows, cols) + cols * cols * cols;
}
constexpr flops_t matmul(flops_t i, flops_t j, flops_t p) { return i * j * p; }

/// Power-iteration sweeps charged per rank-one SVD (each costs 2 M L).
inline constexpr flops_t kKrfSweeps = 5;

}  // namespace flops

struct StepCost {
    std::string step;
    /// Full count of the step.
    flops_t flops = 0;
    /// Leading LS term (0 for steps without an LS solve).
    flops_t dominant = 0;
    bool per_iteration = true;
};

struct FlopsBreakdown {
    std::string receiver;
    std::vector<StepCost> steps;
    flops_t per_iteration = 0;
    flops_t one_shot = 0;

    flops_t total(flops_t iterations) const { return iterations * per_iteration + one_shot; }
    /// Cost of the named step; throws std::out_of_range if absent.
    const StepCost& step(const std::string& name) const;

    void add(StepCost s);
};

/// BALS stage. Steps: "theta-step", "x-step". With fast updates the LS
/// solves are replaced by the correlation products of the inverse-free form.
FlopsBreakdown flops_bals(const SystemConfig& cfg, bool fast_updates = false);

/// TALS. Steps: "h-step", "g-step", "x-step".
FlopsBreakdown flops_tals(const SystemConfig& cfg);

/// KRF stage, one-shot. Step: "krf".
FlopsBreakdown flops_krf(const SystemConfig& cfg);

/// BALS + KRF.
FlopsBreakdown flops_tsb(const SystemConfig& cfg, bool fast_updates = false);

/// Pilot-only LS (one-shot "theta-step"), optionally followed by KRF.
FlopsBreakdown flops_pilot_ls(const SystemConfig& cfg);
FlopsBreakdown flops_pilot_krf(const SystemConfig& cfg);

}  // namespace risce
