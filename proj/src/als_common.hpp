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

#pragma once

#include "risce/errors.hpp"
#include "risce/frame.hpp"
#include "risce/receivers.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace risce::detail {

// Residuals at or below this fraction of the data energy count as an exact
// fit (noiseless data); the relative-change rule is meaningless there.
inline constexpr double kExactFitFloor = 1e-26;

class ConvergenceMonitor {
  public:
    ConvergenceMonitor(double rel_tol, double data_energy)
        : rel_tol_(rel_tol), floor_(kExactFitFloor * data_energy) {}

    /// Records e(i); true once the stopping rule is met.
    bool push(double e) {
        trace_.push_back(e);
        if (e <= floor_) return true;
        if (trace_.size() < 2) return false;
        const double prev = trace_[trace_.size() - 2];
        return std::abs(e - prev) <= rel_tol_ * e;
    }

    std::vector<double> take_trace() { return std::move(trace_); }

  private:
    double rel_tol_;
    double floor_;
    std::vector<double> trace_;
};

inline void check_options(const BalsOptions& opts) {
    if (opts.max_iterations < 1) throw ConfigError("max_iterations must be >= 1");
    if (!(opts.rel_tol > 0.0)) throw ConfigError("rel_tol must be > 0");
}

inline void check_identifiable(const SystemConfig& cfg) {
    const auto report = validate_identifiability(cfg);
    if (!report.ok) {
        throw ConfigError("configuration is not identifiable: " + report.binding_constraint +
                          " violated");
    }
}

/// Random starting symbol matrix with the all-ones pilot column.
inline CMatrix initial_symbols(int L, int T, int order, InitMode mode, Rng& rng) {
    if (mode == InitMode::RandomConstellation) return generate_symbols(L, T, order, rng).X;
    CMatrix X(L, T);
    for (Index t = 0; t < T; ++t) {
        for (Index l = 0; l < L; ++l) X(l, t) = complex_normal(rng);
    }
    X.col(0).setOnes();
    return X;
}

}  // namespace risce::detail
