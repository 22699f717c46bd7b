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
// Monte Carlo driver. Every trial draws one channel/symbol/noise
// realization and runs all requested receivers on it.

#pragma once

#include "risce/config.hpp"
#include "risce/frame.hpp"
#include "risce/linalg.hpp"
#include "risce/receivers.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace risce {

/// ||truth - estimate||_F^2 / ||truth||_F^2.
double nmse(const CMatrix& truth, const CMatrix& estimate);

/// Fraction of mismatched data symbols; the pilot column is excluded.
double ser(const SymbolFrame& truth, const SymbolFrame& detected);

/// Receiver labels accepted by the harness.
inline constexpr const char* kReceiverTsb = "tsb";
inline constexpr const char* kReceiverTsbFast = "tsb_fast";
inline constexpr const char* kReceiverTals = "tals";
inline constexpr const char* kReceiverLs = "ls";
inline constexpr const char* kReceiverKrf = "krf";

/// Parses a comma list such as "tsb,tals,ls,krf"; throws ConfigError on unknown labels.
std::vector<std::string> parse_receivers(const std::string& list);

struct HarnessOptions {
    std::vector<std::string> receivers{kReceiverTsb, kReceiverTals, kReceiverLs, kReceiverKrf};
    BalsOptions als;
    /// Worker threads for run_sweep; 0 picks hardware_concurrency().
    unsigned threads = 0;
};

struct TrialResult {
    std::string receiver;
    double snr_db = 0.0;
    int trial = 0;
    std::uint64_t seed = 0;
    double nmse_raw = 0.0;
    double nmse_refined = 0.0;
    double ser = 0.0;
    int iterations = 0;
    std::uint64_t flops = 0;
    bool failed = false;
    // Not persisted.
    double wall_time = 0.0;
    std::uint64_t realization_digest = 0;
    std::string error;
};

struct AggregateRow {
    std::string receiver;
    double snr_db = 0.0;
    int runs = 0;
    double mean_nmse_db = 0.0;
    double mean_ser = 0.0;
    double mean_iters = 0.0;
    std::uint64_t flops = 0;
    // Not persisted.
    int failed = 0;
};

struct SweepResult {
    std::vector<TrialResult> trials;
    std::vector<AggregateRow> aggregates;
};

/// Seed of trial `trial_index` at SNR grid point `snr_index`.
std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t snr_index, std::size_t trial_index);

/// One realization at cfg.snr_db[snr_index]; one record per requested receiver.
/// Receiver failures become records with failed = true.
std::vector<TrialResult> run_trial(const SystemConfig& cfg, std::size_t snr_index,
                                   std::size_t trial_index, const HarnessOptions& opts = {});

/// cfg.runs trials at every SNR point.
SweepResult run_sweep(const SystemConfig& cfg, const HarnessOptions& opts = {});

/// Per-(receiver, SNR) means over the non-failed trials, in first-seen order.
/// mean_nmse_db = 10 log10(mean nmse_refined).
std::vector<AggregateRow> aggregate(const std::vector<TrialResult>& trials);

}  // namespace risce
