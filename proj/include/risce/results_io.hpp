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
// Comma-separated results files. Doubles are written in shortest
// round-trip form, so write -> read -> write reproduces the same bytes.

#pragma once

#include "risce/harness.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace risce {

inline constexpr const char* kTrialsHeader =
    "receiver,snr_db,trial,seed,nmse_raw,nmse_refined,ser,iterations,flops,failed";
inline constexpr const char* kAggregateHeader =
    "receiver,snr_db,runs,mean_nmse_db,mean_ser,mean_iters,flops";

void write_trials(std::ostream& os, const std::vector<TrialResult>& trials);
void write_aggregates(std::ostream& os, const std::vector<AggregateRow>& rows);

/// Throws ParseError naming a missing column, or carrying the line number of a bad record.
std::vector<TrialResult> read_trials(std::istream& is);
std::vector<AggregateRow> read_aggregates(std::istream& is);

/// Writes trials.csv and aggregate.csv under dir (created if needed).
void write_sweep(const std::filesystem::path& dir, const SweepResult& result);
/// Reads both files back; aggregates are taken from aggregate.csv as written.
SweepResult read_sweep(const std::filesystem::path& dir);

}  // namespace risce
