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

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace risce {

enum class ChannelKind { SalehValenzuela, Rayleigh };

/// Link dimensions and experiment settings.
///
/// M: BS antennas, N: RIS elements, L: UT antennas, T: symbols per
/// sub-frame, K: sub-frames.
struct SystemConfig {
    int M = 8;
    int N = 32;
    int L = 2;
    int T = 4;
    int K = 64;
    std::vector<double> snr_db{0, 5, 10, 15, 20, 25, 30};
    int runs = 200;
    std::uint64_t base_seed = 1;
    int constellation = 64;
    ChannelKind channel = ChannelKind::SalehValenzuela;
    int paths = 1;
};

/// Name of the environment variable that overrides base_seed.
inline constexpr const char* kSeedEnvVar = "RISCE_SEED";

/// Parses `key = value` lines; `#` starts a comment. Recognized keys:
/// M, N, L, T, K, snr_db (comma list), runs, seed, constellation (4|16|64),
/// channel (sv|rayleigh), paths. Unknown keys and malformed values throw
/// ParseError carrying the line number. Keys not present keep their defaults.
SystemConfig parse_config(std::istream& in);
SystemConfig load_config(const std::string& path);

/// Replaces base_seed with the value of RISCE_SEED when set.
void apply_seed_override(SystemConfig& cfg);

std::string to_string(ChannelKind kind);

/// Serializes in the format accepted by parse_config.
std::string format_config(const SystemConfig& cfg);

}  // namespace risce
