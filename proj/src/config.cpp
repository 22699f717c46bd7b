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

#include "risce/config.hpp"

#include "risce/errors.hpp"
#include "text_util.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace risce {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(const std::string& text, const std::string& key, std::size_t line) {
    T value{};
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError("invalid value '" + text + "' for key '" + key + "'", line);
    }
    return value;
}

int parse_count(const std::string& text, const std::string& key, std::size_t line) {
    const int v = parse_number<int>(text, key, line);
    if (v < 1) throw ParseError("key '" + key + "' must be >= 1", line);
    return v;
}

std::vector<double> parse_list(const std::string& text, const std::string& key, std::size_t line) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ParseError("empty entry in list for key '" + key + "'", line);
        const double v = parse_number<double>(item, key, line);
        if (std::isnan(v)) throw ParseError("NaN in list for key '" + key + "'", line);
        out.push_back(v);
    }
    if (out.empty()) throw ParseError("key '" + key + "' needs at least one value", line);
    return out;
}

}  // namespace

SystemConfig parse_config(std::istream& in) {
    SystemConfig cfg;
    std::set<std::string> seen;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        const std::string text = trim(raw);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", line);
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key.empty()) throw ParseError("missing key", line);
        if (value.empty()) throw ParseError("missing value for key '" + key + "'", line);
        if (!seen.insert(key).second) throw ParseError("duplicate key '" + key + "'", line);

        if (key == "M") {
            cfg.M = parse_count(value, key, line);
        } else if (key == "N") {
            cfg.N = parse_count(value, key, line);
        } else if (key == "L") {
            cfg.L = parse_count(value, key, line);
        } else if (key == "T") {
            cfg.T = parse_count(value, key, line);
        } else if (key == "K") {
            cfg.K = parse_count(value, key, line);
        } else if (key == "snr_db") {
            cfg.snr_db = parse_list(value, key, line);
        } else if (key == "runs") {
            cfg.runs = parse_count(value, key, line);
        } else if (key == "seed") {
            cfg.base_seed = parse_number<std::uint64_t>(value, key, line);
        } else if (key == "constellation") {
            const int order = parse_number<int>(value, key, line);
            if (order != 4 && order != 16 && order != 64) {
                throw ParseError("constellation must be 4, 16 or 64", line);
            }
            cfg.constellation = order;
        } else if (key == "channel") {
            if (value == "sv") {
                cfg.channel = ChannelKind::SalehValenzuela;
            } else if (value == "rayleigh") {
                cfg.channel = ChannelKind::Rayleigh;
            } else {
                throw ParseError("channel must be 'sv' or 'rayleigh'", line);
            }
        } else if (key == "paths") {
            cfg.paths = parse_count(value, key, line);
        } else {
            throw ParseError("unknown key '" + key + "'", line);
        }
    }
    return cfg;
}

SystemConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in);
}

void apply_seed_override(SystemConfig& cfg) {
    const char* env = std::getenv(kSeedEnvVar);
    if (env == nullptr || *env == '\0') return;
    const std::string text(env);
    std::uint64_t seed = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError(std::string(kSeedEnvVar) + " is not an unsigned integer: '" + text + "'");
    }
    cfg.base_seed = seed;
}

std::string to_string(ChannelKind kind) {
    return kind == ChannelKind::Rayleigh ? "rayleigh" : "sv";
}

std::string format_config(const SystemConfig& cfg) {
    std::ostringstream os;
    os << "M = " << cfg.M << "\nN = " << cfg.N << "\nL = " << cfg.L << "\nT = " << cfg.T
       << "\nK = " << cfg.K << "\nsnr_db = ";
    for (std::size_t i = 0; i < cfg.snr_db.size(); ++i) {
        os << (i ? "," : "") << detail::format_double(cfg.snr_db[i]);
    }
    os << "\nruns = " << cfg.runs << "\nseed = " << cfg.base_seed
       << "\nconstellation = " << cfg.constellation << "\nchannel = " << to_string(cfg.channel)
       << "\npaths = " << cfg.paths << "\n";
    return os.str();
}

}  // namespace risce
