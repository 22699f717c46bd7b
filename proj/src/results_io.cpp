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

#include "risce/results_io.hpp"

#include "risce/errors.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace risce {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(line);
    while (std::getline(ss, item, ',')) out.push_back(item);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

void check_header(std::istream& is, const char* expected_text) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty file, expected a header row", 1);
    strip_cr(line);
    const auto expected = split(expected_text);
    const auto found = split(line);
    for (const auto& col : expected) {
        if (std::find(found.begin(), found.end(), col) == found.end()) {
            throw ParseError("missing column '" + col + "'", 1);
        }
    }
    if (found != expected) {
        throw ParseError("header must be exactly '" + std::string(expected_text) + "'", 1);
    }
}

template <typename T>
T parse_field(const std::string& text, const char* column, std::size_t line) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("invalid value '" + text + "' in column '" + column + "'", line);
    }
    return value;
}

bool parse_flag(const std::string& text, const char* column, std::size_t line) {
    if (text == "0") return false;
    if (text == "1") return true;
    throw ParseError("invalid value '" + text + "' in column '" + column + "', expected 0 or 1",
                     line);
}

// Calls fn(fields, line_number) for every non-empty record line.
template <typename Fn>
void for_each_record(std::istream& is, std::size_t columns, Fn fn) {
    std::string line;
    std::size_t number = 1;
    while (std::getline(is, line)) {
        ++number;
        strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split(line);
        if (fields.size() != columns) {
            throw ParseError("expected " + std::to_string(columns) + " fields, found " +
                                 std::to_string(fields.size()),
                             number);
        }
        fn(fields, number);
    }
}

std::ofstream open_out(const std::filesystem::path& p) {
    std::ofstream os(p, std::ios::binary);
    if (!os) throw ConfigError("cannot write '" + p.string() + "'");
    return os;
}

std::ifstream open_in(const std::filesystem::path& p) {
    std::ifstream is(p, std::ios::binary);
    if (!is) throw ConfigError("cannot read '" + p.string() + "'");
    return is;
}

}  // namespace

void write_trials(std::ostream& os, const std::vector<TrialResult>& trials) {
    using detail::format_double;
    os << kTrialsHeader << '\n';
    for (const auto& t : trials) {
        os << t.receiver << ',' << format_double(t.snr_db) << ',' << t.trial << ',' << t.seed
           << ',' << format_double(t.nmse_raw) << ',' << format_double(t.nmse_refined) << ','
           << format_double(t.ser) << ',' << t.iterations << ',' << t.flops << ','
           << (t.failed ? 1 : 0) << '\n';
    }
}

void write_aggregates(std::ostream& os, const std::vector<AggregateRow>& rows) {
    using detail::format_double;
    os << kAggregateHeader << '\n';
    for (const auto& r : rows) {
        os << r.receiver << ',' << format_double(r.snr_db) << ',' << r.runs << ','
           << format_double(r.mean_nmse_db) << ',' << format_double(r.mean_ser) << ','
           << format_double(r.mean_iters) << ',' << r.flops << '\n';
    }
}

std::vector<TrialResult> read_trials(std::istream& is) {
    check_header(is, kTrialsHeader);
    std::vector<TrialResult> out;
    for_each_record(is, 10, [&](const std::vector<std::string>& f, std::size_t line) {
        if (f[0].empty()) throw ParseError("empty value in column 'receiver'", line);
        TrialResult t;
        t.receiver = f[0];
        t.snr_db = parse_field<double>(f[1], "snr_db", line);
        t.trial = parse_field<int>(f[2], "trial", line);
        t.seed = parse_field<std::uint64_t>(f[3], "seed", line);
        t.nmse_raw = parse_field<double>(f[4], "nmse_raw", line);
        t.nmse_refined = parse_field<double>(f[5], "nmse_refined", line);
        t.ser = parse_field<double>(f[6], "ser", line);
        t.iterations = parse_field<int>(f[7], "iterations", line);
        t.flops = parse_field<std::uint64_t>(f[8], "flops", line);
        t.failed = parse_flag(f[9], "failed", line);
        out.push_back(std::move(t));
    });
    return out;
}

std::vector<AggregateRow> read_aggregates(std::istream& is) {
    check_header(is, kAggregateHeader);
    std::vector<AggregateRow> out;
    for_each_record(is, 7, [&](const std::vector<std::string>& f, std::size_t line) {
        if (f[0].empty()) throw ParseError("empty value in column 'receiver'", line);
        AggregateRow r;
        r.receiver = f[0];
        r.snr_db = parse_field<double>(f[1], "snr_db", line);
        r.runs = parse_field<int>(f[2], "runs", line);
        r.mean_nmse_db = parse_field<double>(f[3], "mean_nmse_db", line);
        r.mean_ser = parse_field<double>(f[4], "mean_ser", line);
        r.mean_iters = parse_field<double>(f[5], "mean_iters", line);
        r.flops = parse_field<std::uint64_t>(f[6], "flops", line);
        out.push_back(std::move(r));
    });
    return out;
}

void write_sweep(const std::filesystem::path& dir, const SweepResult& result) {
    std::filesystem::create_directories(dir);
    auto trials = open_out(dir / "trials.csv");
    write_trials(trials, result.trials);
    auto agg = open_out(dir / "aggregate.csv");
    write_aggregates(agg, result.aggregates);
    if (!trials || !agg) throw ConfigError("failed writing results under '" + dir.string() + "'");
}

SweepResult read_sweep(const std::filesystem::path& dir) {
    SweepResult out;
    auto trials = open_in(dir / "trials.csv");
    out.trials = read_trials(trials);
    auto agg = open_in(dir / "aggregate.csv");
    out.aggregates = read_aggregates(agg);
    return out;
}

}  // namespace risce
