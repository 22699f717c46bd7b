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

#include "risce/harness.hpp"

#include "risce/channel.hpp"
#include "risce/errors.hpp"
#include "risce/forward_model.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstring>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

namespace risce {

double nmse(const CMatrix& truth, const CMatrix& estimate) {
    if (truth.rows() != estimate.rows() || truth.cols() != estimate.cols()) {
        throw DimensionError("nmse: shapes differ");
    }
    const double energy = truth.squaredNorm();
    if (energy == 0.0) throw DegenerateInputError("nmse: true matrix is zero");
    return (truth - estimate).squaredNorm() / energy;
}

double ser(const SymbolFrame& truth, const SymbolFrame& detected) {
    if (truth.X.rows() != detected.X.rows() || truth.X.cols() != detected.X.cols()) {
        throw DimensionError("ser: frame shapes differ");
    }
    if (truth.constellation_order != detected.constellation_order) {
        throw DimensionError("ser: constellation orders differ");
    }
    const Index data = truth.X.rows() * (truth.X.cols() - 1);
    if (data <= 0) return 0.0;
    Index errors = 0;
    for (Index t = 1; t < truth.X.cols(); ++t) {
        for (Index l = 0; l < truth.X.rows(); ++l) {
            if (truth.X(l, t) != detected.X(l, t)) ++errors;
        }
    }
    return static_cast<double>(errors) / static_cast<double>(data);
}

std::vector<std::string> parse_receivers(const std::string& list) {
    static const std::vector<std::string> known{kReceiverTsb, kReceiverTsbFast, kReceiverTals,
                                                kReceiverLs, kReceiverKrf};
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (std::find(known.begin(), known.end(), item) == known.end()) {
            throw ConfigError("unknown receiver '" + item + "'");
        }
        if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
    }
    if (out.empty()) throw ConfigError("no receivers selected");
    return out;
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t snr_index, std::size_t trial_index) {
    return derive_seed({base_seed, static_cast<std::uint64_t>(snr_index),
                        static_cast<std::uint64_t>(trial_index)});
}

namespace {

std::uint64_t fnv1a(std::uint64_t h, const CMatrix& a) {
    const auto* bytes = reinterpret_cast<const unsigned char*>(a.data());
    const std::size_t n = static_cast<std::size_t>(a.size()) * sizeof(cplx);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t receiver_tag(const std::string& label) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

struct Realization {
    ChannelState channel;
    SymbolFrame frame;
    Unfoldings unf;
    std::uint64_t digest = 0;
};

Realization draw_realization(const SystemConfig& cfg, const FrameDesign& design, double snr_db,
                             std::uint64_t seed) {
    Rng rng(seed);
    CMatrix G;
    CMatrix H;
    if (cfg.channel == ChannelKind::Rayleigh) {
        G = rayleigh_channel(cfg.N, cfg.L, rng);
        H = rayleigh_channel(cfg.M, cfg.N, rng);
    } else {
        GeometricChannelParams params;
        params.num_paths = cfg.paths;
        G = sv_channel(cfg.N, cfg.L, params, rng);
        H = sv_channel(cfg.M, cfg.N, params, rng);
    }
    Realization r;
    r.channel = make_channel_state(std::move(G), std::move(H));
    r.frame = generate_symbols(cfg.L, cfg.T, cfg.constellation, rng);
    const ReceivedTensor noisy = add_noise(synthesize(r.channel, design, r.frame), snr_db, rng);
    r.unf = unfold(noisy);

    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = fnv1a(h, r.channel.G);
    h = fnv1a(h, r.channel.H);
    h = fnv1a(h, r.frame.X);
    h = fnv1a(h, r.unf.y3);
    r.digest = h;
    return r;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<TrialResult> run_trial(const SystemConfig& cfg, std::size_t snr_index,
                                   std::size_t trial_index, const HarnessOptions& opts) {
    if (snr_index >= cfg.snr_db.size()) throw ConfigError("run_trial: SNR index out of range");
    const double snr = cfg.snr_db[snr_index];
    const std::uint64_t seed = trial_seed(cfg.base_seed, snr_index, trial_index);
    const FrameDesign design = design_dft_frames(cfg.K, cfg.N, cfg.L);
    const Realization real = draw_realization(cfg, design, snr, seed);
    const CMatrix& theta = real.channel.theta;

    std::optional<PilotBaselineReports> pilots;
    std::string pilot_error;
    double pilot_time = 0.0;

    std::vector<TrialResult> out;
    for (const auto& label : opts.receivers) {
        TrialResult rec;
        rec.receiver = label;
        rec.snr_db = snr;
        rec.trial = static_cast<int>(trial_index);
        rec.seed = seed;
        rec.realization_digest = real.digest;
        const auto start = std::chrono::steady_clock::now();
        try {
            if (label == kReceiverLs || label == kReceiverKrf) {
                if (!pilots && pilot_error.empty()) {
                    try {
                        pilots = pilot_baselines(real.unf, design, cfg, real.frame.X);
                    } catch (const Error& e) {
                        pilot_error = e.what();
                    }
                    pilot_time = seconds_since(start);
                }
                if (!pilots) throw Error(pilot_error);
                const ReceiverReport& rep = label == kReceiverLs ? pilots->ls : pilots->krf;
                rec.nmse_raw = nmse(theta, rep.theta_raw);
                rec.nmse_refined = nmse(theta, rep.theta_hat);
                rec.ser = 0.0;  // symbols are known
                rec.iterations = 0;
                rec.flops = rep.flops;
                rec.wall_time = pilot_time;
            } else {
                BalsOptions als = opts.als;
                if (label == kReceiverTsbFast) als.use_fast_updates = true;
                Rng rx_rng(derive_seed({seed, receiver_tag(label)}));
                const ReceiverReport rep = label == kReceiverTals
                                               ? tals_baseline(real.unf, design, cfg, als, rx_rng)
                                               : tsb(real.unf, design, cfg, als, rx_rng);
                rec.nmse_raw = nmse(theta, rep.theta_raw);
                rec.nmse_refined = nmse(theta, rep.theta_hat);
                rec.ser = ser(real.frame, detect_nearest(rep.X_hat, cfg.constellation));
                rec.iterations = rep.iterations;
                rec.flops = rep.flops;
                rec.wall_time = seconds_since(start);
            }
        } catch (const Error& e) {
            rec.failed = true;
            rec.error = e.what();
            rec.nmse_raw = rec.nmse_refined = rec.ser = std::nan("");
            rec.iterations = 0;
            rec.flops = 0;
            rec.wall_time = seconds_since(start);
        }
        out.push_back(std::move(rec));
    }
    return out;
}

SweepResult run_sweep(const SystemConfig& cfg, const HarnessOptions& opts) {
    const auto report = validate_identifiability(cfg);
    if (!report.ok) {
        throw ConfigError("configuration is not identifiable: " + report.binding_constraint +
                          " violated");
    }
    const std::size_t n_snr = cfg.snr_db.size();
    const std::size_t runs = static_cast<std::size_t>(cfg.runs);
    const std::size_t tasks = n_snr * runs;

    std::vector<std::vector<TrialResult>> slots(tasks);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks; t = next++) {
            slots[t] = run_trial(cfg, t / runs, t % runs, opts);
        }
    };
    unsigned threads = opts.threads != 0 ? opts.threads : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks)));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SweepResult out;
    for (auto& slot : slots) {
        for (auto& rec : slot) out.trials.push_back(std::move(rec));
    }
    out.aggregates = aggregate(out.trials);
    return out;
}

std::vector<AggregateRow> aggregate(const std::vector<TrialResult>& trials) {
    struct Acc {
        AggregateRow row;
        double nmse = 0.0;
        double ser = 0.0;
        double iters = 0.0;
        double flops = 0.0;
        int ok = 0;
    };
    std::vector<Acc> accs;
    std::map<std::pair<std::string, double>, std::size_t> index;
    for (const auto& t : trials) {
        auto key = std::make_pair(t.receiver, t.snr_db);
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(key, accs.size()).first;
            Acc a;
            a.row.receiver = t.receiver;
            a.row.snr_db = t.snr_db;
            accs.push_back(a);
        }
        Acc& a = accs[it->second];
        ++a.row.runs;
        if (t.failed) {
            ++a.row.failed;
            continue;
        }
        ++a.ok;
        a.nmse += t.nmse_refined;
        a.ser += t.ser;
        a.iters += t.iterations;
        a.flops += static_cast<double>(t.flops);
    }
    std::vector<AggregateRow> out;
    out.reserve(accs.size());
    for (auto& a : accs) {
        if (a.ok > 0) {
            a.row.mean_nmse_db = 10.0 * std::log10(a.nmse / a.ok);
            a.row.mean_ser = a.ser / a.ok;
            a.row.mean_iters = a.iters / a.ok;
            a.row.flops = static_cast<std::uint64_t>(std::llround(a.flops / a.ok));
        } else {
            a.row.mean_nmse_db = a.row.mean_ser = a.row.mean_iters = std::nan("");
        }
        out.push_back(a.row);
    }
    return out;
}

}  // namespace risce
