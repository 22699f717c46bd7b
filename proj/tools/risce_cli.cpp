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
// Command-line front end: simulate, sweep, flops, validate.

#include "risce/config.hpp"
#include "risce/cost_model.hpp"
#include "risce/errors.hpp"
#include "risce/frame.hpp"
#include "risce/harness.hpp"
#include "risce/results_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

constexpr int kPaperRuns = 10000;

struct RunFlags {
    std::string config;
    int runs = 0;
    bool paper_runs = false;
    bool fast_updates = false;
    std::string receivers = "tsb,tals,ls,krf";
    unsigned threads = 0;
    int max_iterations = 500;
    double rel_tol = 1e-6;
};

void add_run_flags(CLI::App* app, RunFlags& f) {
    app->add_option("--config", f.config, "Configuration file")->required();
    app->add_option("--runs", f.runs, "Monte Carlo runs per SNR point (overrides the config)")
        ->check(CLI::PositiveNumber);
    app->add_flag("--paper-runs", f.paper_runs, "Use 10000 runs per SNR point");
    app->add_flag("--fast-updates", f.fast_updates, "Use the inverse-free BALS updates for tsb");
    app->add_option("--receivers", f.receivers, "Comma list from tsb,tsb_fast,tals,ls,krf");
    app->add_option("--threads", f.threads, "Worker threads (0 = all cores)");
    app->add_option("--max-iter", f.max_iterations, "Iteration cap of the ALS receivers")
        ->check(CLI::PositiveNumber);
    app->add_option("--tol", f.rel_tol, "Relative residual-change stopping tolerance")
        ->check(CLI::PositiveNumber);
}

risce::SystemConfig load(const std::string& path) {
    risce::SystemConfig cfg = risce::load_config(path);
    risce::apply_seed_override(cfg);
    return cfg;
}

risce::SweepResult run(const RunFlags& f, risce::SystemConfig& cfg) {
    if (f.paper_runs) cfg.runs = kPaperRuns;
    if (f.runs > 0) cfg.runs = f.runs;
    risce::HarnessOptions opts;
    opts.receivers = risce::parse_receivers(f.receivers);
    if (f.fast_updates) {
        for (auto& r : opts.receivers) {
            if (r == risce::kReceiverTsb) r = risce::kReceiverTsbFast;
        }
    }
    opts.threads = f.threads;
    opts.als.max_iterations = f.max_iterations;
    opts.als.rel_tol = f.rel_tol;
    return risce::run_sweep(cfg, opts);
}

int report_failures(const risce::SweepResult& res) {
    int failed = 0;
    for (const auto& a : res.aggregates) failed += a.failed;
    if (failed > 0) std::cerr << failed << " trial(s) failed and were excluded from the means\n";
    return failed;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || item.empty() || v < 1) {
            throw risce::ConfigError("invalid N value '" + item + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) throw risce::ConfigError("empty N list");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semi-blind channel estimation for RIS-assisted MIMO links"};
    app.require_subcommand(1);

    RunFlags sim;
    auto* simulate = app.add_subcommand("simulate", "Run a Monte Carlo sweep, print aggregates");
    add_run_flags(simulate, sim);
    std::string sim_trials;
    simulate->add_option("--trials-out", sim_trials, "Also write per-trial records to this file");

    RunFlags swp;
    std::string out_dir;
    auto* sweep = app.add_subcommand("sweep", "Run a sweep and write trials.csv, aggregate.csv");
    add_run_flags(sweep, swp);
    sweep->add_option("--out", out_dir, "Output directory")->required();

    std::string flops_config;
    std::string sweep_n = "16,32,64,128";
    int flops_iters = 1;
    auto* flops = app.add_subcommand("flops", "Analytic operation counts of TSB and TALS");
    flops->add_option("--config", flops_config, "Configuration file")->required();
    flops->add_option("--sweep-n", sweep_n, "Comma list of RIS sizes N");
    flops->add_option("--iterations", flops_iters, "Iterations charged to both receivers")
        ->check(CLI::PositiveNumber);

    std::string validate_config;
    auto* validate = app.add_subcommand("validate", "Check a configuration for identifiability");
    validate->add_option("--config", validate_config, "Configuration file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*simulate) {
            auto cfg = load(sim.config);
            const auto res = run(sim, cfg);
            risce::write_aggregates(std::cout, res.aggregates);
            if (!sim_trials.empty()) {
                std::ofstream os(sim_trials, std::ios::binary);
                if (!os) throw risce::ConfigError("cannot write '" + sim_trials + "'");
                risce::write_trials(os, res.trials);
            }
            report_failures(res);
            return 0;
        }
        if (*sweep) {
            auto cfg = load(swp.config);
            const auto res = run(swp, cfg);
            risce::write_sweep(out_dir, res);
            std::ofstream(std::filesystem::path(out_dir) / "config.cfg") << risce::format_config(cfg);
            std::cout << "wrote " << res.trials.size() << " trial records and "
                      << res.aggregates.size() << " aggregate rows to " << out_dir << "\n";
            report_failures(res);
            return 0;
        }
        if (*flops) {
            auto cfg = load(flops_config);
            const auto it = static_cast<risce::flops_t>(flops_iters);
            std::cout << "N,bals_per_iter,tals_per_iter,tsb_total,tals_total,gap,ratio,"
                         "g_step_over_theta_step\n";
            for (int n : parse_int_list(sweep_n)) {
                cfg.N = n;
                const auto bals = risce::flops_bals(cfg);
                const auto tals = risce::flops_tals(cfg);
                const auto tsb = risce::flops_tsb(cfg);
                const double ratio = static_cast<double>(tals.total(it)) /
                                     static_cast<double>(tsb.total(it));
                const double dom = static_cast<double>(tals.step("g-step").dominant) /
                                   static_cast<double>(bals.step("theta-step").dominant);
                std::cout << n << ',' << bals.per_iteration << ',' << tals.per_iteration << ','
                          << tsb.total(it) << ',' << tals.total(it) << ','
                          << tals.total(it) - tsb.total(it) << ',' << std::fixed
                          << std::setprecision(4) << ratio << ',' << dom << '\n'
                          << std::defaultfloat;
            }
            return 0;
        }
        if (*validate) {
            const auto cfg = load(validate_config);
            const auto report = risce::validate_identifiability(cfg);
            std::cout << risce::describe(report);
            return report.ok ? 0 : 2;
        }
    } catch (const risce::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
