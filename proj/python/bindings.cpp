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
// Python module risce._core.

#include "risce/channel.hpp"
#include "risce/config.hpp"
#include "risce/cost_model.hpp"
#include "risce/errors.hpp"
#include "risce/forward_model.hpp"
#include "risce/frame.hpp"
#include "risce/harness.hpp"
#include "risce/linalg.hpp"
#include "risce/receivers.hpp"
#include "risce/results_io.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <sstream>

namespace py = pybind11;
using namespace risce;

namespace {

SystemConfig link_config(Index M, Index N, Index L, Index T, Index K, int constellation) {
    SystemConfig cfg;
    cfg.M = static_cast<int>(M);
    cfg.N = static_cast<int>(N);
    cfg.L = static_cast<int>(L);
    cfg.T = static_cast<int>(T);
    cfg.K = static_cast<int>(K);
    cfg.constellation = constellation;
    return cfg;
}

Unfoldings unfold_slices(const std::vector<CMatrix>& slices) {
    if (slices.empty()) throw DimensionError("at least one slice is required");
    ReceivedTensor Y;
    Y.slices = slices;
    for (const auto& s : Y.slices) {
        if (s.rows() != Y.slices.front().rows() || s.cols() != Y.slices.front().cols()) {
            throw DimensionError("all slices must have the same shape");
        }
    }
    return unfold(Y);
}

py::dict report_dict(const ReceiverReport& r) {
    py::dict d;
    d["receiver"] = r.receiver;
    d["theta"] = r.theta_hat;
    d["theta_raw"] = r.theta_raw;
    d["X"] = r.X_hat;
    d["G"] = r.G_hat ? py::cast(*r.G_hat) : py::none();
    d["H"] = r.H_hat ? py::cast(*r.H_hat) : py::none();
    d["iterations"] = r.iterations;
    d["residuals"] = r.residual_trace;
    d["flops"] = r.flops;
    return d;
}

py::dict trial_dict(const TrialResult& t) {
    py::dict d;
    d["receiver"] = t.receiver;
    d["snr_db"] = t.snr_db;
    d["trial"] = t.trial;
    d["seed"] = t.seed;
    d["nmse_raw"] = t.nmse_raw;
    d["nmse_refined"] = t.nmse_refined;
    d["ser"] = t.ser;
    d["iterations"] = t.iterations;
    d["flops"] = t.flops;
    d["failed"] = t.failed;
    d["wall_time"] = t.wall_time;
    d["realization_digest"] = t.realization_digest;
    d["error"] = t.error;
    return d;
}

py::dict aggregate_dict(const AggregateRow& a) {
    py::dict d;
    d["receiver"] = a.receiver;
    d["snr_db"] = a.snr_db;
    d["runs"] = a.runs;
    d["mean_nmse_db"] = a.mean_nmse_db;
    d["mean_ser"] = a.mean_ser;
    d["mean_iters"] = a.mean_iters;
    d["flops"] = a.flops;
    d["failed"] = a.failed;
    return d;
}

TrialResult trial_from_dict(const py::dict& d) {
    TrialResult t;
    t.receiver = d["receiver"].cast<std::string>();
    t.snr_db = d["snr_db"].cast<double>();
    t.trial = d["trial"].cast<int>();
    t.seed = d["seed"].cast<std::uint64_t>();
    t.nmse_raw = d["nmse_raw"].cast<double>();
    t.nmse_refined = d["nmse_refined"].cast<double>();
    t.ser = d["ser"].cast<double>();
    t.iterations = d["iterations"].cast<int>();
    t.flops = d["flops"].cast<std::uint64_t>();
    t.failed = d["failed"].cast<bool>();
    return t;
}

HarnessOptions harness_options(const std::vector<std::string>& receivers, unsigned threads) {
    HarnessOptions opts;
    if (!receivers.empty()) opts.receivers = receivers;
    opts.threads = threads;
    return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Semi-blind channel estimation for RIS-assisted MIMO links";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    py::class_<SystemConfig>(m, "SystemConfig")
        .def(py::init<>())
        .def_readwrite("M", &SystemConfig::M)
        .def_readwrite("N", &SystemConfig::N)
        .def_readwrite("L", &SystemConfig::L)
        .def_readwrite("T", &SystemConfig::T)
        .def_readwrite("K", &SystemConfig::K)
        .def_readwrite("snr_db", &SystemConfig::snr_db)
        .def_readwrite("runs", &SystemConfig::runs)
        .def_readwrite("seed", &SystemConfig::base_seed)
        .def_readwrite("constellation", &SystemConfig::constellation)
        .def_readwrite("paths", &SystemConfig::paths)
        .def_property(
            "channel", [](const SystemConfig& c) { return to_string(c.channel); },
            [](SystemConfig& c, const std::string& v) {
                if (v == "sv") {
                    c.channel = ChannelKind::SalehValenzuela;
                } else if (v == "rayleigh") {
                    c.channel = ChannelKind::Rayleigh;
                } else {
                    throw ConfigError("channel must be 'sv' or 'rayleigh'");
                }
            })
        .def("__str__", &format_config);

    m.def(
        "parse_config",
        [](const std::string& text) {
            std::istringstream is(text);
            return parse_config(is);
        },
        py::arg("text"), "Parse configuration text.");
    m.def("load_config", &load_config, py::arg("path"));
    m.def(
        "validate",
        [](const SystemConfig& cfg) {
            const auto r = validate_identifiability(cfg);
            py::dict d;
            d["ok"] = r.ok;
            d["k_min"] = r.k_min;
            d["binding_constraint"] = r.binding_constraint;
            d["semi_unitary"] = r.k_ge_ln;
            d["notes"] = r.notes;
            return d;
        },
        py::arg("config"), "Identifiability report of a configuration.");

    m.def("kron", &kron, py::arg("a"), py::arg("b"));
    m.def("khatri_rao", &khatri_rao, py::arg("a"), py::arg("b"));
    m.def("pinv", &pinv, py::arg("a"));
    m.def("combine", &combine, py::arg("G"), py::arg("H"), "Combined channel G^T khatri_rao H.");
    m.def(
        "krf_decouple",
        [](const CMatrix& theta, Index M, Index L, Index N) {
            const auto r = krf_decouple(theta, M, L, N);
            return py::make_tuple(r.G, r.H, r.theta);
        },
        py::arg("theta"), py::arg("M"), py::arg("L"), py::arg("N"),
        "Rank-one factorization of every column; returns (G, H, theta).");
    m.def(
        "design_dft_frames",
        [](int K, int N, int L) {
            const auto d = design_dft_frames(K, N, L);
            return py::make_tuple(d.Lambda, d.Psi);
        },
        py::arg("K"), py::arg("N"), py::arg("L"), "Returns (Lambda, Psi).");
    m.def("nmse", &nmse, py::arg("truth"), py::arg("estimate"));

    m.def(
        "synthesize",
        [](const CMatrix& G, const CMatrix& H, const CMatrix& X, int K, double snr_db,
           std::uint64_t seed) {
            const auto design = design_dft_frames(K, static_cast<int>(H.cols()),
                                                  static_cast<int>(G.cols()));
            SymbolFrame frame{X, 64};
            const auto clean = synthesize(make_channel_state(G, H), design, frame);
            Rng rng(seed);
            return add_noise(clean, snr_db, rng).slices;
        },
        py::arg("G"), py::arg("H"), py::arg("X"), py::arg("K"),
        py::arg("snr_db") = std::numeric_limits<double>::infinity(), py::arg("seed") = 0,
        "Received slices Y_1..Y_K under the DFT design.");

    m.def(
        "tsb",
        [](const std::vector<CMatrix>& slices, Index N, Index L, int constellation,
           bool fast_updates, std::uint64_t seed, int max_iterations, double rel_tol) {
            const auto unf = unfold_slices(slices);
            const auto cfg = link_config(unf.M, N, L, unf.T, unf.K, constellation);
            BalsOptions opts;
            opts.use_fast_updates = fast_updates;
            opts.max_iterations = max_iterations;
            opts.rel_tol = rel_tol;
            Rng rng(seed);
            return report_dict(tsb(unf, design_dft_frames(cfg.K, cfg.N, cfg.L), cfg, opts, rng));
        },
        py::arg("slices"), py::arg("N"), py::arg("L"), py::arg("constellation") = 64,
        py::arg("fast_updates") = false, py::arg("seed") = 0, py::arg("max_iterations") = 500,
        py::arg("rel_tol") = 1e-6, "Two-stage semi-blind receiver.");
    m.def(
        "tals",
        [](const std::vector<CMatrix>& slices, Index N, Index L, int constellation,
           std::uint64_t seed, int max_iterations, double rel_tol) {
            const auto unf = unfold_slices(slices);
            const auto cfg = link_config(unf.M, N, L, unf.T, unf.K, constellation);
            BalsOptions opts;
            opts.max_iterations = max_iterations;
            opts.rel_tol = rel_tol;
            Rng rng(seed);
            return report_dict(
                tals_baseline(unf, design_dft_frames(cfg.K, cfg.N, cfg.L), cfg, opts, rng));
        },
        py::arg("slices"), py::arg("N"), py::arg("L"), py::arg("constellation") = 64,
        py::arg("seed") = 0, py::arg("max_iterations") = 500, py::arg("rel_tol") = 1e-6,
        "Trilinear ALS receiver.");

    m.def(
        "flops",
        [](const SystemConfig& cfg, std::uint64_t iterations) {
            py::dict d;
            d["bals_per_iteration"] = flops_bals(cfg).per_iteration;
            d["tals_per_iteration"] = flops_tals(cfg).per_iteration;
            d["tsb"] = flops_tsb(cfg).total(iterations);
            d["tals"] = flops_tals(cfg).total(iterations);
            return d;
        },
        py::arg("config"), py::arg("iterations") = 1);

    m.def(
        "run_trial",
        [](const SystemConfig& cfg, std::size_t snr_index, std::size_t trial_index,
           const std::vector<std::string>& receivers) {
            py::list out;
            for (const auto& t : run_trial(cfg, snr_index, trial_index, harness_options(receivers, 1))) {
                out.append(trial_dict(t));
            }
            return out;
        },
        py::arg("config"), py::arg("snr_index"), py::arg("trial_index"),
        py::arg("receivers") = std::vector<std::string>{});
    m.def(
        "run_sweep",
        [](const SystemConfig& cfg, const std::vector<std::string>& receivers, unsigned threads) {
            SweepResult res;
            {
                py::gil_scoped_release release;
                res = run_sweep(cfg, harness_options(receivers, threads));
            }
            py::list trials;
            py::list aggs;
            for (const auto& t : res.trials) trials.append(trial_dict(t));
            for (const auto& a : res.aggregates) aggs.append(aggregate_dict(a));
            return py::make_tuple(trials, aggs);
        },
        py::arg("config"), py::arg("receivers") = std::vector<std::string>{},
        py::arg("threads") = 0, "Returns (trials, aggregates) as lists of dicts.");

    m.def(
        "trials_csv",
        [](const std::vector<py::dict>& trials) {
            std::vector<TrialResult> v;
            for (const auto& d : trials) v.push_back(trial_from_dict(d));
            std::ostringstream os;
            write_trials(os, v);
            return os.str();
        },
        py::arg("trials"));
    m.def(
        "aggregate_csv",
        [](const std::vector<py::dict>& trials) {
            std::vector<TrialResult> v;
            for (const auto& d : trials) v.push_back(trial_from_dict(d));
            std::ostringstream os;
            write_aggregates(os, aggregate(v));
            return os.str();
        },
        py::arg("trials"), "Aggregate table of trial records, as CSV text.");
    m.def(
        "read_trials_csv",
        [](const std::string& text) {
            std::istringstream is(text);
            py::list out;
            for (const auto& t : read_trials(is)) out.append(trial_dict(t));
            return out;
        },
        py::arg("text"));
    m.def(
        "read_aggregates_csv",
        [](const std::string& text) {
            std::istringstream is(text);
            py::list out;
            for (const auto& a : read_aggregates(is)) out.append(aggregate_dict(a));
            return out;
        },
        py::arg("text"));
}
