# SPDX-License-Identifier: Apache-2.0
#
# risce: semi-blind channel estimation for RIS-assisted MIMO links
# Copyright (C) 2026 The risce authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------

import math

import numpy as np
import pytest

import risce


def small_config():
    cfg = risce.parse_config(
        "M = 4\nN = 4\nL = 2\nT = 4\nK = 8\nconstellation = 16\nchannel = rayleigh\n"
        "snr_db = 0, 20\nruns = 3\nseed = 5\n"
    )
    return cfg


def random_complex(rng, rows, cols):
    return (rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))) / math.sqrt(2)


def test_version_and_defaults():
    assert risce.__version__ == "0.1.0"
    cfg = risce.SystemConfig()
    assert (cfg.M, cfg.N, cfg.L, cfg.T, cfg.K) == (8, 32, 2, 4, 64)
    assert cfg.channel == "sv"


def test_parse_and_validate():
    cfg = small_config()
    assert cfg.channel == "rayleigh"
    assert list(cfg.snr_db) == [0.0, 20.0]
    assert risce.validate(cfg)["ok"]
    cfg.K = 3
    cfg.N = 8
    report = risce.validate(cfg)
    assert not report["ok"]
    assert report["binding_constraint"] == "KT >= NL"


def test_parse_error_carries_line():
    with pytest.raises(risce.ParseError, match="line 2"):
        risce.parse_config("M = 4\nbogus = 1\n")


def test_kron_and_khatri_rao():
    a = np.array([[1, 2], [3, 4]], dtype=complex)
    b = np.array([[0, 1], [1, 0]], dtype=complex)
    np.testing.assert_allclose(risce.kron(a, b), np.kron(a, b))
    kr = risce.khatri_rao(a, b)
    for j in range(2):
        np.testing.assert_allclose(kr[:, j], np.kron(a[:, j], b[:, j]))


def test_pinv_matches_numpy():
    rng = np.random.default_rng(1)
    a = random_complex(rng, 5, 3)
    np.testing.assert_allclose(risce.pinv(a), np.linalg.pinv(a), atol=1e-12)


def test_noiseless_receivers_recover_channel():
    rng = np.random.default_rng(2)
    G = random_complex(rng, 4, 2)
    H = random_complex(rng, 4, 4)
    X = np.ones((2, 4), dtype=complex)
    X[:, 1:] = np.array([[1 + 1j, -1 + 1j, 1 - 1j], [-1 - 1j, 1 + 1j, -1 + 1j]]) / math.sqrt(2)
    slices = risce.synthesize(G, H, X, K=8)
    assert len(slices) == 8
    theta = risce.combine(G, H)
    for fast in (False, True):
        rep = risce.tsb(slices, N=4, L=2, constellation=4, fast_updates=fast, seed=3)
        assert risce.nmse(theta, rep["theta"]) < 1e-12
        np.testing.assert_allclose(rep["X"], X, atol=1e-8)
    rep = risce.tals(slices, N=4, L=2, constellation=4, seed=3)
    assert risce.nmse(theta, rep["theta"]) < 1e-12
    assert rep["iterations"] == len(rep["residuals"])


def test_krf_decouple_fixed_point():
    rng = np.random.default_rng(4)
    theta = risce.combine(random_complex(rng, 3, 2), random_complex(rng, 4, 3))
    G, H, rebuilt = risce.krf_decouple(theta, M=4, L=2, N=3)
    assert G.shape == (3, 2) and H.shape == (4, 3)
    np.testing.assert_allclose(rebuilt, theta, atol=1e-10)


def test_flops_ratio_band():
    f = risce.flops(risce.SystemConfig())
    assert f["bals_per_iteration"] == 2548744
    assert f["tals_per_iteration"] == 17997832
    assert 6.1 <= f["tals"] / f["tsb"] <= 10.3


def test_sweep_and_csv_round_trip():
    cfg = small_config()
    trials, aggs = risce.run_sweep(cfg, receivers=["tsb", "tals", "ls", "krf"], threads=1)
    assert len(trials) == 2 * 3 * 4
    assert len(aggs) == 2 * 4
    assert not any(t["failed"] for t in trials)
    again = risce.run_trial(cfg, 0, 0, ["tsb", "tals", "ls", "krf"])
    assert [t["nmse_refined"] for t in again] == [t["nmse_refined"] for t in trials[:4]]

    text = risce.trials_csv(trials)
    assert text.splitlines()[0] == (
        "receiver,snr_db,trial,seed,nmse_raw,nmse_refined,ser,iterations,flops,failed"
    )
    back = risce.read_trials_csv(text)
    assert risce.trials_csv(back) == text
    agg_text = risce.aggregate_csv(trials)
    assert risce.read_aggregates_csv(agg_text)[0]["runs"] == 3


def test_missing_column_is_named():
    with pytest.raises(risce.ParseError, match="missing column 'flops'"):
        risce.read_aggregates_csv("receiver,snr_db,runs,mean_nmse_db,mean_ser,mean_iters\n")
