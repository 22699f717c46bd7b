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
// Space-time coding vectors, RIS phase-shift schedule, symbol frames and
// identifiability checks.

#pragma once

#include "risce/config.hpp"
#include "risce/constellation.hpp"
#include "risce/linalg.hpp"
#include "risce/rng.hpp"

#include <string>
#include <vector>

namespace risce {

/// Coding matrix Lambda (K x L, row k = lambda_k^T) and phase-shift matrix
/// Psi (K x N, row k = psi_k^T).
struct FrameDesign {
    CMatrix Lambda;
    CMatrix Psi;
    cplx omega{1.0, 0.0};
    /// K >= L N: Lambda^H Lambda = K I_L and Psi^H Psi = K I_N hold, and the
    /// inverse-free updates are exact.
    bool semi_unitary = false;

    Index K() const noexcept { return Lambda.rows(); }
    Index L() const noexcept { return Lambda.cols(); }
    Index N() const noexcept { return Psi.cols(); }
    CVector lambda(Index k) const { return Lambda.row(k).transpose(); }
    CVector psi(Index k) const { return Psi.row(k).transpose(); }
};

/// L x T symbol matrix whose first column is the all-ones pilot.
struct SymbolFrame {
    CMatrix X;
    int constellation_order = 64;
};

/// Factorized DFT design with omega = exp(-j 2 pi / K):
///   lambda_{k+1} = [1, w^{kN}, ..., w^{kN(L-1)}],  psi_{k+1} = [1, w^k, ..., w^{k(N-1)}],
/// so that lambda_{k+1} kron psi_{k+1} is row k+1 of the K-point DFT truncated
/// to its first L N columns.
FrameDesign design_dft_frames(int K, int N, int L);

/// Z = [psi_1 kron diag(lambda_1), ..., psi_K kron diag(lambda_K)]^T (KL x NL).
CMatrix build_Z(const FrameDesign& design);

/// Random frame from the Gray-mapped QAM alphabet, pilot column set to ones.
SymbolFrame generate_symbols(int L, int T, int order, Rng& rng);

/// Minimum-distance projection of every data entry; the pilot column is reset to ones.
SymbolFrame detect_nearest(const CMatrix& X_hat, int order);

struct IdentifiabilityReport {
    bool ok = false;
    /// max(ceil(NL / T), ceil(L / M)).
    int k_min = 0;
    bool kt_ge_nl = false;
    bool km_ge_l = false;
    /// K >= L N: DFT design is semi-unitary and the fast updates apply.
    bool k_ge_ln = false;
    /// K >= N: the DFT coding matrix Z has full column rank N L.
    bool k_ge_n = false;
    /// T >= L: the symbol matrix can have full row rank.
    bool t_ge_l = false;
    /// Name of the first violated necessary condition, empty when ok.
    std::string binding_constraint;
    std::vector<std::string> notes;
};

IdentifiabilityReport validate_identifiability(const SystemConfig& cfg);

/// Human-readable multi-line summary of a report.
std::string describe(const IdentifiabilityReport& report);

}  // namespace risce
