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

#include "risce/channel.hpp"
#include "risce/frame.hpp"
#include "risce/linalg.hpp"
#include "risce/rng.hpp"

#include <limits>
#include <vector>

namespace risce {

/// The K received sub-frame matrices Y_k (M x T).
struct ReceivedTensor {
    std::vector<CMatrix> slices;
    double snr_db = std::numeric_limits<double>::infinity();
    /// Variance of each complex noise entry (0 when noiseless).
    double noise_variance = 0.0;

    Index K() const noexcept { return static_cast<Index>(slices.size()); }
};

/// Unfoldings consumed by the receivers.
struct Unfoldings {
    /// vec(Y_(3)^T) = [vec(Y_1); ...; vec(Y_K)] (KTM).
    CVector y3;
    /// Y_(2)^T = [Y_1; ...; Y_K] (KM x T).
    CMatrix y2t;
    Index M = 0;
    Index T = 0;
    Index K = 0;

    /// The KT M-vectors of y3 side by side: [Y_1, ..., Y_K] (M x KT).
    Eigen::Map<const CMatrix> wide() const { return {y3.data(), M, K * T}; }
};

/// Noiseless Y_k = H diag(psi_k) G diag(lambda_k) X.
ReceivedTensor synthesize(const ChannelState& ch, const FrameDesign& design,
                          const SymbolFrame& frame);

/// Adds CN(0, s2) noise with s2 = mean |y|^2 / 10^(snr_db / 10). An infinite
/// snr_db leaves the input unchanged. Zero signal with finite SNR throws
/// DegenerateInputError.
ReceivedTensor add_noise(const ReceivedTensor& Y, double snr_db, Rng& rng);

Unfoldings unfold(const ReceivedTensor& Y);

/// Inverse of unfold() (slices from y3).
ReceivedTensor fold(const Unfoldings& u);

}  // namespace risce
