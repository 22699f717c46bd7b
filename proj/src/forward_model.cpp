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

#include "risce/forward_model.hpp"

#include "risce/errors.hpp"

#include <cmath>
#include <string>

namespace risce {

ReceivedTensor synthesize(const ChannelState& ch, const FrameDesign& design,
                          const SymbolFrame& frame) {
    const Index N = ch.H.cols();
    const Index L = ch.G.cols();
    const CMatrix& X = frame.X;
    if (ch.G.rows() != N || design.N() != N || design.L() != L || X.rows() != L ||
        design.Lambda.rows() != design.Psi.rows()) {
        throw DimensionError("synthesize: channel, design and symbol dimensions disagree");
    }
    ReceivedTensor out;
    out.slices.reserve(static_cast<std::size_t>(design.K()));
    for (Index k = 0; k < design.K(); ++k) {
        out.slices.push_back(ch.H * design.psi(k).asDiagonal() * ch.G *
                             design.lambda(k).asDiagonal() * X);
    }
    return out;
}

ReceivedTensor add_noise(const ReceivedTensor& Y, double snr_db, Rng& rng) {
    ReceivedTensor out = Y;
    out.snr_db = snr_db;
    out.noise_variance = 0.0;
    if (std::isinf(snr_db) && snr_db > 0) return out;

    double energy = 0.0;
    Index count = 0;
    for (const auto& s : Y.slices) {
        energy += s.squaredNorm();
        count += s.size();
    }
    if (count == 0 || energy == 0.0) {
        throw DegenerateInputError("add_noise: zero signal at finite SNR " +
                                   std::to_string(snr_db) + " dB");
    }
    const double variance = energy / static_cast<double>(count) / std::pow(10.0, snr_db / 10.0);
    for (auto& s : out.slices) {
        for (Index j = 0; j < s.cols(); ++j) {
            for (Index i = 0; i < s.rows(); ++i) s(i, j) += complex_normal(rng, variance);
        }
    }
    out.noise_variance = variance;
    return out;
}

Unfoldings unfold(const ReceivedTensor& Y) {
    Unfoldings u;
    u.K = Y.K();
    if (u.K == 0) return u;
    u.M = Y.slices.front().rows();
    u.T = Y.slices.front().cols();
    u.y3.resize(u.K * u.T * u.M);
    u.y2t.resize(u.K * u.M, u.T);
    const Index seg = u.T * u.M;
    for (Index k = 0; k < u.K; ++k) {
        const CMatrix& s = Y.slices[static_cast<std::size_t>(k)];
        if (s.rows() != u.M || s.cols() != u.T) {
            throw DimensionError("unfold: slice " + std::to_string(k) + " has a different shape");
        }
        u.y3.segment(k * seg, seg) = Eigen::Map<const CVector>(s.data(), seg);
        u.y2t.middleRows(k * u.M, u.M) = s;
    }
    return u;
}

ReceivedTensor fold(const Unfoldings& u) {
    ReceivedTensor Y;
    const Index seg = u.T * u.M;
    for (Index k = 0; k < u.K; ++k) {
        Y.slices.push_back(unvec(u.y3.segment(k * seg, seg), u.M, u.T));
    }
    return Y;
}

}  // namespace risce
