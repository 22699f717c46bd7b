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

#include "risce/channel.hpp"

#include "risce/errors.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace risce {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

CVector ula_steering(Index size, double angle, double spacing) {
    CVector a(size);
    const double phase_step = -kTwoPi * spacing * std::sin(angle);
    const double norm = 1.0 / std::sqrt(static_cast<double>(size));
    for (Index m = 0; m < size; ++m) {
        a(m) = std::polar(norm, phase_step * static_cast<double>(m));
    }
    return a;
}

CMatrix sv_channel(Index rx, Index tx, const GeometricChannelParams& params, Rng& rng) {
    if (rx < 1 || tx < 1) throw DimensionError("sv_channel: array sizes must be >= 1");
    if (params.num_paths < 1) throw ConfigError("sv_channel: num_paths must be >= 1");

    CMatrix h = CMatrix::Zero(rx, tx);
    for (int p = 0; p < params.num_paths; ++p) {
        const cplx alpha = complex_normal(rng);
        const double aoa = uniform_angle(rng);
        const double aod = uniform_angle(rng);
        h += alpha * ula_steering(rx, aoa, params.array_spacing) *
             ula_steering(tx, aod, params.array_spacing).adjoint();
    }
    h *= std::sqrt(static_cast<double>(rx * tx) / params.num_paths);
    return h;
}

CMatrix rayleigh_channel(Index rx, Index tx, Rng& rng) {
    if (rx < 1 || tx < 1) throw DimensionError("rayleigh_channel: array sizes must be >= 1");
    CMatrix h(rx, tx);
    for (Index j = 0; j < tx; ++j) {
        for (Index i = 0; i < rx; ++i) h(i, j) = complex_normal(rng);
    }
    return h;
}

CMatrix combine(const CMatrix& G, const CMatrix& H) {
    if (G.rows() != H.cols()) {
        throw DimensionError("combine: G has " + std::to_string(G.rows()) +
                             " rows but H has " + std::to_string(H.cols()) + " columns");
    }
    return khatri_rao(G.transpose(), H);
}

ChannelState make_channel_state(CMatrix G, CMatrix H) {
    ChannelState st;
    st.theta = combine(G, H);
    st.G = std::move(G);
    st.H = std::move(H);
    return st;
}

}  // namespace risce
