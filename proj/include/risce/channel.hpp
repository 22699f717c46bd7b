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

#include "risce/linalg.hpp"
#include "risce/rng.hpp"

namespace risce {

/// UT-RIS channel G (N x L), RIS-BS channel H (M x N) and the combined
/// channel theta = G^T khatri_rao H (LM x N).
struct ChannelState {
    CMatrix G;
    CMatrix H;
    CMatrix theta;
};

/// Narrowband geometric (Saleh-Valenzuela style) channel on uniform linear arrays.
struct GeometricChannelParams {
    int num_paths = 1;
    /// Element spacing in wavelengths.
    double array_spacing = 0.5;
};

/// Unit-norm ULA response: a[m] = exp(-j 2 pi d m sin(angle)) / sqrt(size).
CVector ula_steering(Index size, double angle, double spacing = 0.5);

/// sqrt(rx tx / P) * sum_p alpha_p a_rx(theta_p) a_tx(phi_p)^H, alpha_p ~ CN(0, 1),
/// angles uniform on [0, 2 pi).
CMatrix sv_channel(Index rx, Index tx, const GeometricChannelParams& params, Rng& rng);

/// i.i.d. CN(0, 1) entries.
CMatrix rayleigh_channel(Index rx, Index tx, Rng& rng);

/// G^T khatri_rao H. G is N x L, H is M x N.
CMatrix combine(const CMatrix& G, const CMatrix& H);

ChannelState make_channel_state(CMatrix G, CMatrix H);

}  // namespace risce
