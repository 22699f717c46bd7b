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

#include "risce/constellation.hpp"

#include "risce/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace risce {

namespace {

int gray(int p) { return p ^ (p >> 1); }

int gray_inverse(int g) {
    int p = 0;
    for (; g != 0; g >>= 1) p ^= g;
    return p;
}

}  // namespace

QamConstellation::QamConstellation(int order) : order_(order) {
    switch (order) {
        case 4: bits_per_axis_ = 1; break;
        case 16: bits_per_axis_ = 2; break;
        case 64: bits_per_axis_ = 3; break;
        default:
            throw ConfigError("unsupported constellation order " + std::to_string(order) +
                              " (expected 4, 16 or 64)");
    }
    side_ = 1 << bits_per_axis_;
    scale_ = 1.0 / std::sqrt(2.0 * (order - 1) / 3.0);

    points_.resize(static_cast<std::size_t>(order));
    for (int s = 0; s < order; ++s) {
        const int pi = gray_inverse(s >> bits_per_axis_);
        const int pq = gray_inverse(s & (side_ - 1));
        points_[static_cast<std::size_t>(s)] =
            cplx(2 * pi - (side_ - 1), 2 * pq - (side_ - 1)) * scale_;
    }
}

int QamConstellation::nearest(cplx z) const noexcept {
    auto axis = [this](double x) {
        const double pos = std::round((x / scale_ + (side_ - 1)) / 2.0);
        if (!(pos >= 0.0)) return 0;  // also catches NaN
        return std::min(static_cast<int>(pos), side_ - 1);
    };
    return (gray(axis(z.real())) << bits_per_axis_) | gray(axis(z.imag()));
}

}  // namespace risce
