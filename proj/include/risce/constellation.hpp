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

#include <vector>

namespace risce {

/// Gray-mapped square QAM with unit average symbol energy.
class QamConstellation {
  public:
    /// order must be 4, 16 or 64; anything else throws ConfigError.
    explicit QamConstellation(int order);

    int order() const noexcept { return order_; }
    int side() const noexcept { return side_; }

    /// Point carrying the bit label `symbol`.
    cplx point(int symbol) const { return points_.at(static_cast<std::size_t>(symbol)); }
    const std::vector<cplx>& points() const noexcept { return points_; }

    /// Label of the minimum-distance point.
    int nearest(cplx z) const noexcept;

  private:
    int order_;
    int side_;
    int bits_per_axis_;
    double scale_;  // unnormalized grid -> unit energy
    std::vector<cplx> points_;
};

}  // namespace risce
