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

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace risce {

/// Seeded random stream. Every stochastic routine takes one by reference.
using Rng = std::mt19937_64;

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Folds a sequence of words into one 64-bit seed.
constexpr std::uint64_t derive_seed(std::initializer_list<std::uint64_t> words) noexcept {
    std::uint64_t h = 0x6a09e667f3bcc909ULL;
    for (std::uint64_t w : words) h = mix64(h ^ mix64(w));
    return h;
}

/// Circularly-symmetric complex Gaussian with the given total variance.
inline std::complex<double> complex_normal(Rng& rng, double variance = 1.0) {
    std::normal_distribution<double> dist(0.0, 1.0);
    const double s = std::sqrt(variance / 2.0);
    const double re = dist(rng);
    const double im = dist(rng);
    return {s * re, s * im};
}

inline double uniform_angle(Rng& rng) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::uniform_real_distribution<double>(0.0, two_pi)(rng);
}

}  // namespace risce
