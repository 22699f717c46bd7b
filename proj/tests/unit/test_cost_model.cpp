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

#include "risce/cost_model.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace risce;

namespace {

SystemConfig reference() {
    return SystemConfig{};  // {M, N, L, T, K} = {8, 32, 2, 4, 64}
}

SystemConfig with_n(int n) {
    SystemConfig c = reference();
    c.N = n;
    return c;
}

}  // namespace

TEST(CostModel, ConventionPrimitives) {
    EXPECT_EQ(flops::ls_dominant(10, 3), 180u);
    EXPECT_EQ(flops::ls_solve(10, 3), 207u);
    EXPECT_EQ(flops::matmul(2, 3, 4), 24u);
}

TEST(CostModel, BalsLeadingTermAtReferenceSetup) {
    const auto b = flops_bals(reference());
    // K T L^2 N^2 = 64 * 4 * 4 * 1024.
    EXPECT_EQ(b.step("theta-step").dominant, 2u * 1048576u);
    EXPECT_EQ(b.step("x-step").dominant, 2u * 64u * 8u * 4u);
    EXPECT_EQ(b.per_iteration, b.step("theta-step").flops + b.step("x-step").flops);
    EXPECT_EQ(b.one_shot, 0u);
}

TEST(CostModel, ScalarDimensionsDegenerate) {
    SystemConfig c = reference();
    c.L = 1;
    c.N = 1;
    const auto b = flops_bals(c);
    EXPECT_EQ(b.step("theta-step").dominant, 2u * 64u * 4u);
    EXPECT_EQ(b.step("x-step").dominant, 2u * 64u * 8u);
    const auto t = flops_tals(c);
    EXPECT_EQ(t.step("h-step").dominant, 2u * 64u * 4u);
    EXPECT_EQ(t.step("g-step").dominant, 2u * 64u * 4u * 8u);
    EXPECT_EQ(t.step("x-step").dominant, 2u * 64u * 8u);
}

TEST(CostModel, ThetaStepScalesWithNSquared) {
    EXPECT_EQ(flops_bals(with_n(64)).step("theta-step").dominant,
              4u * flops_bals(with_n(32)).step("theta-step").dominant);
}

TEST(CostModel, GStepIsMTimesThetaStep) {
    for (int m : {1, 2, 8, 16}) {
        SystemConfig c = reference();
        c.M = m;
        EXPECT_EQ(flops_tals(c).step("g-step").dominant,
                  static_cast<flops_t>(m) * flops_bals(c).step("theta-step").dominant);
    }
}

TEST(CostModel, TalsDominantTerms) {
    const auto t = flops_tals(reference());
    EXPECT_EQ(t.step("h-step").dominant, 2u * 64u * 4u * 32u * 32u);
    EXPECT_EQ(t.step("g-step").dominant, 2u * 8u * 64u * 4u * 4u * 32u * 32u);
    EXPECT_EQ(t.per_iteration,
              t.step("h-step").flops + t.step("g-step").flops + t.step("x-step").flops);
}

TEST(CostModel, TalsCostsMoreWheneverMAtLeastTwo) {
    for (int m : {2, 4, 8}) {
        for (int n : {4, 16, 32}) {
            SystemConfig c = reference();
            c.M = m;
            c.N = n;
            EXPECT_GT(flops_tals(c).per_iteration, flops_bals(c).per_iteration);
        }
    }
}

TEST(CostModel, RatioAtReferenceSetupWithinBand) {
    for (flops_t it : {1u, 4u, 10u}) {
        const double r = static_cast<double>(flops_tals(reference()).total(it)) /
                         static_cast<double>(flops_tsb(reference()).total(it));
        EXPECT_GE(r, 6.1);
        EXPECT_LE(r, 10.3);
    }
}

TEST(CostModel, GapGrowsWithN) {
    flops_t prev = 0;
    for (int n : {16, 32, 64, 128}) {
        const flops_t gap = flops_tals(with_n(n)).total(1) - flops_tsb(with_n(n)).total(1);
        EXPECT_GT(gap, prev);
        prev = gap;
    }
}

TEST(CostModel, KrfIsLinearInEachDimension) {
    SystemConfig c = reference();
    c.N = 1;
    c.M = 1;
    c.L = 1;
    const flops_t unit = flops_krf(c).one_shot;
    EXPECT_EQ(unit, flops::kKrfSweeps * 2);
    EXPECT_EQ(flops_krf(reference()).one_shot, unit * 32u * 8u * 2u);
    c.N = 3;
    EXPECT_EQ(flops_krf(c).one_shot, 3u * unit);
    // Negligible next to one BALS iteration.
    EXPECT_LT(flops_krf(reference()).one_shot * 100, flops_bals(reference()).per_iteration);
}

TEST(CostModel, TotalsCombinePerIterationAndOneShot) {
    const auto t = flops_tsb(reference());
    EXPECT_EQ(t.per_iteration, flops_bals(reference()).per_iteration);
    EXPECT_EQ(t.one_shot, flops_krf(reference()).one_shot);
    EXPECT_EQ(t.total(7), 7 * t.per_iteration + t.one_shot);
    EXPECT_EQ(flops_pilot_ls(reference()).per_iteration, 0u);
    EXPECT_EQ(flops_pilot_krf(reference()).one_shot,
              flops_pilot_ls(reference()).one_shot + flops_krf(reference()).one_shot);
}

TEST(CostModel, FastUpdatesAreCheaper) {
    EXPECT_LT(flops_bals(reference(), true).per_iteration, flops_bals(reference()).per_iteration / 5);
}

TEST(CostModel, UnknownStepThrows) {
    EXPECT_THROW(flops_bals(reference()).step("g-step"), std::out_of_range);
}
