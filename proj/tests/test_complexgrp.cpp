/*
 * Copyright 2026 The spherical_mv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *  http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Spherical functions on complex groups of type A_l.

#include <cmath>
#include <complex>
#include <random>

#include <gtest/gtest.h>

#include <spherical_mv/complexgrp.hpp>

namespace smv = spherical_mv;
using smv::cplx;

namespace {

std::vector<double> random_sum_zero(std::mt19937_64& g, int dim, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    std::vector<double> v(dim);
    double s = 0;
    for (auto& x : v) s += (x = u(g));
    for (auto& x : v) x -= s / dim;
    return v;
}

std::vector<cplx> to_c(const std::vector<double>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(WeylDenominator, SumEqualsProduct) {
    std::mt19937_64 g(7);
    for (int l = 1; l <= 4; ++l) {
        const auto W = smv::weyl_group_A(l);
        for (int rep = 0; rep < 20; ++rep) {
            const auto H = random_sum_zero(g, l + 1, 1.5);
            const double a = smv::weyl_denominator(W, H, smv::DenominatorRoute::Sum);
            const double b = smv::weyl_denominator(W, H, smv::DenominatorRoute::Product);
            EXPECT_LT(std::abs(a - b), 1e-12 * std::abs(b) + 1e-14) << l;
        }
    }
    EXPECT_THROW(smv::weyl_denominator(smv::weyl_group_A(5), std::vector<double>(6, 0.0), smv::DenominatorRoute::Sum),
                 smv::RangeError);
}

TEST(ComplexPhi, RankOneClosedForm) {
    // A_1, H = (h, -h), lambda = (l, -l): phi = sin(2 l h) / (l sinh 2h).
    const auto W = smv::weyl_group_A(1);
    for (double h : {0.1, 0.8, 2.0})
        for (cplx l : {cplx(0.3, 0.0), cplx(4.0, 0.0), cplx(1.0, -0.5)}) {
            const auto cp = smv::make_complex_point(W, {h, -h}, {l, -l});
            const cplx ref = std::sin(2.0 * l * h) / (l * std::sinh(2.0 * h));
            EXPECT_LT(std::abs(smv::phi_complex_regular(cp) - ref), 1e-12 * std::max(1.0, std::abs(ref))) << h << " " << l;
        }
}

TEST(ComplexPhi, NormalisedAtMinusIRho) {
    std::mt19937_64 g(11);
    for (int l = 1; l <= 3; ++l) {
        const auto W = smv::weyl_group_A(l);
        const auto rho = smv::rho_A(W);
        std::vector<cplx> lam;
        for (double r : rho) lam.emplace_back(0.0, -r);
        for (int rep = 0; rep < 5; ++rep) {
            const auto cp = smv::make_complex_point(W, random_sum_zero(g, l + 1, 1.0), lam);
            EXPECT_LT(std::abs(smv::phi_complex_regular(cp) - 1.0), 1e-9) << l;
        }
    }
}

TEST(ComplexPhi, WeylInvariance) {
    std::mt19937_64 g(13);
    const auto W = smv::weyl_group_A(2);
    const auto H = random_sum_zero(g, 3, 1.0);
    const auto lam = to_c(random_sum_zero(g, 3, 4.0));
    const cplx base = smv::phi_complex_regular(smv::make_complex_point(W, H, lam));
    for (const auto& s : W.elements) {
        const cplx a = smv::phi_complex_regular(smv::make_complex_point(W, H, W.apply(s, lam)));
        const cplx b = smv::phi_complex_regular(smv::make_complex_point(W, W.apply(s, H), lam));
        EXPECT_LT(std::abs(a - base), 1e-12);
        EXPECT_LT(std::abs(b - base), 1e-12);
    }
}

TEST(ComplexPhi, WallFormulaIsTheRegularLimit) {
    const auto W = smv::weyl_group_A(2);
    const std::vector<cplx> lam{cplx(1.7, 0.0), cplx(-0.4, 0.0), cplx(-1.3, 0.0)};
    const std::vector<double> wall{0.6, 0.6, -1.2};
    const auto cp = smv::make_complex_point(W, wall, lam);
    ASSERT_FALSE(cp.regular());
    EXPECT_EQ(cp.w0_order, 2);
    EXPECT_THROW(smv::phi_complex_regular(cp), smv::DomainError);
    auto off = [&](double d) {
        return smv::phi_complex_regular(smv::make_complex_point(W, {0.6 + d, 0.6 - d, -1.2}, lam));
    };
    const cplx limit = (4.0 * off(5e-4) - off(1e-3)) / 3.0;
    EXPECT_LT(std::abs(smv::phi_complex_nonregular(cp) - limit), 1e-9);
}

TEST(ComplexPhi, IdentityGivesOne) {
    for (int l = 1; l <= 3; ++l) {
        const auto W = smv::weyl_group_A(l);
        std::mt19937_64 g(17);
        const auto cp = smv::make_complex_point(W, std::vector<double>(l + 1, 0.0), to_c(random_sum_zero(g, l + 1, 3.0)));
        EXPECT_EQ(static_cast<int>(cp.block_sizes.size()), 1);
        EXPECT_LT(std::abs(smv::phi_complex_nonregular(cp) - 1.0), 1e-9) << l;
    }
}

TEST(ComplexPhi, ZeroOfPiUsesOffsets) {
    const auto W = smv::weyl_group_A(2);
    const auto cp = smv::make_complex_point(W, {0.5, 0.1, -0.6}, {cplx(1.0, 0.0), cplx(1.0, 0.0), cplx(-2.0, 0.0)});
    const auto v = smv::phi_complex_regular_detail(cp);
    EXPECT_TRUE(v.offset_limit);
    const auto near = smv::make_complex_point(W, {0.5, 0.1, -0.6}, {cplx(1.0 + 1e-3, 0.0), cplx(1.0 - 1e-3, 0.0), cplx(-2.0, 0.0)});
    EXPECT_LT(std::abs(v.value - smv::phi_complex_regular(near)), 1e-4);
}

TEST(WallNumerator, SkewSymmetric) {
    const auto W = smv::weyl_group_A(3);
    const auto cp = smv::make_complex_point(W, {0.4, 0.4, -0.1, -0.7}, std::vector<cplx>(4, cplx(0.0, 0.0)));
    std::mt19937_64 g(19);
    const auto lam = to_c(random_sum_zero(g, 4, 2.0));
    const cplx base = smv::wall_numerator(cp, lam);
    for (const auto& s : W.elements)
        EXPECT_LT(std::abs(smv::wall_numerator(cp, W.apply(s, lam)) - static_cast<double>(s.sign) * base), 1e-12 * std::abs(base) + 1e-14);
}

TEST(ComplexPoint, Validation) {
    const auto W = smv::weyl_group_A(2);
    EXPECT_THROW(smv::make_complex_point(W, {1.0, 0.0, 0.0}, {cplx(0.0), cplx(0.0), cplx(0.0)}), smv::DomainError);
    EXPECT_THROW(smv::make_complex_point(W, {1.0, 0.0, -1.0, 0.0}, {cplx(0.0), cplx(0.0), cplx(0.0)}), smv::DomainError);
    // l coordinates are completed by minus their sum
    const auto cp = smv::make_complex_point(W, {1.0, 0.5}, {cplx(1.0), cplx(0.0)});
    EXPECT_DOUBLE_EQ(cp.H[2], -1.5);
    EXPECT_TRUE(cp.regular());
}
