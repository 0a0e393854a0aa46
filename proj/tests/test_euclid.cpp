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

// Fourier-Laplace transforms of point-mass sums and the constant A.

#include <cmath>
#include <complex>
#include <random>

#include <gtest/gtest.h>

#include <spherical_mv/euclid.hpp>
#include <spherical_mv/euclid_json.hpp>

namespace smv = spherical_mv;
using cplx = std::complex<double>;

TEST(FourierLaplace, SingleDeltaAndDerivative) {
    const auto mu = smv::delta_sum({{0.5, -1.0}});
    const smv::cvec z{cplx(2.0, 0.3), cplx(-1.0, 0.7)};
    const cplx ref = std::exp(-cplx(0.0, 1.0) * (0.5 * z[0] - 1.0 * z[1]));
    EXPECT_LT(std::abs(smv::ft_exp_poly(mu, z) - ref), 1e-15);

    // d/dx_1 delta_0 -> -i zeta_1; second derivative in x_2 -> -zeta_2^2
    smv::ExpPolyDistribution d;
    d.dim = 2;
    d.terms.push_back({{0.0, 0.0}, {{{1, 0}, 1.0}, {{0, 2}, 3.0}}, 1.0});
    d.validate();
    EXPECT_LT(std::abs(smv::ft_exp_poly(d, z) - (-cplx(0.0, 1.0) * z[0] - 3.0 * z[1] * z[1])), 1e-14);
}

TEST(FourierLaplace, LogModulusSurvivesOverflow) {
    const auto mu = smv::delta_sum({{1.0}, {-1.0}, {0.3}}, {cplx(2.0, 0.0), cplx(1.0, 0.0), cplx(0.5, 1.0)});
    const smv::cvec moderate{cplx(3.0, 4.0)};
    EXPECT_NEAR(smv::log_abs_ft(mu, moderate), std::log(std::abs(smv::ft_exp_poly(mu, moderate))), 1e-13);
    const smv::cvec huge{cplx(3.0, 2000.0)};
    const double v = smv::log_abs_ft(mu, huge);
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_NEAR(v, 2000.0 + std::log(2.0), 1e-9);  // the x = 1 term dominates
}

TEST(ConstantA, TwoSymmetricPoints) {
    // M = N = 2, |x_1|^2 - <x_2, x_1> = 2, so A = 1.01 log 2 / (2 log 2).
    const auto D = smv::deltafcn_constant_A({{1.0, 0.0}, {-1.0, 0.0}});
    EXPECT_NEAR(D.A, 0.505, 1e-14);
    EXPECT_DOUBLE_EQ(D.M, 2.0);
    EXPECT_FALSE(D.weighted);
}

TEST(ConstantA, WeightedM) {
    const auto D = smv::deltafcn_constant_A({{2.0}, {0.5}, {-1.0}}, {cplx(1.0, 0.0), cplx(3.0, 0.0), cplx(0.0, -1.0)});
    EXPECT_TRUE(D.weighted);
    EXPECT_DOUBLE_EQ(D.M, 7.0);  // max(N + 1, 2 max|c| + 1)
    EXPECT_EQ(D.lead, 0u);
    EXPECT_GT(D.A, 0.0);
}

TEST(ConstantA, DegenerateAndTrivialConfigurations) {
    const double e = 1e-7;
    EXPECT_THROW(smv::deltafcn_constant_A({{1.0, 0.0}, {std::cos(e), std::sin(e)}}), smv::DegenerateError);
    EXPECT_THROW(smv::deltafcn_constant_A({{1.0, 0.0}}), smv::DomainError);
    EXPECT_THROW(smv::deltafcn_constant_A({{1.0, 0.0}, {1.0, 0.0}}), smv::DomainError);
}

TEST(DeltaBound, HoldsAndInverts) {
    std::mt19937_64 g(42);
    std::normal_distribution<double> nd;
    std::vector<smv::rvec> grid;
    for (int k = 0; k <= 30; ++k) {
        const double r = std::pow(10.0, -1.0 + 5.0 * k / 30);
        const double a = nd(g), b = nd(g), n = std::hypot(a, b);
        grid.push_back({r * a / n, r * b / n});
    }
    const std::vector<smv::rvec> pts{{1.0, 0.5}, {-0.3, 0.2}, {0.1, -0.9}};
    const auto ok = smv::verify_delta_bound(pts, {}, grid);
    EXPECT_TRUE(ok.pass) << ok.detail;
    EXPECT_GE(ok.min_log_margin, 0.0);
    EXPECT_FALSE(smv::verify_delta_bound(pts, {}, grid, 2.0).pass);
}

TEST(DistributionJson, ParsesTermsAndRejectsMalformedInput) {
    const auto mu = smv::distribution_from_json_text(
        R"({"dim": 2, "terms": [{"point": [1, 0]}, {"point": [0, 1], "poly": {"1,0": 2, "0,1": [0, 1]}, "weight": [0.5, -0.5]}]})");
    EXPECT_EQ(mu.dim, 2);
    ASSERT_EQ(mu.terms.size(), 2u);
    EXPECT_EQ(mu.terms[1].weight, cplx(0.5, -0.5));
    EXPECT_EQ(mu.terms[1].poly.at({0, 1}), cplx(0.0, 1.0));
    EXPECT_THROW(smv::distribution_from_json_text("{"), smv::DomainError);
    EXPECT_THROW(smv::distribution_from_json_text(R"({"dim": 2})"), smv::DomainError);
    EXPECT_THROW(smv::distribution_from_json_text(R"({"dim": 2, "terms": [{"point": [1]}]})"), smv::DomainError);
    EXPECT_THROW(smv::distribution_from_json_text(R"({"dim": 1, "terms": [{"point": [1], "poly": {"x": 1}}]})"), smv::DomainError);
    EXPECT_THROW(smv::distribution_from_json_text(R"({"dim": 1, "terms": [{"point": [1], "weight": "a"}]})"), smv::DomainError);
}
