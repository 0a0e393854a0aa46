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

// Neighbourhood suprema, the (B, C, D) fit, growth type and the rank-one pipeline.

#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include <spherical_mv/certifier.hpp>

namespace smv = spherical_mv;
using smv::cplx;

TEST(Suprema, ChordAndDisk) {
    const smv::Evaluator id = [](cplx z) { return z; };
    EXPECT_DOUBLE_EQ(smv::sup_on_chord(id, 5.0, 2.0, 64).sup, 7.0);
    const smv::Evaluator e = [](cplx z) { return std::exp(-cplx(0.0, 1.0) * z); };  // |e^{-iz}| = e^{Im z}
    EXPECT_NEAR(smv::sup_on_disk(e, 3.0, 1.5, 512).sup, std::exp(1.5), 1e-12);
    const auto s = smv::sup_on_chord([](cplx) { return cplx(2.0, 0.0); }, 0.0, 1.0, 10);
    EXPECT_EQ(s.samples, 11);
    EXPECT_DOUBLE_EQ(s.variation, 0.0);
    EXPECT_THROW(smv::sup_on_chord(id, 0.0, 0.0), smv::DomainError);
    EXPECT_THROW(smv::sup_on_disk(id, 0.0, 1.0, 0), smv::DomainError);
}

TEST(Grid, CertificationGrid) {
    const auto g = smv::certification_grid(1e4, 10);
    EXPECT_EQ(g.front(), 0.0);
    EXPECT_DOUBLE_EQ(g[1], 1.0);
    EXPECT_NEAR(g.back(), 1e4, 1e-9);
    EXPECT_EQ(g.size(), 42u);
    EXPECT_THROW(smv::certification_grid(50.0), smv::DomainError);
}

TEST(SlowDecrease, RecoversAlgebraicExponent) {
    // |u| = 1 / (2 + x^2) on the real axis decays with exponent 2.
    const smv::Evaluator u = [](cplx z) { return 1.0 / (2.0 + z * z); };
    const auto R = smv::certify_slow_decrease(u, 1.0, smv::certification_grid(1e4, 10), std::nullopt, smv::Neighbourhood::Chord, 128);
    EXPECT_TRUE(R.pass) << R.detail;
    EXPECT_NEAR(R.fitted.D, 2.0, 0.05);
    for (const auto& row : R.rows) EXPECT_GE(row.margin, 1.0 - 1e-12);
    // a bound demanding slower decay must fail
    const auto T = smv::certify_slow_decrease(u, 1.0, smv::certification_grid(1e4, 10), smv::BCD{1.0, 2.0, 1.0},
                                              smv::Neighbourhood::Chord, 128);
    EXPECT_FALSE(T.pass);
}

TEST(Growth, ExponentialType) {
    const double t = 1.5;
    const smv::Evaluator u = [t](cplx z) { return smv::sin_over(z, t); };
    EXPECT_TRUE(smv::growth_type_check(u, t, 0, smv::growth_grid()).pass);
    const smv::Evaluator cubic = [](cplx z) { return z * z * z; };
    EXPECT_FALSE(smv::growth_type_check(cubic, 1.0, 0, smv::growth_grid()).pass);
    EXPECT_TRUE(smv::growth_type_check(cubic, 1.0, 4, smv::growth_grid()).pass);
    const smv::Evaluator gauss = [](cplx z) { return std::exp(z * z); };
    EXPECT_FALSE(smv::growth_type_check(gauss, 1.0, 0, smv::growth_grid()).pass);
}

TEST(Pipeline, GaussianFailsGrowthAndSkipsSlowDecrease) {
    const smv::Evaluator gauss = [](cplx z) { return std::exp(z * z); };
    const auto C = smv::certify_function(gauss, 1.0);
    EXPECT_FALSE(C.pass);
    EXPECT_FALSE(C.slow_ran);
}

TEST(Pipeline, H3CertifiesWithExponentNearOne) {
    smv::CertifyConfig cfg;
    cfg.samples = 128;
    const auto C = smv::certify_space(smv::real_hyperbolic(3), 1.0, cfg);
    EXPECT_TRUE(C.pass) << C.growth.detail << " / " << C.slow.detail;
    EXPECT_TRUE(C.slow_ran);
    EXPECT_NEAR(C.slow.fitted.D, 1.0, 0.1);
    EXPECT_DOUBLE_EQ(C.slow.A, smv::default_disk_constant(1.0));
    EXPECT_THROW(smv::certify_space(smv::real_hyperbolic(3), 6.0), smv::DomainError);
}
