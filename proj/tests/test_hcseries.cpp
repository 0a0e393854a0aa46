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

// Harish-Chandra expansion, c-function, eta conditions and the M-finder.

#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include <spherical_mv/hcseries.hpp>
#include <spherical_mv/rankone.hpp>

#include "test_reference.hpp"

namespace smv = spherical_mv;
using smv::cplx;

TEST(RadialDensity, H3Coefficients) {
    // H3: delta^{1/2} e^{-t} = 1 - x^2, its reciprocal is 1 + x^2 + x^4 + ...
    const auto R = smv::radial_density(smv::real_hyperbolic(3), 8);
    for (int k = 0; k <= 8; ++k) {
        EXPECT_DOUBLE_EQ(R.b[k], k == 0 ? 1.0 : (k == 2 ? -1.0 : 0.0)) << k;
        EXPECT_DOUBLE_EQ(R.c[k], k % 2 == 0 ? 1.0 : 0.0) << k;
    }
    EXPECT_THROW(smv::radial_density(smv::real_hyperbolic(3), 201), smv::RangeError);
}

TEST(GammaCoefficients, H3IsGeometric) {
    // Phi_lambda = e^{(i lambda - 1) t} / (1 - e^{-2t}) on H3.
    const auto g = smv::gamma_recursion(smv::real_hyperbolic(3), cplx(2.3, -0.4), 30);
    for (int k = 0; k <= 30; ++k) EXPECT_LT(std::abs(g[k] - (k % 2 == 0 ? 1.0 : 0.0)), 1e-13) << k;
}

TEST(GammaCoefficients, CrossIdentityWithGangolli) {
    for (const char* name : {"H2", "H3", "H4", "CH2", "HH2", "2,3"})
        for (cplx lam : {cplx(0.3, 0.0), cplx(4.0, -0.2), cplx(17.0, 1.0)}) {
            const auto D = smv::gamma_coeffs(smv::resolve_space(name), lam, 60);
            EXPECT_LT(smv::cross_identity_residual(D), 1e-12) << name << " " << lam;
        }
}

TEST(GammaCoefficients, ResonanceIsReported) {
    // H2, lambda = -i: k^2 - 2ik lambda = k^2 - 2k vanishes at k = 2.
    try {
        smv::gamma_recursion(smv::real_hyperbolic(2), cplx(0.0, -1.0), 10);
        FAIL() << "no ResonanceError";
    } catch (const smv::ResonanceError& e) {
        EXPECT_EQ(e.resonant_k(), 2);
    }
    // Odd k carry no contributions and are never resonant.
    EXPECT_NO_THROW(smv::gamma_recursion(smv::real_hyperbolic(2), cplx(0.0, -0.5), 10));
}

TEST(CFunction, H3Closed) {
    const auto sp = smv::real_hyperbolic(3);
    for (cplx lam : {cplx(0.5, 0.0), cplx(3.0, -0.1), cplx(800.0, 0.0), cplx(-2.0, 1.5)})
        EXPECT_LT(std::abs(smv::c_function(sp, lam) - 1.0 / (cplx(0.0, 1.0) * lam)) * std::abs(lam), 1e-12) << lam;
}

TEST(CFunction, ConjugateSymmetryAndNormalisation) {
    for (const char* name : {"H2", "H4", "CH2", "HH2"}) {
        const auto sp = smv::resolve_space(name);
        // c(-i rho) = 1
        EXPECT_LT(std::abs(smv::c_function(sp, cplx(0.0, -sp.rho)) - 1.0), 1e-12) << name;
        for (double xi : {0.1, 2.0, 50.0, 1500.0}) {
            const cplx a = smv::c_function(sp, xi), b = smv::c_function(sp, -xi);
            EXPECT_LT(std::abs(a - std::conj(b)) / std::abs(a), 1e-12) << name << " " << xi;
        }
    }
}

TEST(CFunction, PolesAndZeros) {
    const auto sp = smv::real_hyperbolic(2);
    EXPECT_THROW(smv::c_function(sp, 0.0), smv::PoleError);
    EXPECT_THROW(smv::c_function(sp, cplx(0.0, 2.0)), smv::PoleError);
    // 1/Gamma((p/2 + 1 + i lambda)/2) vanishes at i lambda = -p/2 - 1.
    EXPECT_EQ(smv::c_function(sp, cplx(0.0, 1.5)), cplx(0.0, 0.0));
}

TEST(PhiHC, AgreesWithKoornwinder) {
    for (const char* name : {"H2", "H3", "H4", "CH2", "H5"}) {
        const auto sp = smv::resolve_space(name);
        for (double t : {0.8, 2.0, 4.0})
            for (cplx lam : {cplx(0.6, 0.0), cplx(3.7, 0.0), cplx(12.0, -0.3)}) {
                const cplx a = smv::phi_hc(sp, t, lam), b = smv::koornwinder_phi(sp, t, lam);
                EXPECT_LT(std::abs(a - b), 1e-10 * std::max(1e-3, std::abs(b))) << name << " t=" << t << " " << lam;
            }
    }
}

TEST(PhiHC, RegularisedAtMinusIRho) {
    for (const char* name : {"H3", "CH2", "H4"}) {
        const auto sp = smv::resolve_space(name);
        for (double t : {0.7, 2.0}) EXPECT_NEAR(std::abs(smv::phi_hc_regularized(sp, t, cplx(0.0, -sp.rho)) - 1.0), 0.0, 1e-6) << name;
    }
}

TEST(PhiHC, Envelope) {
    EXPECT_THROW(smv::phi_hc(smv::real_hyperbolic(3), 0.4, 1.0), smv::DomainError);
    const auto d = smv::phi_hc_detail(smv::real_hyperbolic(2), 1.0, 2.0);
    EXPECT_GE(d.tail_estimate, 0.0);
    EXPECT_LT(d.tail_estimate, 1e-12);
}

TEST(EtaConditions, Verdicts) {
    const auto sp = smv::real_hyperbolic(3);
    EXPECT_TRUE(smv::eta_conditions(sp, 0.1).all());
    EXPECT_FALSE(smv::eta_conditions(sp, 0.3).all());
    EXPECT_FALSE(smv::eta_conditions(sp, 0.0).all());
    EXPECT_FALSE(smv::eta_conditions(sp, -0.1).all());
    EXPECT_EQ(smv::eta_conditions(sp, 0.1).conditions.size(), 5u);
}

TEST(FindM, H3Reference) {
    const auto sp = smv::real_hyperbolic(3);
    const auto fm = smv::find_M(sp, 0.1, 0.5);
    EXPECT_DOUBLE_EQ(fm.M_star, 11.75);
    EXPECT_GT(fm.m1, 0.0);
    EXPECT_GE(fm.m2, fm.m1);
    // C_M increases with M, and the first positive entry is M*.
    for (std::size_t i = 1; i < fm.curve.size(); ++i) EXPECT_GT(fm.curve[i].second, fm.curve[i - 1].second);
    EXPECT_GT(fm.C_at(fm.M_star), 0.0);
    EXPECT_LE(fm.C_at(fm.M_star - 0.25), 0.0);
    EXPECT_THROW(smv::find_M(sp, 0.3, 0.5), smv::DomainError);
    EXPECT_THROW(smv::find_M(sp, 0.1, 1.5), smv::DomainError);
}

TEST(FindM, LowerBoundAndInversion) {
    const auto sp = smv::real_hyperbolic(3);
    const auto fm = smv::find_M(sp, 0.1, 0.5);
    std::vector<double> grid;
    for (int i = 0; i <= 40; ++i) grid.push_back(std::pow(10.0, -2.0 + 5.0 * i / 40));
    const double H = fm.M_star + 1.0;
    EXPECT_TRUE(smv::lower_bound_check(sp, fm, H, grid).pass);
    EXPECT_FALSE(smv::lower_bound_check(sp, fm, H, grid, 10.0).pass);
    EXPECT_THROW(smv::lower_bound_check(sp, fm, fm.M_star, grid), smv::DomainError);
}

TEST(LowerBoundConstant, Formula) {
    const double M = 3.0, eta = 0.1, H0 = 0.5, m1 = 2.0, m2 = 3.0, K = 1.5;
    const double r = std::exp(-(M - H0)), S1 = r / (1 - r);
    EXPECT_NEAR(smv::lower_bound_constant(M, eta, H0, m1, m2, K), m1 - m2 * K * (S1 + std::exp(-2 * eta * M) * (1 + S1)), 1e-15);
}
