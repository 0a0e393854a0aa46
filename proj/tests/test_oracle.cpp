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

// Reference quadrature for I and calI.

#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include <spherical_mv/oracle.hpp>

#include "test_reference.hpp"

namespace smv = spherical_mv;
using smv::cplx;

namespace {

cplx h5_closed(double t, cplx z) {
    // int_0^t cos(zs)(cosh t - cosh s) ds
    return std::cosh(t) * std::sin(z * t) / z - (z * std::sin(z * t) * std::cosh(t) + std::cos(z * t) * std::sinh(t)) / (z * z + 1.0);
}

}  // namespace

TEST(Oracle, H3IsSinOverZeta) {
    const auto sp = smv::real_hyperbolic(3);
    for (double t : {0.3, 1.0, 4.0})
        for (cplx z : {cplx(0.7, 0.0), cplx(12.0, 0.0), cplx(3.0, 2.5), cplx(40.0, -4.0)})
            EXPECT_LT(test_ref::rel(smv::integral_I(sp, t, z), std::sin(z * t) / z), 1e-12) << t << " " << z;
}

TEST(Oracle, H5ClosedForm) {
    const auto sp = smv::real_hyperbolic(5);
    for (double t : {0.5, 2.0})
        for (cplx z : {cplx(0.25, 0.0), cplx(7.0, 1.0), cplx(55.0, 0.0)})
            EXPECT_LT(test_ref::rel(smv::integral_I(sp, t, z), h5_closed(t, z)), 1e-12) << t << " " << z;
}

TEST(Oracle, EvenDimensionsAgainstSubstitutionRule) {
    for (const char* name : {"H2", "H4", "CH2", "H6"}) {
        const auto sp = smv::resolve_space(name);
        const double alpha = 0.5 * (sp.n - 3);
        for (double t : {0.4, 1.5, 3.0})
            for (cplx z : {cplx(0.0, 0.0), cplx(2.5, 0.0), cplx(9.0, -1.5), cplx(30.0, 0.0)}) {
                auto w = [&](double Z) {
                    if (sp.q == 0) return 1.0;
                    const double x = Z / (2.0 * std::cosh(t));  // CH2: arcsin(sqrt x)/sqrt x
                    return x == 0.0 ? 1.0 : std::asin(std::sqrt(x)) / std::sqrt(x);
                };
                const cplx ref = test_ref::radial_integral(t, z, alpha, w);
                EXPECT_LT(test_ref::rel(smv::integral_I(sp, t, z), ref), 1e-10) << name << " t=" << t << " z=" << z;
            }
    }
}

TEST(Oracle, CalIMatchesDirectQuadrature) {
    for (int m = 0; m <= 6; ++m)
        for (cplx z : {cplx(0.0, 0.0), cplx(1.3, 0.0), cplx(6.0, 2.0)}) {
            const double t = 1.2;
            auto f = [&](double s) { return 2.0 * std::cos(z * s) * std::pow(std::cosh(t) - std::cosh(s), m); };
            const cplx ref = test_ref::gauss3(f, 0.0, t, 400);
            EXPECT_LT(test_ref::rel(smv::integral_calI(m, t, z), ref), 1e-12) << m << " " << z;
        }
}

TEST(Oracle, ErrorEstimateIsReported) {
    const auto r = smv::integral_I_detail(smv::real_hyperbolic(4), 2.0, cplx(20.0, 0.0));
    EXPECT_GE(r.error_estimate, 0.0);
    EXPECT_LT(r.error_estimate, 1e-10);
    EXPECT_GE(r.panels, 1);
}

TEST(Oracle, ArgumentEnvelope) {
    const auto sp = smv::real_hyperbolic(3);
    EXPECT_THROW(smv::integral_I(sp, 0.0, 1.0), smv::DomainError);
    EXPECT_THROW(smv::integral_I(sp, 5.5, 1.0), smv::DomainError);
    EXPECT_THROW(smv::integral_I(sp, 1.0, cplx(0.0, 5.5)), smv::RangeError);
    EXPECT_THROW(smv::integral_calI(13, 1.0, 1.0), smv::RangeError);
}

TEST(Oracle, QuadratureSpecValidation) {
    smv::QuadratureSpec q;
    EXPECT_NO_THROW(q.validate());
    q.oscillation_guard = 3.0;
    EXPECT_THROW(q.validate(), smv::DomainError);
    q = {};
    q.panels = 100000;
    q.nodes_per_panel = 20;
    EXPECT_THROW(q.validate(), smv::DomainError);
    q = {};
    q.abs_tol = 0.0;
    EXPECT_THROW(q.validate(), smv::DomainError);
}
