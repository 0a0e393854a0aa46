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

// Independent references shared by the unit tests.

#pragma once

#include <cmath>
#include <complex>
#include <functional>

namespace test_ref {

using cplx = std::complex<double>;

/// Composite three-point Gauss rule on [a, b], long double accumulation.
inline cplx gauss3(const std::function<cplx(double)>& f, double a, double b, int panels) {
    const double x = std::sqrt(0.6), h = (b - a) / panels;
    std::complex<long double> s{0.0L, 0.0L};
    for (int k = 0; k < panels; ++k) {
        const double m = a + (k + 0.5) * h, r = 0.5 * h;
        const cplx v = 5.0 / 9.0 * (f(m - r * x) + f(m + r * x)) + 8.0 / 9.0 * f(m);
        s += std::complex<long double>(v.real(), v.imag()) * static_cast<long double>(r);
    }
    return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

/// int_0^t cos(zeta s) (cosh t - cosh s)^alpha w(cosh t - cosh s) ds through
/// s = t cos(theta), which turns the endpoint singularity into a smooth zero.
inline cplx radial_integral(double t, cplx zeta, double alpha, const std::function<double(double)>& w,
                            int panels = 4000) {
    auto f = [&](double th) {
        const double c = std::cos(th), half = std::sin(0.5 * th);
        // cosh t - cosh(t c) = 2 sinh(t (1 + c) / 2) sinh(t (1 - c) / 2), 1 - c = 2 sin^2(th/2)
        const double Z = 2.0 * std::sinh(0.5 * t * (1.0 + c)) * std::sinh(t * half * half);
        if (Z <= 0.0) return cplx{0.0, 0.0};
        return std::cos(zeta * (t * c)) * std::pow(Z, alpha) * w(Z) * t * std::sin(th);
    };
    return gauss3(f, 0.0, 0.5 * std::acos(-1.0), panels);
}

/// Relative error with an absolute floor of 1.
inline double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace test_ref
