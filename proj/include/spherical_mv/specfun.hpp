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

/**
 * @file specfun.hpp
 * @brief Complex log-Gamma, Bessel J of integer order, the Koornwinder
 *        hypergeometric series and exact double factorials.
 */
#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"
#include "rootdata.hpp"

namespace spherical_mv {

// ---------------------------------------------------------------------------
// log-Gamma
// ---------------------------------------------------------------------------

namespace detail {

// B_{2k} / (2k (2k-1)), k = 1..10
inline constexpr double kStirling[] = {
    1.0 / 12.0,           -1.0 / 360.0,          1.0 / 1260.0,        -1.0 / 1680.0,
    1.0 / 1188.0,         -691.0 / 360360.0,     1.0 / 156.0,         -3617.0 / 122400.0,
    43867.0 / 244188.0,   -174611.0 / 125400.0,
};

inline bool is_gamma_pole(cplx z) {
    if (z.imag() != 0.0 || z.real() > 0.0) return false;
    return z.real() == std::nearbyint(z.real());
}

}  // namespace detail

/// Principal-branch log Gamma(z): the continuation from the positive real axis
/// with branch cut along the negative real axis.
///
/// Shifts z upward by the recurrence until Re z >= 15, then applies the
/// Stirling series with ten Bernoulli terms. Throws DomainError at poles.
inline cplx log_gamma(cplx z) {
    if (detail::is_gamma_pole(z))
        throw DomainError("log_gamma: pole at z = " + detail::to_string(z));
    cplx shift_log{0.0, 0.0};
    cplx w = z;
    while (w.real() < 15.0) {
        shift_log += std::log(w);
        w += 1.0;
    }
    const cplx inv = 1.0 / w;
    const cplx inv2 = inv * inv;
    cplx tail{0.0, 0.0};
    cplx pw = inv;
    for (double b : detail::kStirling) {
        tail += b * pw;
        pw *= inv2;
    }
    const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
    return (w - 0.5) * std::log(w) - w + half_log_2pi + tail - shift_log;
}

inline cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

// ---------------------------------------------------------------------------
// Bessel J_m(z), integer m >= 0
// ---------------------------------------------------------------------------

/// Largest |Im z| accepted by bessel_j.
inline constexpr double kBesselImagEnvelope = 10.0;
/// |z| at or below which the ascending series is used.
inline constexpr double kBesselSeriesRadius = 12.0;

namespace detail {

inline cplx bessel_j_ascending(int m, cplx z) {
    const cplx half = 0.5 * z;
    const cplx half2 = half * half;
    cplx term = 1.0;
    for (int k = 1; k <= m; ++k) term *= half / static_cast<double>(k);
    cplx sum = term;
    double biggest = std::abs(term);
    for (int k = 1; k < 500; ++k) {
        term *= -half2 / (static_cast<double>(k) * static_cast<double>(k + m));
        sum += term;
        biggest = std::max(biggest, std::abs(term));
        if (std::abs(term) <= 1e-18 * std::max(biggest, std::abs(sum)) && static_cast<double>(k) > std::abs(half)) break;
    }
    return sum;
}

/// Trapezoid nodes needed so that the aliased orders m +- N are negligible.
inline int bessel_trapezoid_nodes(int max_order, double modulus) {
    double n = max_order + modulus + 15.0 * std::cbrt(modulus) + 40.0;
    int nodes = static_cast<int>(std::ceil(n));
    return nodes + (nodes % 2);
}

/// J_{m0}, ..., J_{m0+count-1} from the periodic trapezoid rule applied to
/// J_m(z) = (1/2pi) int_0^{2pi} exp(i (z sin th - m th)) dth.
/// Real-argument variant using the symmetries th -> -th and th -> pi - th:
/// with N = 4Q nodes the full-period sum reduces to the quarter [0, pi/2].
/// Templated on the working precision.
template <class Real>
std::vector<Real> bessel_j_trapezoid_real_t(int m0, int count, Real x) {
    using std::abs, std::cos, std::sin;
    int N = bessel_trapezoid_nodes(m0 + count - 1, static_cast<double>(abs(x)));
    N += (4 - N % 4) % 4;
    const int Q = N / 4;
    const Real two_pi = 2 * std::numbers::pi_v<Real>;
    std::vector<Real> c(static_cast<std::size_t>(Q + 1)), s(static_cast<std::size_t>(Q + 1));
    std::vector<std::complex<Real>> rot(static_cast<std::size_t>(Q + 1)), step(static_cast<std::size_t>(Q + 1));
    for (int k = 0; k <= Q; ++k) {
        const Real th = two_pi * k / N;
        const Real arg = x * sin(th);
        c[static_cast<std::size_t>(k)] = cos(arg);
        s[static_cast<std::size_t>(k)] = sin(arg);
        step[static_cast<std::size_t>(k)] = std::polar(Real{1}, th);
        rot[static_cast<std::size_t>(k)] = std::polar(Real{1}, th * m0);
    }
    std::vector<Real> out(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
        const bool even = (m0 + j) % 2 == 0;
        auto f = [&](std::size_t k) { return even ? c[k] * rot[k].real() : s[k] * rot[k].imag(); };
        Real acc = 2 * (f(0) + f(static_cast<std::size_t>(Q)));
        for (std::size_t k = 1; k < static_cast<std::size_t>(Q); ++k) acc += 4 * f(k);
        for (auto k = 0u; k < rot.size(); ++k) rot[k] *= step[k];
        out[static_cast<std::size_t>(j)] = acc / N;
    }
    return out;
}

template <class Real>
Real bessel_j_ascending_real(int m, Real x) {
    using std::abs;
    const Real half = x / 2;
    const Real half2 = half * half;
    Real term = 1;
    for (int k = 1; k <= m; ++k) term *= half / k;
    Real sum = term;
    Real biggest = abs(term);
    const Real eps = std::numeric_limits<Real>::epsilon() / 100;
    for (int k = 1; k < 500; ++k) {
        term *= -half2 / (static_cast<Real>(k) * static_cast<Real>(k + m));
        sum += term;
        biggest = std::max(biggest, abs(term));
        if (abs(term) <= eps * std::max(biggest, abs(sum)) && k > abs(half)) break;
    }
    return sum;
}

inline std::vector<cplx> bessel_j_trapezoid_real(int m0, int count, double x) {
    const auto r = bessel_j_trapezoid_real_t<double>(m0, count, x);
    return {r.begin(), r.end()};
}

inline std::vector<cplx> bessel_j_trapezoid(int m0, int count, cplx z) {
    if (z.imag() == 0.0) return bessel_j_trapezoid_real(m0, count, z.real());
    const int N = bessel_trapezoid_nodes(m0 + count - 1, std::abs(z));
    std::vector<cplx> e(static_cast<std::size_t>(N)), rot(static_cast<std::size_t>(N)), step(static_cast<std::size_t>(N));
    const cplx I{0.0, 1.0};
    for (int k = 0; k < N; ++k) {
        const double th = 2.0 * std::numbers::pi * k / N;
        e[static_cast<std::size_t>(k)] = std::exp(I * z * std::sin(th));
        step[static_cast<std::size_t>(k)] = std::polar(1.0, -th);
        rot[static_cast<std::size_t>(k)] = std::polar(1.0, -th * m0);
    }
    std::vector<cplx> out(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
        cplx acc{0.0, 0.0};
        for (std::size_t k = 0; k < e.size(); ++k) {
            acc += e[k] * rot[k];
            rot[k] *= step[k];
        }
        out[static_cast<std::size_t>(j)] = acc / static_cast<double>(N);
    }
    return out;
}

inline void check_bessel_envelope(int m, cplx z) {
    if (m < 0 || m > 64) throw RangeError("bessel_j: order must lie in [0, 64] (got " + std::to_string(m) + ")");
    if (std::abs(z.imag()) > kBesselImagEnvelope)
        throw RangeError("bessel_j: |Im z| exceeds envelope at z = " + to_string(z));
}

}  // namespace detail

/// Bessel function of the first kind J_m(z) for integer 0 <= m <= 64 and |Im z| <= 10.
/// Ascending series for |z| <= 12, periodic trapezoid rule on the integral
/// definition beyond.
inline cplx bessel_j(int m, cplx z) {
    detail::check_bessel_envelope(m, z);
    if (std::abs(z) <= kBesselSeriesRadius) return detail::bessel_j_ascending(m, z);
    return detail::bessel_j_trapezoid(m, 1, z).front();
}

/// J_{m0}, ..., J_{m0+count-1}(x) for real x in the working precision Real,
/// same algorithm split as bessel_j_sequence.
template <class Real>
std::vector<Real> bessel_j_sequence_real(int m0, int count, Real x) {
    detail::check_bessel_envelope(m0, cplx{0.0, 0.0});
    detail::check_bessel_envelope(m0 + count - 1, cplx{0.0, 0.0});
    using std::abs;
    if (abs(x) <= kBesselSeriesRadius) {
        std::vector<Real> out;
        for (int m = m0; m < m0 + count; ++m) out.push_back(detail::bessel_j_ascending_real(m, x));
        return out;
    }
    return detail::bessel_j_trapezoid_real_t(m0, count, x);
}

/// J_{m0}, ..., J_{m0+count-1}(z), sharing work across orders.
inline std::vector<cplx> bessel_j_sequence(int m0, int count, cplx z) {
    detail::check_bessel_envelope(m0, z);
    detail::check_bessel_envelope(m0 + count - 1, z);
    if (std::abs(z) <= kBesselSeriesRadius) {
        std::vector<cplx> out;
        out.reserve(static_cast<std::size_t>(count));
        for (int m = m0; m < m0 + count; ++m) out.push_back(detail::bessel_j_ascending(m, z));
        return out;
    }
    return detail::bessel_j_trapezoid(m0, count, z);
}

// ---------------------------------------------------------------------------
// 2F1(1 - q/2, q/2; (n-1)/2; z)
// ---------------------------------------------------------------------------

/// Parameters of the Gauss series appearing in Koornwinder's integral.
struct HypergeometricParams {
    double a = 1.0;
    double b = 0.0;
    double c = 0.5;
    int max_terms = 400;

    static HypergeometricParams for_space(const RankOneSpace& s) {
        return {1.0 - 0.5 * s.q, 0.5 * s.q, 0.5 * (s.n - 1), 400};
    }
};

/// First `terms` partial sum of the Gauss series at z.
inline double gauss_2f1_partial(const HypergeometricParams& hp, double z, int terms) {
    double term = 1.0, sum = 0.0;
    for (int k = 0; k < terms; ++k) {
        sum += term;
        term *= (hp.a + k) * (hp.b + k) / ((hp.c + k) * (k + 1.0)) * z;
        if (term == 0.0) break;
    }
    return sum;
}

/// Gauss series on 0 <= z < 1/2. Summation stops once the geometric tail
/// bound |T_{k+1}| / (1 - z) drops below 1e-16 (the term ratio never exceeds z
/// for this parameter family since a + b = 1).
inline double gauss_2f1(const HypergeometricParams& hp, double z) {
    if (!(z >= 0.0 && z < 0.5)) throw RangeError("gauss_2f1: argument outside [0, 1/2): " + std::to_string(z));
    double term = 1.0, sum = 0.0;
    for (int k = 0; k < hp.max_terms; ++k) {
        sum += term;
        term *= (hp.a + k) * (hp.b + k) / ((hp.c + k) * (k + 1.0)) * z;
        if (std::abs(term) / (1.0 - z) < 1e-16 * std::max(1.0, std::abs(sum))) return sum + term;
    }
    throw ConvergenceError("gauss_2f1: series did not converge", std::abs(term));
}

// ---------------------------------------------------------------------------
// Double factorial
// ---------------------------------------------------------------------------

using BigInt = boost::multiprecision::cpp_int;

/// L!! with (-1)!! = 0!! = 1, exact.
inline BigInt double_factorial(int L) {
    if (L < -1) throw DomainError("double_factorial: L must be >= -1 (got " + std::to_string(L) + ")");
    BigInt r = 1;
    for (int k = L; k > 1; k -= 2) r *= k;
    return r;
}

inline double double_factorial_real(int L) { return double_factorial(L).convert_to<double>(); }

}  // namespace spherical_mv
