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
 * @file rankone.hpp
 * @brief Rank-one evaluators: odd-dimension recurrence, even-dimension Bessel
 *        series, and the Koornwinder normalisation of phi_zeta.
 */
#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "errors.hpp"
#include "formal_series.hpp"
#include "oracle.hpp"
#include "rootdata.hpp"
#include "specfun.hpp"

namespace spherical_mv {

enum class Route { Auto, Oracle, Recurrence, Series };

inline const char* route_name(Route r) {
    switch (r) {
        case Route::Auto: return "auto";
        case Route::Oracle: return "oracle";
        case Route::Recurrence: return "recurrence";
        case Route::Series: return "series";
    }
    return "?";
}

/// sin(zeta t) / zeta, continuous at zeta = 0.
inline cplx sin_over(cplx zeta, double t) {
    const cplx x = zeta * t;
    if (std::abs(x) < 1e-4) {
        const cplx x2 = x * x;
        return t * (1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0)));
    }
    return std::sin(x) / zeta;
}

// ---------------------------------------------------------------------------
// Odd n
// ---------------------------------------------------------------------------

/// calI_m(zeta) = P_m(zeta) sin(zeta t)/zeta + Q_m(zeta) cos(zeta t), with P_m, Q_m
/// evaluated numerically at one zeta through the three-term recurrence.
struct RationalTrigForm {
    int m = 0;
    double t = 1.0;
    cplx P{2.0, 0.0};
    cplx Q{0.0, 0.0};
    double magnitude = 0.0;  ///< the recurrence run on moduli: bounds the size of the cancelling terms

    cplx value(cplx zeta) const { return P * sin_over(zeta, t) + Q * std::cos(zeta * t); }
};

/// Largest k <= m with |zeta^2 + k^2| < 1e-6, or -1.
inline int recurrence_singular_index(int m, cplx zeta) {
    for (int k = 1; k <= m; ++k)
        if (std::abs(zeta * zeta + static_cast<double>(k * k)) < 1e-6) return k;
    return -1;
}

inline RationalTrigForm rational_trig_form(int m, double t, cplx zeta) {
    if (m < 0) throw DomainError("rational_trig_form: m must be >= 0");
    const double ch = std::cosh(t), sh = std::sinh(t);
    const double s0 = std::abs(sin_over(zeta, t)), c0 = std::abs(std::cos(zeta * t));
    RationalTrigForm f0{0, t, {2.0, 0.0}, {0.0, 0.0}, 2.0 * s0};
    if (m == 0) return f0;
    const cplx den1 = zeta * zeta + 1.0;
    RationalTrigForm f1{1, t, 2.0 * ch / den1, -2.0 * sh / den1, 2.0 * (ch * s0 + sh * c0) / std::abs(den1)};
    RationalTrigForm prev = f0, cur = f1;
    for (int k = 2; k <= m; ++k) {
        const cplx den = zeta * zeta + static_cast<double>(k * k);
        // (zeta^2 + k^2) calI_k = k(2k-1) cosh t calI_{k-1} - k(k-1) sinh^2 t calI_{k-2}
        const double a = static_cast<double>(k) * (2.0 * k - 1.0) * ch;
        const double b = -static_cast<double>(k) * (k - 1.0) * sh * sh;
        RationalTrigForm next{k, t, (a * cur.P + b * prev.P) / den, (a * cur.Q + b * prev.Q) / den,
                              (std::abs(a) * cur.magnitude + std::abs(b) * prev.magnitude) / std::abs(den)};
        prev = cur;
        cur = next;
    }
    return cur;
}

struct RecurrenceValue {
    cplx value;
    double est_error = 0.0;
    bool oracle_fallback = false;
};

/// Relative rounding level above which the recurrence hands over to the oracle.
inline constexpr double kRecurrenceRelTol = 1e-11;

/// calI_m(zeta) by the recurrence, falling back to the quadrature oracle when
/// zeta is within the removable-singularity guard of some +-ik, or when the
/// upward recurrence has lost accuracy. calI_m is the minimal solution for
/// small t |zeta|, so its terms cancel; the rounding estimate is
/// (m + 1) eps times the recurrence run on moduli.
inline RecurrenceValue calI_recurrence_detail(int m, double t, cplx zeta) {
    if (m < 0 || m > 12) throw RangeError("calI_recurrence: m must lie in [0, 12]");
    if (!(t > 0.0)) throw DomainError("calI_recurrence: t must be positive");
    auto by_oracle = [&] {
        const auto r = integral_calI_detail(m, t, zeta);
        return RecurrenceValue{r.value, r.error_estimate, true};
    };
    if (recurrence_singular_index(m, zeta) >= 0) return by_oracle();
    const auto f = rational_trig_form(m, t, zeta);
    const cplx v = f.value(zeta);
    const double err = (m + 1) * std::numeric_limits<double>::epsilon() * f.magnitude;
    if (m >= 2 && err > kRecurrenceRelTol * std::abs(v)) return by_oracle();
    return {v, err, false};
}

inline cplx calI_recurrence(int m, double t, cplx zeta) { return calI_recurrence_detail(m, t, zeta).value; }

/// I(zeta) = calI_{(n-3)/2}(zeta) / 2 for odd n (where q = 0 and 2F1 = 1).
inline cplx I_odd(const RankOneSpace& sp, double t, cplx zeta) {
    if (!sp.odd_dimension()) throw DomainError("I_odd: dimension of " + sp.name + " is even");
    if (sp.q != 0) throw DomainError("I_odd: recurrence needs q = 0 (" + sp.name + ")");
    return 0.5 * calI_recurrence(sp.ell(), t, zeta);
}

inline RecurrenceValue I_odd_detail(const RankOneSpace& sp, double t, cplx zeta) {
    if (!sp.odd_dimension()) throw DomainError("I_odd: dimension of " + sp.name + " is even");
    if (sp.q != 0) throw DomainError("I_odd: recurrence needs q = 0 (" + sp.name + ")");
    auto r = calI_recurrence_detail(sp.ell(), t, zeta);
    r.value *= 0.5;
    r.est_error *= 0.5;
    return r;
}

// ---------------------------------------------------------------------------
// Even n: Bessel series
// ---------------------------------------------------------------------------

/// Coefficients of the Bessel expansion, in working precision Real.
template <class Real>
struct BasicBesselSeriesData {
    double t = 1.0;
    RankOneSpace space;
    int N = 6;
    std::vector<Real> a;               ///< a_0 .. a_N
    std::vector<std::vector<Real>> b;  ///< b[k][j] = b_j^{(ell + k)}, k, j < N
    std::vector<Real> c;               ///< c_0 .. c_{N-1}
    std::vector<Real> d;               ///< d_0 .. d_{N-1}
};

using BesselSeriesData = BasicBesselSeriesData<double>;

/// a_k = (-1)^k f^{(k+1)}(t^2) / (k+1)! with f(z) = sum z^k / (2k)!, i.e.
/// a_k = (-1)^k sum_{i > k} C(i, k+1) z^{i-k-1} / (2i)! at z = t^2.
template <class Real = double>
Real bessel_a_coefficient(int k, double t) {
    const int j = k + 1;
    const Real z = static_cast<Real>(t) * static_cast<Real>(t);
    Real term = 1;
    for (int i = 1; i <= 2 * j; ++i) term /= i;
    Real sum = 0;
    const Real eps = std::numeric_limits<Real>::epsilon() / 100;
    for (int i = j; i < j + 400; ++i) {
        sum += term;
        term *= static_cast<Real>(i + 1) / static_cast<Real>(i + 1 - j) * z / (static_cast<Real>(2 * i + 1) * (2 * i + 2));
        if (term < eps * sum) break;
    }
    return (k % 2 == 0 ? 1 : -1) * sum;
}

template <class Real = double>
BasicBesselSeriesData<Real> build_bessel_series(const RankOneSpace& sp, double t, int N) {
    using std::pow, std::cosh;
    if (sp.odd_dimension()) throw DomainError("build_bessel_series: dimension of " + sp.name + " is odd");
    if (N < 1 || N > 12) throw RangeError("build_bessel_series: N must lie in [1, 12]");
    if (!(t > 0.0)) throw DomainError("build_bessel_series: t must be positive");
    BasicBesselSeriesData<Real> D;
    D.t = t;
    D.space = sp;
    D.N = N;
    const int ell = sp.ell();
    for (int k = 0; k <= N; ++k) D.a.push_back(bessel_a_coefficient<Real>(k, t));
    std::vector<Real> unit(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) unit[static_cast<std::size_t>(k)] = D.a[static_cast<std::size_t>(k)] / D.a[0];
    unit[0] = 1;
    for (int k = 0; k < N; ++k) D.b.push_back(series::power_unit(unit, ell + k - 0.5, static_cast<std::size_t>(N)));
    const Real two_cosh = 2 * cosh(static_cast<Real>(t));
    const HypergeometricParams hp = HypergeometricParams::for_space(sp);
    Real ck = 1;
    for (int k = 0; k < N; ++k) {
        D.c.push_back(ck);
        ck *= static_cast<Real>((hp.a + k) * (hp.b + k)) / (static_cast<Real>((hp.c + k) * (k + 1.0)) * two_cosh);
    }
    for (int m = 0; m < N; ++m) {
        Real s = 0;
        for (int k = 0; k <= m; ++k)
            s += pow(D.a[0], static_cast<Real>(ell + k - 0.5)) * D.b[static_cast<std::size_t>(k)][static_cast<std::size_t>(m - k)] *
                 D.c[static_cast<std::size_t>(k)];
        D.d.push_back(std::numbers::pi_v<Real> / 2 * double_factorial(2 * ell + 2 * m - 1).template convert_to<Real>() * s);
    }
    return D;
}

struct SeriesValue {
    cplx value;
    int remainder_bound_order = 0;
    double last_term = 0.0;  ///< max modulus of the two last terms, a truncation estimate
};

/// sum_{m<N} d_m (t/zeta)^{ell+m} J_{ell+m}(zeta t). Requires |zeta| >= 1.
inline SeriesValue I_even_series_detail(const BesselSeriesData& D, cplx zeta) {
    if (std::abs(zeta) < 1.0) throw DomainError("I_even_series: |zeta| < 1 belongs to the oracle route");
    const int ell = D.space.ell();
    const auto J = bessel_j_sequence(ell, D.N, zeta * D.t);
    const cplx ratio = D.t / zeta;
    cplx pw = std::pow(ratio, ell);
    SeriesValue out{{0.0, 0.0}, D.N, 0.0};
    for (int m = 0; m < D.N; ++m) {
        const cplx term = D.d[static_cast<std::size_t>(m)] * pw * J[static_cast<std::size_t>(m)];
        out.value += term;
        if (m >= D.N - 2) out.last_term = std::max(out.last_term, std::abs(term));
        pw *= ratio;
    }
    return out;
}

inline SeriesValue I_even_series(const BesselSeriesData& D, cplx zeta) { return I_even_series_detail(D, zeta); }

/// The same N-term sum at real lambda with |lambda| >= 1, carried out in the
/// working precision of D (used where the remainder falls below double rounding).
template <class Real>
Real I_even_series_real(const BasicBesselSeriesData<Real>& D, Real lambda) {
    using std::abs, std::pow;
    if (abs(lambda) < 1) throw DomainError("I_even_series: |zeta| < 1 belongs to the oracle route");
    const int ell = D.space.ell();
    const auto J = bessel_j_sequence_real<Real>(ell, D.N, lambda * static_cast<Real>(D.t));
    const Real ratio = static_cast<Real>(D.t) / lambda;
    Real pw = pow(ratio, ell), sum = 0;
    for (int m = 0; m < D.N; ++m) {
        sum += D.d[static_cast<std::size_t>(m)] * pw * J[static_cast<std::size_t>(m)];
        pw *= ratio;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Route selection and phi
// ---------------------------------------------------------------------------

struct IValue {
    cplx value;
    Route route = Route::Auto;
    double est_error = 0.0;
};

inline constexpr int kAutoSeriesOrder = 12;

/// I(zeta) through the requested route; Route::Auto picks the recurrence for
/// odd n with q = 0, the Bessel series for even n when |zeta| >= 1 and the
/// truncation estimate is below 1e-12 relative, and the oracle otherwise.
inline IValue evaluate_I(const RankOneSpace& sp, double t, cplx zeta, Route route = Route::Auto,
                         int N = kAutoSeriesOrder, const QuadratureSpec& qs = {}) {
    auto by_oracle = [&] {
        const auto r = integral_I_detail(sp, t, zeta, qs);
        return IValue{r.value, Route::Oracle, r.error_estimate};
    };
    auto by_recurrence = [&] {
        const auto r = I_odd_detail(sp, t, zeta);
        return IValue{r.value, r.oracle_fallback ? Route::Oracle : Route::Recurrence, r.est_error};
    };
    auto by_series = [&] {
        const auto D = build_bessel_series(sp, t, N);
        const auto s = I_even_series_detail(D, zeta);
        return IValue{s.value, Route::Series, s.last_term};
    };
    switch (route) {
        case Route::Oracle: return by_oracle();
        case Route::Recurrence: return by_recurrence();
        case Route::Series: return by_series();
        case Route::Auto: break;
    }
    if (sp.odd_dimension()) return sp.q == 0 ? by_recurrence() : by_oracle();
    if (std::abs(zeta) >= 1.0 && std::abs(zeta.imag() * t) <= kBesselSeriesRadius && sp.ell() + N - 1 <= 64) {
        try {
            const IValue s = by_series();
            if (s.est_error < 1e-12 * (1.0 + std::abs(s.value))) return s;
        } catch (const RangeError&) {
        }
    }
    return by_oracle();
}

/// 2^{(n-1)/2} Gamma(n/2) / (Gamma((n-1)/2) Gamma(1/2) (sinh t)^{n-2} (cosh t)^{q/2}).
inline double koornwinder_prefactor(const RankOneSpace& sp, double t) {
    const double n = sp.n;
    const double lg = 0.5 * (n - 1) * std::log(2.0) + std::lgamma(0.5 * n) - std::lgamma(0.5 * (n - 1)) -
                      0.5 * std::log(std::numbers::pi) - (n - 2) * std::log(std::sinh(t)) -
                      0.5 * sp.q * std::log(std::cosh(t));
    return std::exp(lg);
}

inline IValue koornwinder_phi_detail(const RankOneSpace& sp, double t, cplx zeta, Route route = Route::Auto,
                                     int N = kAutoSeriesOrder) {
    if (!(t > 0.0)) throw DomainError("koornwinder_phi: t must be positive");
    IValue v = evaluate_I(sp, t, zeta, route, N);
    const double pre = koornwinder_prefactor(sp, t);
    v.value *= pre;
    v.est_error *= pre;
    return v;
}

/// phi_zeta(exp tH) on a rank-one space via Koornwinder's integral.
inline cplx koornwinder_phi(const RankOneSpace& sp, double t, cplx zeta) {
    return koornwinder_phi_detail(sp, t, zeta).value;
}

}  // namespace spherical_mv
