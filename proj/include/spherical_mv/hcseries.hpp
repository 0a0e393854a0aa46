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
 * @file hcseries.hpp
 * @brief Harish-Chandra expansion at rank one: radial density series, the
 *        Gamma and Gangolli recursions, the c-function, phi via the expansion,
 *        the eta conditions and the M-finder for the lower bound.
 *
 * Chart: |alpha| = 1, lambda is the scalar <lambda, alpha_0>, mu = k alpha is
 * indexed by k, rho = p/2 + q and x = e^{-t}.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "errors.hpp"
#include "formal_series.hpp"
#include "rootdata.hpp"
#include "specfun.hpp"

namespace spherical_mv {

inline constexpr double kResonanceTol = 1e-10;

// ---------------------------------------------------------------------------
// Radial density
// ---------------------------------------------------------------------------

struct RadialDensitySeries {
    RankOneSpace space;
    int K = 0;
    std::vector<double> b;  ///< delta^{1/2} e^{-rho t} in powers of x
    std::vector<double> c;  ///< delta^{-1/2} e^{rho t}
    std::vector<double> d;  ///< delta^{-1/2} (delta^{1/2})''
};

/// delta = (e^t - e^{-t})^p (e^{2t} - e^{-2t})^q = e^{2 rho t} (1 - x^2)^p (1 - x^4)^q.
inline RadialDensitySeries radial_density(const RankOneSpace& sp, int K) {
    if (K < 0 || K > 200) throw RangeError("radial_density: K must lie in [0, 200]");
    const auto n = static_cast<std::size_t>(K + 1);
    std::vector<double> x2(n, 0.0), x4(n, 0.0);
    x2[0] = x4[0] = 1.0;
    if (n > 2) x2[2] = -1.0;
    if (n > 4) x4[4] = -1.0;
    RadialDensitySeries R;
    R.space = sp;
    R.K = K;
    R.b = series::multiply(series::power_unit(x2, 0.5 * sp.p, n), series::power_unit(x4, 0.5 * sp.q, n), n);
    R.c = series::reciprocal(R.b, n);
    // delta^{1/2} = sum b_k e^{(rho - k) t}; d/dt twice multiplies b_k by (rho - k)^2.
    std::vector<double> bb(n);
    for (std::size_t k = 0; k < n; ++k) bb[k] = (sp.rho - static_cast<double>(k)) * (sp.rho - static_cast<double>(k)) * R.b[k];
    R.d = series::multiply(R.c, bb, n);
    return R;
}

// ---------------------------------------------------------------------------
// Gamma and Gangolli coefficients
// ---------------------------------------------------------------------------

struct HCSeriesData {
    RankOneSpace space;
    cplx lambda;
    int K = 0;
    std::vector<cplx> gamma;
    std::vector<cplx> gangolli;
    double eta = 0.0;
    double H0_scalar = 0.0;
};

/// Denominator k^2 - 2 i k lambda of both recursions.
inline cplx hc_denominator(int k, cplx lambda) {
    const cplx I{0.0, 1.0};
    return static_cast<double>(k * k) - 2.0 * I * static_cast<double>(k) * lambda;
}

/// Gamma_k(lambda), k = 0..K:
///   (k^2 - 2ik lambda) Gamma_k = 2p sum_{j>=1} (k + rho - 2j - i lambda) Gamma_{k-2j}
///                               + 2q sum_{j>=1} (2(k + rho - 4j) - 2i lambda) Gamma_{k-4j}.
/// Odd k never receive a contribution, so Gamma_k = 0 there and only even k
/// are tested for resonance.
inline std::vector<cplx> gamma_recursion(const RankOneSpace& sp, cplx lambda, int K) {
    const cplx I{0.0, 1.0};
    std::vector<cplx> g(static_cast<std::size_t>(K + 1), cplx{0.0, 0.0});
    g[0] = 1.0;
    for (int k = 2; k <= K; k += 2) {
        cplx rhs{0.0, 0.0};
        for (int j = 1; k - 2 * j >= 0; ++j)
            rhs += 2.0 * sp.p * (k + sp.rho - 2.0 * j - I * lambda) * g[static_cast<std::size_t>(k - 2 * j)];
        for (int j = 1; k - 4 * j >= 0; ++j)
            rhs += 2.0 * sp.q * (2.0 * (k + sp.rho - 4.0 * j) - 2.0 * I * lambda) * g[static_cast<std::size_t>(k - 4 * j)];
        const cplx den = hc_denominator(k, lambda);
        if (std::abs(den) <= kResonanceTol)
            throw ResonanceError("gamma_coeffs: lambda = " + detail::to_string(lambda) + " is resonant at k = " +
                                     std::to_string(k), k);
        g[static_cast<std::size_t>(k)] = rhs / den;
    }
    return g;
}

/// A_k(lambda): (k^2 - 2ik lambda) A_k = sum_{nu>=1} d_nu A_{k-nu}, A_0 = 1.
inline std::vector<cplx> gangolli_recursion(const RadialDensitySeries& R, cplx lambda, int K) {
    std::vector<cplx> A(static_cast<std::size_t>(K + 1), cplx{0.0, 0.0});
    A[0] = 1.0;
    for (int k = 1; k <= K; ++k) {
        cplx rhs{0.0, 0.0};
        for (int nu = 1; nu <= k; ++nu) rhs += R.d[static_cast<std::size_t>(nu)] * A[static_cast<std::size_t>(k - nu)];
        if (rhs == cplx{0.0, 0.0}) continue;
        const cplx den = hc_denominator(k, lambda);
        if (std::abs(den) <= kResonanceTol)
            throw ResonanceError("gangolli_recursion: lambda = " + detail::to_string(lambda) + " is resonant at k = " +
                                     std::to_string(k), k);
        A[static_cast<std::size_t>(k)] = rhs / den;
    }
    return A;
}

inline HCSeriesData gamma_coeffs(const RankOneSpace& sp, cplx lambda, int K, double eta = 0.0, double H0_scalar = 0.0) {
    if (K < 0 || K > 200) throw RangeError("gamma_coeffs: K must lie in [0, 200]");
    HCSeriesData D;
    D.space = sp;
    D.lambda = lambda;
    D.K = K;
    D.eta = eta;
    D.H0_scalar = H0_scalar;
    D.gamma = gamma_recursion(sp, lambda, K);
    D.gangolli = gangolli_recursion(radial_density(sp, K), lambda, K);
    return D;
}

/// max_k |Gamma_k - sum_nu c_nu A_{k-nu}| / scale_k, scale_k = max(|Gamma_k|, sum |c_nu A_{k-nu}|).
inline double cross_identity_residual(const HCSeriesData& D) {
    const auto R = radial_density(D.space, D.K);
    double worst = 0.0;
    for (int k = 0; k <= D.K; ++k) {
        cplx s{0.0, 0.0};
        double mag = 0.0;
        for (int nu = 0; nu <= k; ++nu) {
            const cplx v = R.c[static_cast<std::size_t>(nu)] * D.gangolli[static_cast<std::size_t>(k - nu)];
            s += v;
            mag += std::abs(v);
        }
        const double scale = std::max(std::abs(D.gamma[static_cast<std::size_t>(k)]), mag);
        if (scale > 0.0) worst = std::max(worst, std::abs(D.gamma[static_cast<std::size_t>(k)] - s) / scale);
    }
    return worst;
}

// ---------------------------------------------------------------------------
// c-function
// ---------------------------------------------------------------------------

/// c(lambda) = c_0 2^{-i lambda} Gamma(i lambda)
///             / (Gamma((p/2 + q + i lambda)/2) Gamma((p/2 + 1 + i lambda)/2)),
/// c_0 = Gamma((p + q + 1)/2) 2^{p/2 + q}.
inline cplx c_function(const RankOneSpace& sp, cplx lambda) {
    const cplx I{0.0, 1.0};
    const cplx il = I * lambda;
    if (detail::is_gamma_pole(il))
        throw PoleError("c_function: Gamma(i lambda) has a pole at lambda = " + detail::to_string(lambda),
                        "Gamma(i lambda)");
    const double log_c0 = std::lgamma(0.5 * (sp.p + sp.q + 1)) + (0.5 * sp.p + sp.q) * std::log(2.0);
    const cplx z1 = 0.5 * (0.5 * sp.p + sp.q + il), z2 = 0.5 * (0.5 * sp.p + 1.0 + il);
    if (detail::is_gamma_pole(z1) || detail::is_gamma_pole(z2)) return 0.0;
    return std::exp(log_c0 - il * std::log(2.0) + log_gamma(il) - log_gamma(z1) - log_gamma(z2));
}

// ---------------------------------------------------------------------------
// phi via the Harish-Chandra expansion
// ---------------------------------------------------------------------------

struct HCValue {
    cplx value;
    double tail_estimate = 0.0;
};

inline constexpr double kHCMinT = 0.5;

namespace detail {

struct SeriesSum {
    cplx value;
    double tail;
};

/// Phi_lambda(t) = sum_k Gamma_k e^{(i lambda - rho - k) t}, tail by geometric
/// extrapolation over the last five nonzero terms.
inline SeriesSum hc_series_sum(const RankOneSpace& sp, double t, cplx lambda, int K) {
    const cplx I{0.0, 1.0};
    const auto g = gamma_recursion(sp, lambda, K);
    const double x = std::exp(-t);
    cplx sum{0.0, 0.0};
    double xk = 1.0;
    std::vector<double> mags;
    for (int k = 0; k <= K; ++k) {
        const cplx term = g[static_cast<std::size_t>(k)] * xk;
        sum += term;
        if (term != cplx{0.0, 0.0}) mags.push_back(std::abs(term));
        xk *= x;
    }
    double tail = 0.0;
    if (mags.size() >= 5) {
        double r = 0.0;
        for (std::size_t i = mags.size() - 4; i < mags.size(); ++i)
            r = std::max(r, mags[i - 1] > 0.0 ? mags[i] / mags[i - 1] : 0.0);
        if (r >= 1.0)
            throw ConvergenceError("phi_hc: Harish-Chandra series not converging at t = " + std::to_string(t), mags.back());
        tail = mags.back() * r / (1.0 - r);
    }
    const cplx lead = std::exp((I * lambda - sp.rho) * t);
    return {lead * sum, std::abs(lead) * tail};
}

}  // namespace detail

/// c(lambda) Phi_lambda + c(-lambda) Phi_{-lambda} for t >= 0.5.
inline HCValue phi_hc_detail(const RankOneSpace& sp, double t, cplx lambda, int K = 60) {
    if (!(t >= kHCMinT)) throw DomainError("phi_hc: t must be >= 0.5");
    const auto plus = detail::hc_series_sum(sp, t, lambda, K);
    const auto minus = detail::hc_series_sum(sp, t, -lambda, K);
    const cplx cp = c_function(sp, lambda), cm = c_function(sp, -lambda);
    return {cp * plus.value + cm * minus.value, std::abs(cp) * plus.tail + std::abs(cm) * minus.tail};
}

inline cplx phi_hc(const RankOneSpace& sp, double t, cplx lambda, int K = 60) {
    return phi_hc_detail(sp, t, lambda, K).value;
}

/// phi_hc continued across poles of c and resonances of the recursion. Since
/// phi is entire and even in lambda, the symmetric average over lambda +- eps
/// is phi + O(eps^2); Richardson on eps, eps/2 removes that term.
inline cplx phi_hc_regularized(const RankOneSpace& sp, double t, cplx lambda, int K = 60, double eps = 1e-3) {
    try {
        return phi_hc(sp, t, lambda, K);
    } catch (const ResonanceError&) {
    } catch (const PoleError&) {
    }
    auto avg = [&](double e) { return 0.5 * (phi_hc(sp, t, lambda + e, K) + phi_hc(sp, t, lambda - e, K)); };
    return (4.0 * avg(0.5 * eps) - avg(eps)) / 3.0;
}

// ---------------------------------------------------------------------------
// eta conditions
// ---------------------------------------------------------------------------

struct EtaCondition {
    char label;
    bool pass;
    double value;  ///< the quantity tested
    std::string detail;
};

struct EtaVerdict {
    std::vector<EtaCondition> conditions;
    bool all() const {
        return std::all_of(conditions.begin(), conditions.end(), [](const EtaCondition& c) { return c.pass; });
    }
};

namespace detail {

/// x in -k Z^+ (Z^+ = {0, 1, 2, ...}) within 1e-12.
inline bool in_negative_lattice(double x, double step) {
    if (x > 1e-12) return false;
    const double r = -x / step;
    return std::abs(r - std::nearbyint(r)) < 1e-12 / step;
}

}  // namespace detail

/// Conditions (a)-(e) on eta in the rank-one chart, W = {+1, -1}.
inline EtaVerdict eta_conditions(const RankOneSpace& sp, double eta) {
    EtaVerdict v;
    v.conditions.push_back({'a', eta > 0.0, eta, "eta > 0"});
    v.conditions.push_back({'b', eta < 0.25, eta, "|eta| < |mu|/4 = 1/4"});
    auto check_both = [&](char label, double shift, double step, const std::string& what) {
        for (double s : {1.0, -1.0}) {
            const double x = s * eta + shift;
            if (detail::in_negative_lattice(x, step)) {
                v.conditions.push_back({label, false, x, what + " violated for s = " + (s > 0 ? "+1" : "-1")});
                return;
            }
        }
        v.conditions.push_back({label, true, eta + shift, what});
    };
    check_both('c', 0.0, 1.0, "+-eta not in -Z+");
    check_both('d', 0.5 * sp.p + sp.q, 2.0, "+-eta + p/2 + q not in -2Z+");
    check_both('e', 0.5 * sp.p + 1.0, 2.0, "+-eta + p/2 + 1 not in -2Z+");
    return v;
}

// ---------------------------------------------------------------------------
// M-finder and the lower bound
// ---------------------------------------------------------------------------

struct FindMResult {
    double M_star = 0.0;
    std::vector<std::pair<double, double>> curve;  ///< (M, C_M)
    double m1 = 0.0, m2 = 0.0;
    double K_H0 = 0.0;
    bool K_H0_enlarged = false;
    double eta = 0.0, H0_scalar = 0.0;

    /// C_M at the largest grid M not exceeding H (the strongest bound valid for H).
    double C_at(double H) const {
        double c = -std::numeric_limits<double>::infinity();
        for (auto [M, C] : curve)
            if (M <= H) c = C;
        return c;
    }
};

inline double c_weight(const RankOneSpace& sp, double xi) { return std::pow(1.0 + std::abs(xi), 0.5 * (sp.p + sp.q)); }

/// xi = 0 followed by a log grid on [1e-2, 1e3].
inline std::vector<double> c_ratio_grid(int points = 241) {
    std::vector<double> g{0.0};
    for (int i = 0; i < points; ++i) g.push_back(std::pow(10.0, -2.0 + 5.0 * i / (points - 1)));
    return g;
}

/// C_M = m1 - m2 K_H0 (S1 + e^{-2 eta M} (1 + S1)), S1 = sum_{k>=1} e^{-k (M - H0)}.
inline double lower_bound_constant(double M, double eta, double H0, double m1, double m2, double K_H0) {
    const double r = std::exp(-(M - H0));
    const double S1 = r / (1.0 - r);
    return m1 - m2 * K_H0 * (S1 + std::exp(-2.0 * eta * M) * (1.0 + S1));
}

inline FindMResult find_M(const RankOneSpace& sp, double eta, double H0_scalar, int K = 60) {
    if (!eta_conditions(sp, eta).all()) throw DomainError("find_M: eta = " + std::to_string(eta) + " fails eta_conditions");
    if (!(H0_scalar > 0.0 && H0_scalar <= 1.0)) throw DomainError("find_M: H0_scalar must lie in (0, 1]");
    FindMResult R;
    R.eta = eta;
    R.H0_scalar = H0_scalar;
    R.m1 = std::numeric_limits<double>::infinity();
    for (double xi : c_ratio_grid()) {
        const cplx lam{xi, -eta};
        const double w = c_weight(sp, xi);
        const double plus = std::abs(c_function(sp, lam)) * w;
        const double minus = std::abs(c_function(sp, -lam)) * w;
        R.m1 = std::min(R.m1, plus);
        R.m2 = std::max({R.m2, plus, minus});
    }
    const int kmax = std::max(K, 60);
    double verified = 0.0;
    for (double xi : {0.0, 1.0, 5.0, 25.0})
        for (double s : {1.0, -1.0}) {
            const auto g = gamma_recursion(sp, s * cplx{xi, -eta}, kmax);
            for (int k = 0; k <= kmax; ++k) {
                const double v = std::abs(g[static_cast<std::size_t>(k)]) * std::exp(-k * H0_scalar);
                if (k <= 10) R.K_H0 = std::max(R.K_H0, v);
                verified = std::max(verified, v);
            }
        }
    if (verified > R.K_H0) {
        R.K_H0 = verified;
        R.K_H0_enlarged = true;
    }
    const double step = 0.25;
    double M = H0_scalar;
    for (int i = 1; i <= 1600; ++i) {
        M = H0_scalar + step * i;
        const double C = lower_bound_constant(M, eta, H0_scalar, R.m1, R.m2, R.K_H0);
        R.curve.emplace_back(M, C);
        if (C > 0.0 && R.M_star == 0.0) R.M_star = M;
        if (R.M_star != 0.0 && M >= R.M_star + 20.0) break;
    }
    if (R.M_star == 0.0)
        throw SearchExhaustedError("find_M: C_M <= 0 on the whole grid up to M = " + std::to_string(M), M);
    return R;
}

struct LowerBoundPoint {
    double xi;
    double lhs;  ///< e^{(rho - eta) t} |phi_{xi - i eta}|
    double rhs;  ///< C (1 + |xi|)^{-(p+q)/2}
};

struct LowerBoundVerdict {
    bool pass = true;
    double C = 0.0;
    double min_margin = std::numeric_limits<double>::infinity();  ///< min lhs / rhs
    std::vector<LowerBoundPoint> points;
    std::string detail;
};

/// e^{(rho - eta) t} |phi_{xi - i eta}(exp tH)| >= C (1 + |xi|)^{-(p+q)/2} on xi_grid,
/// C = scale * C_M at the largest M <= t on the find_M curve.
inline LowerBoundVerdict lower_bound_check(const RankOneSpace& sp, const FindMResult& fm, double H_scalar,
                                           const std::vector<double>& xi_grid, double scale = 1.0, int K = 60) {
    if (!(H_scalar > fm.M_star)) throw DomainError("lower_bound_check: H_scalar must exceed M_star");
    LowerBoundVerdict V;
    V.C = scale * fm.C_at(H_scalar);
    const double t = H_scalar;
    for (double xi : xi_grid) {
        const cplx phi = phi_hc(sp, t, cplx{xi, -fm.eta}, K);
        const double lhs = std::exp((sp.rho - fm.eta) * t) * std::abs(phi);
        const double rhs = V.C / c_weight(sp, xi);
        V.points.push_back({xi, lhs, rhs});
        V.min_margin = std::min(V.min_margin, lhs / rhs);
        if (!(lhs >= rhs) && V.pass) {
            V.pass = false;
            V.detail = "violated at xi = " + std::to_string(xi) + ": lhs " + std::to_string(lhs) + " < rhs " +
                       std::to_string(rhs);
        }
    }
    return V;
}

}  // namespace spherical_mv
