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
 * @file complexgrp.hpp
 * @brief Spherical functions of complex groups of type A_l: the regular
 *        formula, the wall formula, and the Weyl denominator identity.
 *
 * Coordinates are ambient (l + 1 entries summing to zero). rho = sum of the
 * positive roots e_i - e_j, i < j, and lambda(H) = sum lambda_i H_i.
 */
#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rootdata.hpp"

namespace spherical_mv {

inline constexpr double kRegularityTol = 1e-12;

struct ComplexGroupPoint {
    WeylGroupA W;
    std::vector<double> H;
    std::vector<cplx> lambda;
    std::vector<std::pair<int, int>> walls;  ///< positive roots vanishing on H
    std::vector<int> block_sizes;            ///< sizes of the classes of equal coordinates
    long w0_order = 1;                       ///< |W_0| = prod (block size)!

    bool regular() const noexcept { return walls.empty(); }
};

namespace detail {

template <class T>
std::vector<T> checked_ambient(const WeylGroupA& W, const std::vector<T>& v, const char* what) {
    auto a = to_ambient(W, v);
    T s{};
    double scale = 1.0;
    for (auto& x : a) {
        s += x;
        scale += std::abs(x);
    }
    if (std::abs(s) > 1e-9 * scale) throw DomainError(std::string(what) + ": coordinates must sum to zero");
    return a;
}

inline double dot_real(const std::vector<double>& a, const std::vector<double>& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

inline cplx dot(const std::vector<cplx>& a, const std::vector<double>& b) {
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace detail

/// Builds the point and classifies H: walls are the positive roots with
/// |H_i - H_j| < 1e-12, blocks are the classes of equal coordinates.
inline ComplexGroupPoint make_complex_point(const WeylGroupA& W, const std::vector<double>& H,
                                            const std::vector<cplx>& lambda) {
    ComplexGroupPoint cp;
    cp.W = W;
    cp.H = detail::checked_ambient(W, H, "make_complex_point(H)");
    cp.lambda = detail::checked_ambient(W, lambda, "make_complex_point(lambda)");
    for (auto [i, j] : W.positive_roots)
        if (std::abs(cp.H[static_cast<std::size_t>(i)] - cp.H[static_cast<std::size_t>(j)]) < kRegularityTol)
            cp.walls.emplace_back(i, j);
    std::vector<int> root(static_cast<std::size_t>(W.dim()));
    std::iota(root.begin(), root.end(), 0);
    for (auto [i, j] : cp.walls) {
        int a = root[static_cast<std::size_t>(i)], b = root[static_cast<std::size_t>(j)];
        for (auto& r : root)
            if (r == b) r = a;
    }
    std::map<int, int> count;
    for (int r : root) ++count[r];
    for (auto [r, c] : count) {
        cp.block_sizes.push_back(c);
        for (int k = 2; k <= c; ++k) cp.w0_order *= k;
    }
    return cp;
}

enum class DenominatorRoute { Sum, Product };

/// sum_s det(s) e^{s rho(H)} or prod_{alpha > 0} (e^{alpha(H)} - e^{-alpha(H)}).
inline double weyl_denominator(const WeylGroupA& W, const std::vector<double>& H_in, DenominatorRoute route) {
    if (W.rank > 4) throw RangeError("weyl_denominator: rank must be <= 4");
    const auto H = detail::checked_ambient(W, H_in, "weyl_denominator");
    if (route == DenominatorRoute::Product) {
        double prod = 1.0;
        for (auto [i, j] : W.positive_roots) {
            const double a = H[static_cast<std::size_t>(i)] - H[static_cast<std::size_t>(j)];
            prod *= 2.0 * std::sinh(a);
        }
        return prod;
    }
    // The alternating sum cancels near walls; each term carries the rounding of
    // the largest one, so it is accumulated in extended precision.
    const auto rho = rho_A(W);
    long double sum = 0.0L;
    for (const auto& s : W.elements) {
        const auto srho = W.apply(s, rho);
        long double e = 0.0L;
        for (std::size_t i = 0; i < H.size(); ++i) e += static_cast<long double>(srho[i]) * H[i];
        sum += s.sign * std::exp(e);
    }
    return static_cast<double>(sum);
}

namespace detail {

/// pi(i lambda) = prod_{i<j} i (lambda_i - lambda_j) over the given roots.
inline cplx pi_i(const std::vector<std::pair<int, int>>& roots, const std::vector<cplx>& lam) {
    const cplx I{0.0, 1.0};
    cplx p{1.0, 0.0};
    for (auto [i, j] : roots) p *= I * (lam[static_cast<std::size_t>(i)] - lam[static_cast<std::size_t>(j)]);
    return p;
}

inline double pi_real(const std::vector<std::pair<int, int>>& roots, const std::vector<double>& v) {
    double p = 1.0;
    for (auto [i, j] : roots) p *= v[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(j)];
    return p;
}

/// The wall formula with c = 1; reduces to the regular formula when there are no walls.
/// rho_0 is the sum of the positive roots in Delta_0, matching the convention for rho.
inline cplx phi_complex_raw(const ComplexGroupPoint& cp, const std::vector<cplx>& lam) {
    const cplx I{0.0, 1.0};
    const auto& W = cp.W;
    const auto rho = rho_A(W);
    std::vector<double> rho0(static_cast<std::size_t>(W.dim()), 0.0);
    for (auto [i, j] : cp.walls) {
        rho0[static_cast<std::size_t>(i)] += 1.0;
        rho0[static_cast<std::size_t>(j)] -= 1.0;
    }
    cplx num{0.0, 0.0};
    for (const auto& s : W.elements) {
        const auto sl = W.apply(s, lam);
        num += static_cast<double>(s.sign) * pi_i(cp.walls, sl) * std::exp(I * dot(sl, cp.H));
    }
    double den = 1.0;
    for (auto [i, j] : W.positive_roots) {
        bool wall = false;
        for (auto w : cp.walls) wall = wall || (w.first == i && w.second == j);
        if (!wall) den *= 2.0 * std::sinh(cp.H[static_cast<std::size_t>(i)] - cp.H[static_cast<std::size_t>(j)]);
    }
    const double pre = pi_real(W.positive_roots, rho) / (static_cast<double>(cp.w0_order) * pi_real(cp.walls, rho0));
    return pre * num / (pi_i(W.positive_roots, lam) * den);
}

inline double min_root_gap(const WeylGroupA& W, const std::vector<cplx>& lam) {
    double g = std::numeric_limits<double>::infinity();
    for (auto [i, j] : W.positive_roots)
        g = std::min(g, std::abs(lam[static_cast<std::size_t>(i)] - lam[static_cast<std::size_t>(j)]));
    return g;
}

/// Fixed pseudorandom sum-zero unit direction for the offsets.
inline std::vector<double> offset_direction(const WeylGroupA& W) {
    std::mt19937_64 gen(0x5eed + static_cast<unsigned>(W.rank));
    std::normal_distribution<double> nd;
    std::vector<double> d(static_cast<std::size_t>(W.dim()));
    double mean = 0.0;
    for (auto& x : d) mean += (x = nd(gen));
    mean /= W.dim();
    double norm = 0.0;
    for (auto& x : d) {
        x -= mean;
        norm += x * x;
    }
    for (auto& x : d) x /= std::sqrt(norm);
    return d;
}

}  // namespace detail

struct ComplexValue {
    cplx value;
    double est_error = 0.0;
    bool offset_limit = false;  ///< lambda sat on a zero of pi(i lambda)
};

/// Normalisation c fixed by phi_{-i rho} = 1 at a reference regular H.
inline double complex_normalization(const WeylGroupA& W) {
    const auto rho = rho_A(W);
    std::vector<double> H(rho.size());
    for (std::size_t i = 0; i < H.size(); ++i) H[i] = 0.37 * rho[i] / W.rank;
    std::vector<cplx> lam(rho.size());
    for (std::size_t i = 0; i < lam.size(); ++i) lam[i] = cplx{0.0, -rho[i]};
    return 1.0 / detail::phi_complex_raw(make_complex_point(W, H, lam), lam).real();
}

namespace detail {

inline ComplexValue phi_complex_eval(const ComplexGroupPoint& cp) {
    const double c = complex_normalization(cp.W);
    double scale = 1.0;
    for (auto& x : cp.lambda) scale += std::abs(x);
    if (min_root_gap(cp.W, cp.lambda) > 1e-6 * scale) return {c * phi_complex_raw(cp, cp.lambda), 0.0, false};
    const auto d = offset_direction(cp.W);
    auto avg = [&](double e) {
        std::vector<cplx> up(cp.lambda), dn(cp.lambda);
        for (std::size_t i = 0; i < d.size(); ++i) {
            up[i] += e * d[i];
            dn[i] -= e * d[i];
        }
        return 0.5 * (phi_complex_raw(cp, up) + phi_complex_raw(cp, dn));
    };
    const cplx a1 = avg(1e-4), a2 = avg(5e-5);
    return {c * (4.0 * a2 - a1) / 3.0, c * std::abs(a2 - a1), true};
}

}  // namespace detail

inline ComplexValue phi_complex_regular_detail(const ComplexGroupPoint& cp) {
    if (!cp.regular()) throw DomainError("phi_complex_regular: H lies on a wall; use phi_complex_nonregular");
    return detail::phi_complex_eval(cp);
}

/// c pi(rho) / pi(i lambda) * sum_s det(s) e^{i s lambda(H)} / sum_s det(s) e^{s rho(H)}.
inline cplx phi_complex_regular(const ComplexGroupPoint& cp) { return phi_complex_regular_detail(cp).value; }

inline ComplexValue phi_complex_nonregular_detail(const ComplexGroupPoint& cp) { return detail::phi_complex_eval(cp); }

/// c pi(rho) / (|W_0| pi(i lambda) pi_0(rho_0)) * sum_s det(s) pi_0(i s lambda) e^{i s lambda(H)}
///   / prod_{alpha in Delta+ \ Delta_0+} (e^{alpha(H)} - e^{-alpha(H)}).
inline cplx phi_complex_nonregular(const ComplexGroupPoint& cp) { return phi_complex_nonregular_detail(cp).value; }

/// psi(lambda) = sum_s det(s) pi_0(i s lambda) e^{i s lambda(H)}, skew under W.
inline cplx wall_numerator(const ComplexGroupPoint& cp, const std::vector<cplx>& lam_in) {
    const cplx I{0.0, 1.0};
    const auto lam = detail::checked_ambient(cp.W, lam_in, "wall_numerator");
    cplx num{0.0, 0.0};
    for (const auto& s : cp.W.elements) {
        const auto sl = cp.W.apply(s, lam);
        num += static_cast<double>(s.sign) * detail::pi_i(cp.walls, sl) * std::exp(I * detail::dot(sl, cp.H));
    }
    return num;
}

}  // namespace spherical_mv
