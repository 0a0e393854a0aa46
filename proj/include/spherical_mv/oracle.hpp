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
 * @file oracle.hpp
 * @brief Composite Gauss-Legendre reference quadrature for the rank-one
 *        Fourier integrals I(zeta) and calI_m(zeta).
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rootdata.hpp"
#include "specfun.hpp"

namespace spherical_mv {

struct QuadratureSpec {
    int panels = 1;              ///< minimum number of panels
    int nodes_per_panel = 20;    ///< Gauss-Legendre order g; the estimate uses g and 2g
    double abs_tol = 1e-14;
    double oscillation_guard = 6.0;  ///< panels per oscillation period 2pi/|Re zeta|

    static constexpr long kNodeBudget = 1000000;

    void validate() const {
        if (panels < 1 || nodes_per_panel < 1) throw DomainError("QuadratureSpec: panels and nodes_per_panel must be positive");
        if (oscillation_guard < 4.0) throw DomainError("QuadratureSpec: oscillation_guard must be >= 4");
        if (static_cast<long>(panels) * nodes_per_panel > kNodeBudget)
            throw DomainError("QuadratureSpec: panels * nodes_per_panel exceeds 1e6");
        if (!(abs_tol > 0.0)) throw DomainError("QuadratureSpec: abs_tol must be positive");
    }
};

struct QuadratureResult {
    cplx value;
    double error_estimate = 0.0;
    int panels = 0;
};

namespace quad {

struct Rule {
    std::vector<double> x;  // nodes on [-1, 1]
    std::vector<double> w;
};

/// Gauss-Legendre rule of order n (Newton iteration on P_n), cached.
inline const Rule& gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, Rule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Rule r;
    r.x.resize(static_cast<std::size_t>(n));
    r.w.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.x[static_cast<std::size_t>(i)] = -x;
        r.x[static_cast<std::size_t>(n - 1 - i)] = x;
        r.w[static_cast<std::size_t>(i)] = w;
        r.w[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return cache.emplace(n, std::move(r)).first->second;
}

struct PanelSum {
    cplx value{0.0, 0.0};
    double l1 = 0.0;
};

template <class F>
PanelSum integrate(F&& f, double a, double b, int panels, int order) {
    const Rule& r = gauss_legendre(order);
    PanelSum out;
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        cplx acc{0.0, 0.0};
        double l1 = 0.0;
        for (std::size_t i = 0; i < r.x.size(); ++i) {
            const cplx v = f(mid + 0.5 * h * r.x[i]) * r.w[i];
            acc += v;
            l1 += std::abs(v);
        }
        out.value += 0.5 * h * acc;
        out.l1 += 0.5 * h * l1;
    }
    return out;
}

/// A piece of the integration domain with its own integrand and phase span.
template <class F>
struct Piece {
    F f;
    double a, b;
    double phase;  ///< total oscillation phase |Re zeta| * (length in s)
};

/// Order-doubling estimate on a set of pieces, refining panels until the
/// estimate meets max(abs_tol, 64 eps L1) or the node budget is exhausted.
template <class... F>
QuadratureResult run(const QuadratureSpec& spec, const char* what, Piece<F>... pieces) {
    spec.validate();
    const int g = spec.nodes_per_panel;
    auto base_panels = [&](double phase) {
        const int osc = static_cast<int>(std::ceil(spec.oscillation_guard * phase / (2.0 * std::numbers::pi)));
        return std::max(spec.panels, std::max(1, osc));
    };
    double last_err = 0.0;
    for (int scale = 1;; scale *= 2) {
        cplx lo{0.0, 0.0}, hi{0.0, 0.0};
        double l1 = 0.0;
        long nodes = 0;
        int used = 0;
        auto one = [&](auto& pc) {
            const int np = base_panels(pc.phase) * scale;
            nodes += static_cast<long>(np) * 3 * g;
            used += np;
            const PanelSum s1 = integrate(pc.f, pc.a, pc.b, np, g);
            const PanelSum s2 = integrate(pc.f, pc.a, pc.b, np, 2 * g);
            lo += s1.value;
            hi += s2.value;
            l1 += s2.l1;
        };
        (one(pieces), ...);
        last_err = std::abs(hi - lo);
        const double tol = std::max(spec.abs_tol, 64.0 * std::numeric_limits<double>::epsilon() * l1);
        if (last_err <= tol) return {hi, std::max(last_err, 4.0 * std::numeric_limits<double>::epsilon() * l1), used};
        if (nodes * 2 > QuadratureSpec::kNodeBudget)
            throw ConvergenceError(std::string(what) + ": tolerance not reached within the panel budget", last_err);
    }
}

/// cosh t - cosh s without cancellation.
inline double cosh_gap(double t, double s) { return 2.0 * std::sinh(0.5 * (t + s)) * std::sinh(0.5 * (t - s)); }

inline void check_args(double t, cplx zeta, const char* what) {
    if (!(t > 0.0 && t <= 5.0)) throw DomainError(std::string(what) + ": t must lie in (0, 5]");
    if (std::abs(zeta.imag()) > 5.0) throw RangeError(std::string(what) + ": |Im zeta| must be <= 5");
}

}  // namespace quad

/// Reference quadrature for
///   I(zeta) = int_0^t cos(zeta s) (cosh t - cosh s)^{(n-3)/2} 2F1(1-q/2, q/2; (n-1)/2; Z/(2 cosh t)) ds.
/// For even n the half-integer endpoint singularity at s = t is removed by
/// s = t - u^2 on [t/2, t].
inline QuadratureResult integral_I_detail(const RankOneSpace& sp, double t, cplx zeta, const QuadratureSpec& spec = {}) {
    quad::check_args(t, zeta, "integral_I");
    const HypergeometricParams hp = HypergeometricParams::for_space(sp);
    const double alpha = 0.5 * (sp.n - 3);
    const double two_cosh = 2.0 * std::cosh(t);
    const bool trivial_f = sp.q == 0.0;
    auto weight = [&](double Z) { return trivial_f ? 1.0 : gauss_2f1(hp, Z / two_cosh); };
    const double phase_rate = std::abs(zeta.real());
    if (sp.n % 2 == 1) {
        const int power = (sp.n - 3) / 2;
        auto f = [=](double s) {
            const double Z = quad::cosh_gap(t, s);
            return std::cos(zeta * s) * std::pow(Z, power) * weight(Z);
        };
        return quad::run(spec, "integral_I", quad::Piece<decltype(f)>{f, 0.0, t, phase_rate * t});
    }
    const double split = 0.5 * t;
    auto direct = [=](double s) {
        const double Z = quad::cosh_gap(t, s);
        return std::cos(zeta * s) * std::pow(Z, alpha) * weight(Z);
    };
    auto mapped = [=](double u) {
        const double u2 = u * u;
        const double h = 0.5 * u2;
        const double shr = h > 0.0 ? std::sinh(h) / u2 : 0.5;  // sinh(u^2/2)/u^2
        const double Z = 2.0 * std::sinh(t - h) * std::sinh(h);
        const double scaled = std::pow(2.0 * std::sinh(t - h), alpha) * std::pow(shr, alpha) * std::pow(u, 2.0 * alpha + 1.0);
        return std::cos(zeta * (t - u2)) * 2.0 * scaled * weight(Z);
    };
    return quad::run(spec, "integral_I", quad::Piece<decltype(direct)>{direct, 0.0, split, phase_rate * split},
                     quad::Piece<decltype(mapped)>{mapped, 0.0, std::sqrt(t - split), phase_rate * (t - split)});
}

inline cplx integral_I(const RankOneSpace& sp, double t, cplx zeta, const QuadratureSpec& spec = {}) {
    return integral_I_detail(sp, t, zeta, spec).value;
}

/// Reference quadrature for calI_m(zeta) = int_{-t}^{t} cos(zeta s) (cosh t - cosh s)^m ds.
inline QuadratureResult integral_calI_detail(int m, double t, cplx zeta, const QuadratureSpec& spec = {}) {
    if (m < 0 || m > 12) throw RangeError("integral_calI: m must lie in [0, 12]");
    quad::check_args(t, zeta, "integral_calI");
    auto f = [=](double s) { return 2.0 * std::cos(zeta * s) * std::pow(quad::cosh_gap(t, s), m); };
    return quad::run(spec, "integral_calI", quad::Piece<decltype(f)>{f, 0.0, t, std::abs(zeta.real()) * t});
}

inline cplx integral_calI(int m, double t, cplx zeta, const QuadratureSpec& spec = {}) {
    return integral_calI_detail(m, t, zeta, spec).value;
}

}  // namespace spherical_mv
