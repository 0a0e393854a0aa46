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
 * @file certifier.hpp
 * @brief Numerical slow-decrease certification of entire functions of one
 *        complex variable: neighbourhood suprema, the (B, C, D) fit, growth
 *        type, and the rank-one pipeline for zeta -> I(zeta).
 *
 * The neighbourhood of a real xi is the disk |zeta - xi| <= A log(2 + |xi|)
 * (Disk mode) or its real chord [xi - r, xi + r] (Chord mode). A lower bound
 * on the chord supremum is a lower bound on the disk supremum, so a chord
 * certificate implies the disk one; the chord is what exposes the algebraic
 * decay exponent D, since the disk supremum grows like e^{t r}.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "parallel.hpp"
#include "rankone.hpp"
#include "rootdata.hpp"

namespace spherical_mv {

using Evaluator = std::function<cplx(cplx)>;

enum class Neighbourhood { Chord, Disk };

inline const char* neighbourhood_name(Neighbourhood n) { return n == Neighbourhood::Chord ? "chord" : "disk"; }

struct SupSample {
    double sup = 0.0;
    double variation = 0.0;  ///< largest |u| difference between neighbouring samples
    int samples = 0;
};

namespace detail {

template <class F>
double checked_abs(F&& u, cplx z) {
    auto where = [&] { return " (at zeta = " + to_string(z) + ")"; };
    try {
        return std::abs(u(z));
    } catch (const ConvergenceError& e) {
        throw ConvergenceError(e.what() + where(), e.estimate());
    } catch (const RangeError& e) {
        throw RangeError(e.what() + where());
    } catch (const DomainError& e) {
        throw DomainError(e.what() + where());
    }
}

}  // namespace detail

/// max |u| over `samples` equally spaced boundary points and the center.
inline SupSample sup_on_disk(const Evaluator& u, cplx center, double radius, int samples = 512) {
    if (!(radius > 0.0)) throw DomainError("sup_on_disk: radius must be positive");
    if (samples < 1) throw DomainError("sup_on_disk: samples must be positive");
    SupSample s;
    s.samples = samples + 1;
    s.sup = detail::checked_abs(u, center);
    double first = 0.0, prev = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double v = detail::checked_abs(u, center + std::polar(radius, 2.0 * std::numbers::pi * k / samples));
        if (k == 0) first = v;
        else s.variation = std::max(s.variation, std::abs(v - prev));
        prev = v;
        s.sup = std::max(s.sup, v);
    }
    s.variation = std::max(s.variation, std::abs(first - prev));
    return s;
}

/// max |u| over `samples` + 1 equally spaced points of [center - radius, center + radius].
inline SupSample sup_on_chord(const Evaluator& u, double center, double radius, int samples = 512) {
    if (!(radius > 0.0)) throw DomainError("sup_on_chord: radius must be positive");
    if (samples < 1) throw DomainError("sup_on_chord: samples must be positive");
    SupSample s;
    s.samples = samples + 1;
    double prev = 0.0;
    for (int k = 0; k <= samples; ++k) {
        const double x = center - radius + 2.0 * radius * k / samples;
        const double v = detail::checked_abs(u, cplx{x, 0.0});
        if (k > 0) s.variation = std::max(s.variation, std::abs(v - prev));
        prev = v;
        s.sup = std::max(s.sup, v);
    }
    return s;
}

struct BCD {
    double B = 0.0;
    double C = 2.0;
    double D = 0.0;
};

struct SlowDecreaseRow {
    double xi;
    double radius;
    double sup;
    double variation;
    double bound;   ///< B (C + |xi|)^{-D} with the constants the verdict used
    double margin;  ///< sup / bound
};

struct SlowDecreaseReport {
    double A = 0.0;
    Neighbourhood mode = Neighbourhood::Chord;
    int samples = 0;
    std::vector<SlowDecreaseRow> rows;
    BCD fitted;
    std::optional<BCD> target;
    double tail_slope = 0.0;  ///< local log-log slope on the last third of the grid
    bool pass = false;
    std::string detail;
};

/// 0 followed by a log grid on [1, Xi] with `per_decade` points per decade.
inline std::vector<double> certification_grid(double Xi = 1e3, int per_decade = 10) {
    if (!(Xi >= 1e2)) throw DomainError("certification_grid: Xi must be >= 100");
    std::vector<double> g{0.0};
    const int n = static_cast<int>(std::ceil(std::log10(Xi) * per_decade));
    for (int i = 0; i <= n; ++i) g.push_back(std::pow(10.0, std::log10(Xi) * i / n));
    return g;
}

namespace detail {

/// Least-squares slope and intercept of y against x.
inline std::pair<double, double> linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double den = n * sxx - sx * sx;
    if (den == 0.0) return {0.0, sy / n};
    const double slope = (n * sxy - sx * sy) / den;
    return {slope, (sy - slope * sx) / n};
}

}  // namespace detail

/// Neighbourhood suprema of |u| on the grid, radius A log(2 + |xi|). D is the
/// negated least-squares slope of log sup against log(2 + |xi|) on the tail
/// |xi| >= Xi/10, clamped at 0; B is the largest constant with
/// sup >= B (2 + |xi|)^{-D} on every grid point. Without a target the verdict
/// requires finite positive suprema and a tail whose local decay does not
/// outrun D by more than 1/2; with a target every grid point must satisfy it.
inline SlowDecreaseReport certify_slow_decrease(const Evaluator& u, double A, const std::vector<double>& xi_grid,
                                                std::optional<BCD> target = std::nullopt,
                                                Neighbourhood mode = Neighbourhood::Chord, int samples = 512) {
    if (!(A > 0.0)) throw DomainError("certify_slow_decrease: A must be positive");
    if (xi_grid.size() < 4) throw DomainError("certify_slow_decrease: grid too short");
    const double Xi = *std::max_element(xi_grid.begin(), xi_grid.end());
    if (!(Xi >= 1e2)) throw DomainError("certify_slow_decrease: grid must reach at least 100");
    SlowDecreaseReport R;
    R.A = A;
    R.mode = mode;
    R.samples = samples;
    R.target = target;
    const auto sups = parallel_map<SupSample>(xi_grid.size(), [&](std::size_t i) {
        const double xi = xi_grid[i];
        const double r = A * std::log(2.0 + std::abs(xi));
        return mode == Neighbourhood::Chord ? sup_on_chord(u, xi, r, samples) : sup_on_disk(u, cplx{xi, 0.0}, r, samples);
    });
    for (std::size_t i = 0; i < xi_grid.size(); ++i) {
        if (!std::isfinite(sups[i].sup) || !(sups[i].sup > 0.0))
            throw ConvergenceError("certify_slow_decrease: non-finite or zero supremum at xi = " + std::to_string(xi_grid[i]),
                                   sups[i].sup);
        R.rows.push_back({xi_grid[i], A * std::log(2.0 + std::abs(xi_grid[i])), sups[i].sup, sups[i].variation, 0.0, 0.0});
    }
    std::vector<double> lx, ly, tx, ty;
    for (const auto& row : R.rows) {
        if (std::abs(row.xi) >= Xi / 10.0) {
            lx.push_back(std::log(2.0 + std::abs(row.xi)));
            ly.push_back(std::log(row.sup));
        }
    }
    R.fitted.D = std::max(0.0, -detail::linear_fit(lx, ly).first);
    const std::size_t third = std::max<std::size_t>(3, R.rows.size() / 3);
    for (std::size_t i = R.rows.size() - third; i < R.rows.size(); ++i) {
        tx.push_back(std::log(2.0 + std::abs(R.rows[i].xi)));
        ty.push_back(std::log(R.rows[i].sup));
    }
    R.tail_slope = detail::linear_fit(tx, ty).first;
    R.fitted.B = std::numeric_limits<double>::infinity();
    for (const auto& row : R.rows) R.fitted.B = std::min(R.fitted.B, row.sup * std::pow(2.0 + std::abs(row.xi), R.fitted.D));
    const BCD used = target.value_or(R.fitted);
    R.pass = true;
    for (auto& row : R.rows) {
        row.bound = used.B * std::pow(used.C + std::abs(row.xi), -used.D);
        row.margin = row.sup / row.bound;
        if (target && !(row.margin >= 1.0) && R.pass) {
            R.pass = false;
            R.detail = "target bound violated at xi = " + std::to_string(row.xi);
        }
    }
    if (!target && -R.tail_slope > R.fitted.D + 0.5) {
        R.pass = false;
        R.detail = "tail decays faster than the fitted exponent (local slope " + std::to_string(R.tail_slope) + ")";
    }
    if (R.pass && R.detail.empty()) R.detail = "ok";
    return R;
}

struct GrowthRow {
    cplx zeta;
    double abs_u;
    double ratio;  ///< |u| / ((1 + |zeta|)^N e^{R |Im zeta|})
};

struct GrowthReport {
    double R = 0.0;
    int N = 0;
    double fitted_A = 0.0;
    double inner_max = 0.0, outer_max = 0.0;
    double slack = 1.0;
    std::vector<GrowthRow> rows;
    bool pass = false;
    std::string detail;
};

/// Rectangle [0, re_max] x [0, im_max] with re_steps x im_steps points.
inline std::vector<cplx> growth_grid(double re_max = 200.0, double im_max = 3.0, int re_steps = 81, int im_steps = 5) {
    std::vector<cplx> g;
    for (int j = 0; j < im_steps; ++j)
        for (int i = 0; i < re_steps; ++i)
            g.emplace_back(re_max * i / (re_steps - 1), im_steps > 1 ? im_max * j / (im_steps - 1) : 0.0);
    return g;
}

/// |u(zeta)| <= A (1 + |zeta|)^N e^{R |Im zeta|} on the grid with the smallest
/// such A reported. A finite grid always admits some A, so the check is that
/// the normalised ratio does not grow: its maximum over the outer half
/// (Re zeta beyond half the extent) must not exceed slack times the maximum
/// over the inner half.
inline GrowthReport growth_type_check(const Evaluator& u, double R, int N, const std::vector<cplx>& grid, double slack = 1.0) {
    GrowthReport G;
    G.R = R;
    G.N = N;
    G.slack = slack;
    double re_max = 0.0;
    for (auto z : grid) re_max = std::max(re_max, std::abs(z.real()));
    const auto vals = parallel_map<double>(grid.size(), [&](std::size_t i) { return detail::checked_abs(u, grid[i]); });
    bool finite = true;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const cplx z = grid[i];
        const double ratio = vals[i] / (std::pow(1.0 + std::abs(z), N) * std::exp(R * std::abs(z.imag())));
        G.rows.push_back({z, vals[i], ratio});
        if (!std::isfinite(ratio)) {
            finite = false;
            continue;
        }
        G.fitted_A = std::max(G.fitted_A, ratio);
        if (std::abs(z.real()) > 0.5 * re_max) G.outer_max = std::max(G.outer_max, ratio);
        else G.inner_max = std::max(G.inner_max, ratio);
    }
    if (!finite) {
        G.pass = false;
        G.fitted_A = std::numeric_limits<double>::infinity();
        G.detail = "non-finite |u| on the grid";
    } else if (G.outer_max > slack * G.inner_max) {
        G.pass = false;
        G.detail = "normalised ratio grows toward the outer half (" + std::to_string(G.outer_max) + " > " +
                   std::to_string(slack * G.inner_max) + ")";
    } else {
        G.pass = true;
        G.detail = "ok";
    }
    return G;
}

struct CertifyConfig {
    double A = 0.0;  ///< 0 selects max(7/t, 2 pi/t)
    double Xi = 1e4;
    int per_decade = 10;
    int samples = 512;
    Neighbourhood mode = Neighbourhood::Chord;
    Route route = Route::Auto;
    QuadratureSpec quad;
    std::optional<BCD> target;
    double growth_re_max = 200.0;
    double growth_im_max = 3.0;
    int growth_re_steps = 81;
    int growth_im_steps = 5;
    double growth_slack = 1.0;
};

struct SpaceCertification {
    RankOneSpace space;
    double t = 0.0;
    GrowthReport growth;
    bool slow_ran = false;  ///< false when the growth check already failed
    SlowDecreaseReport slow;
    bool pass = false;
};

inline double default_disk_constant(double t) { return std::max(7.0 / t, 2.0 * std::numbers::pi / t); }

/// Growth type R, then slow decrease (skipped once the growth check fails,
/// since a function of the wrong type need not even be finite on the chords).
inline SpaceCertification certify_function(const Evaluator& u, double R, const CertifyConfig& cfg = {}) {
    SpaceCertification out;
    out.t = R;
    out.growth = growth_type_check(u, R, 0, growth_grid(cfg.growth_re_max, cfg.growth_im_max, cfg.growth_re_steps, cfg.growth_im_steps),
                                   cfg.growth_slack);
    if (out.growth.pass) {
        const double A = cfg.A > 0.0 ? cfg.A : default_disk_constant(R);
        out.slow = certify_slow_decrease(u, A, certification_grid(cfg.Xi, cfg.per_decade), cfg.target, cfg.mode, cfg.samples);
        out.slow_ran = true;
    }
    out.pass = out.growth.pass && out.slow_ran && out.slow.pass;
    return out;
}

/// Certifies zeta -> I(zeta) (phi up to its zeta-independent prefactor) for
/// the rank-one space at exp(tH): exponential type t plus slow decrease.
inline SpaceCertification certify_space(const RankOneSpace& sp, double t, const CertifyConfig& cfg = {}) {
    if (!(t > 0.0 && t <= 5.0)) throw DomainError("certify_space: t must lie in (0, 5]");
    const Route route = cfg.route;
    const QuadratureSpec qs = cfg.quad;
    Evaluator u = [sp, t, route, qs](cplx z) { return evaluate_I(sp, t, z, route, kAutoSeriesOrder, qs).value; };
    SpaceCertification out = certify_function(u, t, cfg);
    out.space = sp;
    return out;
}

}  // namespace spherical_mv
