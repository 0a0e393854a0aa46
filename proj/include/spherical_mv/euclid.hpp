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
 * @file euclid.hpp
 * @brief Finite sums of derivatives of point masses on R^n: Fourier-Laplace
 *        transform, the invertibility constant A, and its bound check.
 *
 * Convention: delta_x -> e^{-i <x, zeta>}, d/dx_k -> -i zeta_k.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace spherical_mv {

using cvec = std::vector<std::complex<double>>;
using rvec = std::vector<double>;

/// Multi-index -> coefficient.
using Polynomial = std::map<std::vector<int>, std::complex<double>>;

struct DistributionTerm {
    rvec point;
    Polynomial poly;  ///< empty means the constant 1
    std::complex<double> weight{1.0, 0.0};
};

struct ExpPolyDistribution {
    int dim = 1;
    std::vector<DistributionTerm> terms;

    void validate() const {
        if (dim < 1) throw DomainError("ExpPolyDistribution: dim must be positive");
        if (terms.empty()) throw DomainError("ExpPolyDistribution: at least one term required");
        for (const auto& t : terms) {
            if (static_cast<int>(t.point.size()) != dim) throw DomainError("ExpPolyDistribution: point of wrong dimension");
            for (const auto& [mi, c] : t.poly)
                if (static_cast<int>(mi.size()) != dim || std::any_of(mi.begin(), mi.end(), [](int e) { return e < 0; }))
                    throw DomainError("ExpPolyDistribution: bad multi-index");
        }
        for (std::size_t i = 0; i < terms.size(); ++i)
            for (std::size_t j = i + 1; j < terms.size(); ++j) {
                double d2 = 0.0;
                for (int k = 0; k < dim; ++k) {
                    const double d = terms[i].point[static_cast<std::size_t>(k)] - terms[j].point[static_cast<std::size_t>(k)];
                    d2 += d * d;
                }
                if (std::sqrt(d2) <= 1e-9) throw DomainError("ExpPolyDistribution: points must be pairwise distinct");
            }
    }
};

inline ExpPolyDistribution delta_sum(const std::vector<rvec>& points, const cvec& weights = {}) {
    ExpPolyDistribution mu;
    mu.dim = points.empty() ? 1 : static_cast<int>(points.front().size());
    for (std::size_t j = 0; j < points.size(); ++j)
        mu.terms.push_back({points[j], {}, weights.empty() ? std::complex<double>{1.0, 0.0} : weights[j]});
    mu.validate();
    return mu;
}

inline std::complex<double> eval_symbol(const Polynomial& p, const cvec& zeta) {
    if (p.empty()) return 1.0;
    const std::complex<double> I{0.0, 1.0};
    std::complex<double> s{0.0, 0.0};
    for (const auto& [mi, c] : p) {
        std::complex<double> m = c;
        for (std::size_t k = 0; k < mi.size(); ++k) m *= std::pow(-I * zeta[k], mi[k]);
        s += m;
    }
    return s;
}

/// log |mu*(zeta)|, factoring out the largest exponential so the sum never overflows.
inline double log_abs_ft(const ExpPolyDistribution& mu, const cvec& zeta) {
    const std::complex<double> I{0.0, 1.0};
    std::vector<std::complex<double>> expo;
    double top = -std::numeric_limits<double>::infinity();
    for (const auto& t : mu.terms) {
        std::complex<double> e{0.0, 0.0};
        for (int k = 0; k < mu.dim; ++k) e += -I * t.point[static_cast<std::size_t>(k)] * zeta[static_cast<std::size_t>(k)];
        expo.push_back(e);
        top = std::max(top, e.real());
    }
    std::complex<double> s{0.0, 0.0};
    for (std::size_t j = 0; j < mu.terms.size(); ++j)
        s += mu.terms[j].weight * eval_symbol(mu.terms[j].poly, zeta) * std::exp(expo[j] - top);
    return top + std::log(std::abs(s));
}

/// mu*(zeta) = sum_j c_j p_j(-i zeta) e^{-i <x_j, zeta>}.
inline std::complex<double> ft_exp_poly(const ExpPolyDistribution& mu, const cvec& zeta) {
    if (static_cast<int>(zeta.size()) != mu.dim) throw DomainError("ft_exp_poly: zeta has wrong dimension");
    const std::complex<double> I{0.0, 1.0};
    std::complex<double> s{0.0, 0.0};
    for (const auto& t : mu.terms) {
        std::complex<double> e{0.0, 0.0};
        for (int k = 0; k < mu.dim; ++k) e += t.point[static_cast<std::size_t>(k)] * zeta[static_cast<std::size_t>(k)];
        s += t.weight * eval_symbol(t.poly, zeta) * std::exp(-I * e);
    }
    return s;
}

struct DeltaConstant {
    double A = 0.0;
    double M = 0.0;           ///< N (unweighted) or max(N + 1, 2 max|c_j| + 1)
    std::size_t lead = 0;     ///< index of x_1, the point of maximal norm
    bool weighted = false;
};

namespace detail {

inline double dot(const rvec& a, const rvec& b) { return std::inner_product(a.begin(), a.end(), b.begin(), 0.0); }

}  // namespace detail

/// A = 1.01 * max_j |x_1| (log M + log|c_j| - log|c_1|) / (log 2 (|x_1|^2 - <x_j, x_1>)),
/// with M = N and unit weights in the unweighted case.
inline DeltaConstant deltafcn_constant_A(const std::vector<rvec>& points, const cvec& weights = {}) {
    const std::size_t N = points.size();
    if (N < 2) throw DomainError("deltafcn_constant_A: N = 1 is a translation, trivially invertible; no constant needed");
    delta_sum(points, weights);
    DeltaConstant D;
    D.weighted = !weights.empty() &&
                 std::any_of(weights.begin(), weights.end(), [](std::complex<double> c) { return c != std::complex<double>{1.0, 0.0}; });
    for (std::size_t j = 1; j < N; ++j)
        if (detail::dot(points[j], points[j]) > detail::dot(points[D.lead], points[D.lead])) D.lead = j;
    const rvec& x1 = points[D.lead];
    const double n1 = std::sqrt(detail::dot(x1, x1));
    auto w = [&](std::size_t j) { return D.weighted ? std::abs(weights[j]) : 1.0; };
    if (D.weighted) {
        double cmax = 0.0;
        for (std::size_t j = 0; j < N; ++j) {
            if (weights[j] == std::complex<double>{0.0, 0.0}) throw DomainError("deltafcn_constant_A: weights must be nonzero");
            cmax = std::max(cmax, std::abs(weights[j]));
        }
        D.M = std::max(N + 1.0, 2.0 * cmax + 1.0);
    } else {
        D.M = static_cast<double>(N);
    }
    double amin = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
        if (j == D.lead) continue;
        const double gap = n1 * n1 - detail::dot(points[j], x1);
        if (gap <= 1e-12 * n1 * n1)
            throw DegenerateError("deltafcn_constant_A: <x_j, x_1> = |x_1|^2 for a second point; configuration is degenerate");
        amin = std::max(amin, n1 * (std::log(D.M) + std::log(w(j)) - std::log(w(D.lead))) / (std::log(2.0) * gap));
    }
    // Any positive A is admissible when every bound is nonpositive.
    D.A = 1.01 * std::max(amin, 1e-6);
    return D;
}

struct DeltaBoundPoint {
    rvec xi;
    double log_lhs;  ///< log |mu*(xi + i eta)|
    double log_rhs;  ///< log((|c_1| / M) (2 + |xi|)^{A |x_1|})
};

struct DeltaBoundVerdict {
    bool pass = true;
    DeltaConstant constant;
    double min_log_margin = std::numeric_limits<double>::infinity();
    std::vector<DeltaBoundPoint> points;
    std::string detail;
};

/// At each xi sets eta = t x_1 with t |x_1| = A log(2 + |xi|) and checks
/// |mu*(xi + i eta)| >= (|c_1| / M) (2 + |xi|)^{exponent_scale * A |x_1|} in log space.
inline DeltaBoundVerdict verify_delta_bound(const std::vector<rvec>& points, const cvec& weights,
                                            const std::vector<rvec>& xi_grid, double exponent_scale = 1.0) {
    DeltaBoundVerdict V;
    V.constant = deltafcn_constant_A(points, weights);
    const auto mu = delta_sum(points, weights);
    const rvec& x1 = points[V.constant.lead];
    const double n1 = std::sqrt(detail::dot(x1, x1));
    const double c1 = V.constant.weighted ? std::abs(weights[V.constant.lead]) : 1.0;
    for (const auto& xi : xi_grid) {
        if (xi.size() != x1.size()) throw DomainError("verify_delta_bound: xi has wrong dimension");
        const double L = std::log(2.0 + std::sqrt(detail::dot(xi, xi)));
        const double t = V.constant.A * L / n1;
        cvec zeta(xi.size());
        for (std::size_t k = 0; k < xi.size(); ++k) zeta[k] = {xi[k], t * x1[k]};
        const double lhs = log_abs_ft(mu, zeta);
        const double rhs = std::log(c1 / V.constant.M) + exponent_scale * V.constant.A * n1 * L;
        V.points.push_back({xi, lhs, rhs});
        V.min_log_margin = std::min(V.min_log_margin, lhs - rhs);
        if (!(lhs >= rhs) && V.pass) {
            V.pass = false;
            V.detail = "violated at |xi| = " + std::to_string(std::sqrt(detail::dot(xi, xi))) + ": log lhs " +
                       std::to_string(lhs) + " < log rhs " + std::to_string(rhs);
        }
    }
    return V;
}

}  // namespace spherical_mv
