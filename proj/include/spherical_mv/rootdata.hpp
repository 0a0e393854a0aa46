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
 * @file rootdata.hpp
 * @brief Root data for rank-one symmetric spaces and type A_l complex groups.
 *
 * Rank-one chart: the inner product on a* is normalised so that |alpha| = 1 and
 * the coordinate on a is t = alpha(H). In this chart rho is the scalar p/2 + q
 * and <lambda, alpha_0> = lambda for lambda in C.
 *
 * Type A_l: roots are coordinate differences e_i - e_j on the sum-zero
 * hyperplane of R^{l+1}; the Weyl group is the symmetric group S_{l+1}.
 */
#pragma once

#include <algorithm>
#include <complex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace spherical_mv {

using cplx = std::complex<double>;

/// Rank-one space G/K with root multiplicities p = m_alpha, q = m_{2 alpha}.
struct RankOneSpace {
    int p = 1;
    int q = 0;
    int n = 2;        ///< dimension, p + q + 1
    double rho = 0.5; ///< p/2 + q
    std::string name;

    bool odd_dimension() const noexcept { return n % 2 == 1; }
    /// (n-3)/2 for odd n, (n-2)/2 for even n.
    int ell() const noexcept { return odd_dimension() ? (n - 3) / 2 : (n - 2) / 2; }
};

inline RankOneSpace build_rank_one(int p, int q) {
    if (p < 1) throw DomainError("build_rank_one: p must be >= 1 (got " + std::to_string(p) + ")");
    if (q < 0) throw DomainError("build_rank_one: q must be >= 0 (got " + std::to_string(q) + ")");
    RankOneSpace s;
    s.p = p;
    s.q = q;
    s.n = p + q + 1;
    s.rho = 0.5 * p + q;
    s.name = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    return s;
}

/// Real hyperbolic space H^n: (p, q) = (n-1, 0).
inline RankOneSpace real_hyperbolic(int n) {
    if (n < 2) throw DomainError("real_hyperbolic: n must be >= 2");
    auto s = build_rank_one(n - 1, 0);
    s.name = "H" + std::to_string(n);
    return s;
}

/// Complex hyperbolic space CH^m (real dimension 2m): (p, q) = (2m-2, 1).
inline RankOneSpace complex_hyperbolic(int m) {
    if (m < 2) throw DomainError("complex_hyperbolic: m must be >= 2");
    auto s = build_rank_one(2 * m - 2, 1);
    s.name = "CH" + std::to_string(m);
    return s;
}

/// Quaternionic hyperbolic space HH^m (real dimension 4m): (p, q) = (4m-4, 3).
inline RankOneSpace quaternionic_hyperbolic(int m) {
    if (m < 2) throw DomainError("quaternionic_hyperbolic: m must be >= 2");
    auto s = build_rank_one(4 * m - 4, 3);
    s.name = "HH" + std::to_string(m);
    return s;
}

/// Resolves "H2", "H3", "CH2", "HH2", ... or an explicit "p,q" pair.
inline RankOneSpace resolve_space(const std::string& name) {
    auto parse_int = [&](const std::string& digits) {
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
            throw DomainError("unknown space '" + name + "'");
        return std::stoi(digits);
    };
    if (auto comma = name.find(','); comma != std::string::npos)
        return build_rank_one(parse_int(name.substr(0, comma)), parse_int(name.substr(comma + 1)));
    if (name.rfind("HH", 0) == 0) return quaternionic_hyperbolic(parse_int(name.substr(2)));
    if (name.rfind("CH", 0) == 0) return complex_hyperbolic(parse_int(name.substr(2)));
    if (name.rfind("H", 0) == 0) return real_hyperbolic(parse_int(name.substr(1)));
    throw DomainError("unknown space '" + name + "'");
}

/// Weyl group S_{l+1} of A_l with permutation signs and positive roots.
struct WeylGroupA {
    struct Element {
        std::vector<int> perm;  ///< s maps coordinate i to position perm[i]
        int sign = 1;
    };

    int rank = 1;
    std::vector<Element> elements;
    std::vector<std::pair<int, int>> positive_roots;  ///< (i, j) with i < j: e_i - e_j

    int dim() const noexcept { return rank + 1; }

    /// (s v)[perm[i]] = v[i].
    template <class T>
    std::vector<T> apply(const Element& s, const std::vector<T>& v) const {
        std::vector<T> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(s.perm[i])] = v[i];
        return out;
    }
};

inline int permutation_sign(const std::vector<int>& perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

inline WeylGroupA weyl_group_A(int l) {
    if (l < 1 || l > 5) throw RangeError("weyl_group_A: rank must lie in [1, 5] (got " + std::to_string(l) + ")");
    WeylGroupA W;
    W.rank = l;
    std::vector<int> perm(static_cast<std::size_t>(l + 1));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        W.elements.push_back({perm, permutation_sign(perm)});
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int i = 0; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) W.positive_roots.emplace_back(i, j);
    return W;
}

/// Sum of positive roots of A_l (the complex-group rho): rho_i = l - 2i.
inline std::vector<double> rho_A(const WeylGroupA& W) {
    std::vector<double> r(static_cast<std::size_t>(W.dim()));
    for (int i = 0; i < W.dim(); ++i) r[static_cast<std::size_t>(i)] = W.rank - 2.0 * i;
    return r;
}

namespace detail {

template <class T>
std::vector<T> to_ambient(const WeylGroupA& W, std::vector<T> v) {
    if (static_cast<int>(v.size()) == W.rank) {
        T s{};
        for (auto& x : v) s += x;
        v.push_back(-s);
    }
    if (static_cast<int>(v.size()) != W.dim())
        throw DomainError("A_l vector must have l or l+1 coordinates");
    return v;
}

}  // namespace detail

/// prod_{i<j} (lambda_i - lambda_j). With l coordinates the last one is -sum.
template <class T>
T pi_product(const WeylGroupA& W, const std::vector<T>& lam) {
    auto v = detail::to_ambient(W, lam);
    T prod{1};
    for (auto [i, j] : W.positive_roots) prod *= v[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(j)];
    return prod;
}

}  // namespace spherical_mv
