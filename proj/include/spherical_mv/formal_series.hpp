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
 * @file formal_series.hpp
 * @brief Truncated formal power series arithmetic.
 *
 * A series is a coefficient vector c[0..K-1] standing for sum c[k] x^k mod x^K.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "errors.hpp"

namespace spherical_mv::series {

template <class T>
std::vector<T> multiply(const std::vector<T>& a, const std::vector<T>& b, std::size_t K) {
    std::vector<T> out(K, T{});
    for (std::size_t i = 0; i < std::min(a.size(), K); ++i) {
        if (a[i] == T{}) continue;
        for (std::size_t j = 0; j < b.size() && i + j < K; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

/// 1/a mod x^K; requires a[0] != 0.
template <class T>
std::vector<T> reciprocal(const std::vector<T>& a, std::size_t K) {
    if (a.empty() || a[0] == T{}) throw DomainError("series::reciprocal: zero constant term");
    std::vector<T> out(K, T{});
    out[0] = T{1} / a[0];
    for (std::size_t n = 1; n < K; ++n) {
        T acc{};
        for (std::size_t k = 1; k <= n && k < a.size(); ++k) acc += a[k] * out[n - k];
        out[n] = -acc / a[0];
    }
    return out;
}

/// (1 + a[1] x + a[2] x^2 + ...)^alpha mod x^K by the J.C.P. Miller recurrence
///   w[n] = (1/n) sum_{k=1}^{n} ((alpha + 1) k - n) a[k] w[n-k].
/// a[0] must equal 1.
template <class T>
std::vector<T> power_unit(const std::vector<T>& a, double alpha, std::size_t K) {
    if (a.empty() || a[0] != T{1}) throw DomainError("series::power_unit: constant term must be 1");
    std::vector<T> w(K, T{});
    if (K == 0) return w;
    w[0] = T{1};
    for (std::size_t n = 1; n < K; ++n) {
        T acc{};
        for (std::size_t k = 1; k <= n && k < a.size(); ++k)
            acc += ((alpha + 1.0) * static_cast<double>(k) - static_cast<double>(n)) * a[k] * w[n - k];
        w[n] = acc / static_cast<double>(n);
    }
    return w;
}

}  // namespace spherical_mv::series
