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
 * @file errors.hpp
 * @brief Exception hierarchy shared by every module.
 */
#pragma once

#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>

namespace spherical_mv {

/// Base class of all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain (pole of Gamma, p = 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Argument inside the domain but outside the supported numerical envelope.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Quadrature or series did not reach the requested tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double estimate)
        : Error(what), estimate_(estimate) {}
    double estimate() const noexcept { return estimate_; }

private:
    double estimate_;
};

/// lambda makes a Harish-Chandra recursion denominator vanish.
class ResonanceError : public Error {
public:
    ResonanceError(const std::string& what, int k) : Error(what), k_(k) {}
    int resonant_k() const noexcept { return k_; }

private:
    int k_;
};

/// A Gamma factor of the c-function sits on a pole.
class PoleError : public Error {
public:
    PoleError(const std::string& what, std::string factor)
        : Error(what), factor_(std::move(factor)) {}
    const std::string& factor() const noexcept { return factor_; }

private:
    std::string factor_;
};

/// Configuration of points or constants that the estimates do not cover.
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// A parameter search ran off the end of its grid.
class SearchExhaustedError : public Error {
public:
    SearchExhaustedError(const std::string& what, double last_tested)
        : Error(what), last_tested_(last_tested) {}
    double last_tested() const noexcept { return last_tested_; }

private:
    double last_tested_;
};

namespace detail {

inline std::string to_string(std::complex<double> z) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i)";
    return os.str();
}

}  // namespace detail
}  // namespace spherical_mv
