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
 * @file report_io.hpp
 * @brief JSON and CSV serialisation of certification, M-finder and Euclidean
 *        reports. JSON documents carry "schema_version": 1; CSV follows
 *        RFC 4180 (CRLF line ends, fields quoted when they contain a comma,
 *        quote or line break). Numbers are written with 17 significant
 *        digits, so identical inputs give byte-identical files.
 */
#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "certifier.hpp"
#include "euclid.hpp"
#include "hcseries.hpp"

namespace spherical_mv::io {

inline constexpr int kSchemaVersion = 1;

using json = nlohmann::ordered_json;

/// Finite doubles as numbers, everything else as null.
inline json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

inline json num(std::complex<double> z) { return json::array({num(z.real()), num(z.imag())}); }

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

inline std::string csv_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

class CsvWriter {
public:
    explicit CsvWriter(const std::vector<std::string>& header) { row(header); }

    void row(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) text_ += ',';
            text_ += csv_field(fields[i]);
        }
        text_ += "\r\n";
    }

    const std::string& str() const noexcept { return text_; }

private:
    std::string text_;
};

/// Rows (xi, radius, sup, bound, margin) of a slow-decrease report.
inline std::string slow_decrease_csv(const SlowDecreaseReport& R) {
    CsvWriter w({"xi", "radius", "sup", "bound", "margin"});
    for (const auto& r : R.rows)
        w.row({csv_number(r.xi), csv_number(r.radius), csv_number(r.sup), csv_number(r.bound), csv_number(r.margin)});
    return w.str();
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline json to_json(const BCD& c) { return {{"B", num(c.B)}, {"C", num(c.C)}, {"D", num(c.D)}}; }

inline json to_json(const SlowDecreaseReport& R) {
    json rows = json::array();
    for (const auto& r : R.rows)
        rows.push_back({{"xi", num(r.xi)},
                        {"radius", num(r.radius)},
                        {"sup", num(r.sup)},
                        {"variation", num(r.variation)},
                        {"bound", num(r.bound)},
                        {"margin", num(r.margin)}});
    return {{"A", num(R.A)},
            {"neighbourhood", neighbourhood_name(R.mode)},
            {"samples", R.samples},
            {"fitted", to_json(R.fitted)},
            {"target", R.target ? to_json(*R.target) : json(nullptr)},
            {"tail_slope", num(R.tail_slope)},
            {"pass", R.pass},
            {"detail", R.detail},
            {"rows", rows}};
}

inline json to_json(const GrowthReport& G) {
    json rows = json::array();
    for (const auto& r : G.rows) rows.push_back({{"zeta", num(r.zeta)}, {"abs_u", num(r.abs_u)}, {"ratio", num(r.ratio)}});
    return {{"R", num(G.R)},
            {"N", G.N},
            {"fitted_A", num(G.fitted_A)},
            {"inner_max", num(G.inner_max)},
            {"outer_max", num(G.outer_max)},
            {"slack", num(G.slack)},
            {"pass", G.pass},
            {"detail", G.detail},
            {"rows", rows}};
}

inline json to_json(const SpaceCertification& C) {
    return {{"t", num(C.t)},
            {"pass", C.pass},
            {"growth", to_json(C.growth)},
            {"slow_decrease", C.slow_ran ? to_json(C.slow) : json(nullptr)}};
}

inline json to_json(const EtaVerdict& V) {
    json a = json::array();
    for (const auto& c : V.conditions)
        a.push_back({{"label", std::string(1, c.label)}, {"pass", c.pass}, {"value", num(c.value)}, {"detail", c.detail}});
    return a;
}

inline json to_json(const FindMResult& F) {
    json curve = json::array();
    for (auto [M, C] : F.curve) curve.push_back({num(M), num(C)});
    return {{"M_star", num(F.M_star)},
            {"eta", num(F.eta)},
            {"H0_scalar", num(F.H0_scalar)},
            {"m1", num(F.m1)},
            {"m2", num(F.m2)},
            {"K_H0", num(F.K_H0)},
            {"K_H0_enlarged", F.K_H0_enlarged},
            {"curve", curve}};
}

inline json to_json(const LowerBoundVerdict& V) {
    json pts = json::array();
    for (const auto& p : V.points) pts.push_back({{"xi", num(p.xi)}, {"lhs", num(p.lhs)}, {"rhs", num(p.rhs)}});
    return {{"pass", V.pass}, {"C", num(V.C)}, {"min_margin", num(V.min_margin)}, {"detail", V.detail}, {"points", pts}};
}

inline json to_json(const DeltaConstant& D) {
    return {{"A", num(D.A)}, {"M", num(D.M)}, {"lead", D.lead}, {"weighted", D.weighted}};
}

inline json to_json(const DeltaBoundVerdict& V) {
    json pts = json::array();
    for (const auto& p : V.points) {
        json xi = json::array();
        for (double x : p.xi) xi.push_back(num(x));
        pts.push_back({{"xi", xi}, {"log_lhs", num(p.log_lhs)}, {"log_rhs", num(p.log_rhs)}});
    }
    return {{"pass", V.pass},
            {"constant", to_json(V.constant)},
            {"min_log_margin", num(V.min_log_margin)},
            {"detail", V.detail},
            {"points", pts}};
}

}  // namespace spherical_mv::io
