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
 * @file euclid_json.hpp
 * @brief JSON ingestion of ExpPolyDistribution:
 *   { "dim": n, "terms": [ { "point": [...], "poly": { "2,0": c, ... }, "weight": [re, im] } ] }
 * Coefficients and weights are numbers or [re, im] pairs.
 */
#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "euclid.hpp"

namespace spherical_mv {

namespace detail {

inline std::complex<double> json_complex(const nlohmann::json& j, const char* what) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) return {j[0].get<double>(), j[1].get<double>()};
    throw DomainError(std::string("distribution JSON: ") + what + " must be a number or [re, im]");
}

}  // namespace detail

inline ExpPolyDistribution distribution_from_json(const nlohmann::json& doc) {
    try {
        ExpPolyDistribution mu;
        mu.dim = doc.at("dim").get<int>();
        for (const auto& jt : doc.at("terms")) {
            DistributionTerm t;
            t.point = jt.at("point").get<std::vector<double>>();
            if (jt.contains("weight")) t.weight = detail::json_complex(jt["weight"], "weight");
            if (jt.contains("poly")) {
                for (const auto& [key, val] : jt["poly"].items()) {
                    std::vector<int> mi;
                    std::stringstream ss(key);
                    std::string part;
                    while (std::getline(ss, part, ',')) mi.push_back(std::stoi(part));
                    t.poly[mi] += detail::json_complex(val, "poly coefficient");
                }
            }
            mu.terms.push_back(std::move(t));
        }
        mu.validate();
        return mu;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("distribution JSON: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw DomainError("distribution JSON: multi-index keys must be comma-separated integers");
    }
}

inline ExpPolyDistribution distribution_from_json_text(const std::string& text) {
    try {
        return distribution_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("distribution JSON: ") + e.what());
    }
}

}  // namespace spherical_mv
