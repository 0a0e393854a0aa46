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
 * @file cli_support.hpp
 * @brief Plumbing for the command-line tool: exit codes, grid and tolerance
 *        parsing, and the flat key=value configuration file.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <spherical_mv/errors.hpp>

namespace spherical_mv::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kConfig = 2, kNumeric = 3, kCertificationFail = 4, kSearchExhausted = 5 };

/// Configuration problems surfaced by the tool itself.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Exit code for an exception escaping a command.
inline int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const SearchExhaustedError*>(&e)) return kSearchExhausted;
    if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const DomainError*>(&e) ||
        dynamic_cast<const RangeError*>(&e) || dynamic_cast<const DegenerateError*>(&e))
        return kConfig;
    return kNumeric;
}

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& text, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(trim(text), &pos);
        if (pos != trim(text).size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(what + ": '" + text + "' is not a number");
    }
}

/// "start:stop:step" (stop inclusive) or a comma-separated list of values.
inline std::vector<double> parse_grid(const std::string& text, const std::string& what) {
    std::vector<double> g;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        std::string p;
        while (std::getline(ss, p, ':')) parts.push_back(p);
        if (parts.size() != 3) throw ConfigError(what + ": expected start:stop:step, got '" + text + "'");
        const double a = parse_double(parts[0], what), b = parse_double(parts[1], what), h = parse_double(parts[2], what);
        if (!(h > 0.0)) throw ConfigError(what + ": step must be positive");
        if (b >= a) {
            const long n = static_cast<long>(std::floor((b - a) / h + 1e-9));
            if (n > 1000000) throw ConfigError(what + ": grid has more than 10^6 points");
            for (long i = 0; i <= n; ++i) g.push_back(a + h * static_cast<double>(i));
        }
    } else {
        std::stringstream ss(text);
        std::string p;
        while (std::getline(ss, p, ','))
            if (!trim(p).empty()) g.push_back(parse_double(p, what));
    }
    if (g.empty()) throw ConfigError(what + ": grid '" + text + "' is empty");
    return g;
}

/// Applies "key=value" overrides to the defaults; unknown keys are rejected.
inline std::map<std::string, double> parse_tolerances(const std::vector<std::string>& overrides,
                                                      std::map<std::string, double> defaults) {
    for (const auto& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) throw ConfigError("--tol expects key=value, got '" + o + "'");
        const std::string key = trim(o.substr(0, eq));
        auto it = defaults.find(key);
        if (it == defaults.end()) {
            std::string known;
            for (const auto& [k, v] : defaults) known += (known.empty() ? "" : ", ") + k;
            throw ConfigError("--tol: unknown key '" + key + "' (accepted: " + (known.empty() ? "none" : known) + ")");
        }
        it->second = parse_double(o.substr(eq + 1), "--tol " + key);
    }
    return defaults;
}

/// Reads a flat key=value file; '#' starts a comment.
inline std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::vector<std::pair<std::string, std::string>> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config " + path + ":" + std::to_string(lineno) + ": expected key=value");
        kv.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return kv;
}

/// Expands `--config FILE` into `--key=value` arguments placed directly after
/// the subcommand name, ahead of the explicit flags, so that with a
/// take-last policy the flags win.
inline std::vector<std::string> expand_config(const std::vector<std::string>& args,
                                              const std::vector<std::string>& subcommands) {
    std::vector<std::string> rest;
    std::vector<std::pair<std::string, std::string>> kv;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--config") {
            if (i + 1 >= args.size()) throw ConfigError("--config requires a file name");
            auto more = read_config(args[++i]);
            kv.insert(kv.end(), more.begin(), more.end());
        } else if (a.rfind("--config=", 0) == 0) {
            auto more = read_config(a.substr(9));
            kv.insert(kv.end(), more.begin(), more.end());
        } else {
            rest.push_back(a);
        }
    }
    if (kv.empty()) return rest;
    std::vector<std::string> out;
    bool inserted = false;
    for (const auto& a : rest) {
        out.push_back(a);
        if (!inserted && std::find(subcommands.begin(), subcommands.end(), a) != subcommands.end()) {
            for (const auto& [k, v] : kv) out.push_back("--" + k + "=" + v);
            inserted = true;
        }
    }
    if (!inserted) throw ConfigError("--config given without a command");
    return out;
}

}  // namespace spherical_mv::cli
