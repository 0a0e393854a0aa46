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

// Command-line plumbing: grids, tolerance overrides, config files, exit codes.

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "cli_support.hpp"

namespace cli = spherical_mv::cli;
namespace smv = spherical_mv;

TEST(Grid, RangeIsInclusive) {
    const auto g = cli::parse_grid("0:1:0.1", "--lambda");
    ASSERT_EQ(g.size(), 11u);
    EXPECT_NEAR(g.back(), 1.0, 1e-15);
    EXPECT_EQ(cli::parse_grid("0:10:0.5", "--lambda").size(), 21u);
    EXPECT_EQ(cli::parse_grid("2, 3.5 ,7", "--lambda"), (std::vector<double>{2.0, 3.5, 7.0}));
}

TEST(Grid, Rejections) {
    EXPECT_THROW(cli::parse_grid("1:0:0.1", "g"), cli::ConfigError);
    EXPECT_THROW(cli::parse_grid("", "g"), cli::ConfigError);
    EXPECT_THROW(cli::parse_grid("0:1:0", "g"), cli::ConfigError);
    EXPECT_THROW(cli::parse_grid("0:1", "g"), cli::ConfigError);
    EXPECT_THROW(cli::parse_grid("1,x", "g"), cli::ConfigError);
    EXPECT_THROW(cli::parse_double("1.5abc", "v"), cli::ConfigError);
}

TEST(Tolerances, OverridesAndUnknownKeys) {
    const auto t = cli::parse_tolerances({"quad_abs_tol=1e-10"}, {{"quad_abs_tol", 1e-14}, {"oscillation_guard", 6.0}});
    EXPECT_EQ(t.at("quad_abs_tol"), 1e-10);
    EXPECT_EQ(t.at("oscillation_guard"), 6.0);
    EXPECT_THROW(cli::parse_tolerances({"bogus=1"}, {{"quad_abs_tol", 1e-14}}), cli::ConfigError);
    EXPECT_THROW(cli::parse_tolerances({"quad_abs_tol"}, {{"quad_abs_tol", 1e-14}}), cli::ConfigError);
    EXPECT_THROW(cli::parse_tolerances({"x=1"}, {}), cli::ConfigError);
}

TEST(Config, ExpandedAheadOfExplicitFlags) {
    const auto path = std::filesystem::temp_directory_path() / "smv_cli_support_test.cfg";
    {
        std::ofstream f(path);
        f << "# comment\nspace = H4\n\nt=2  # trailing\n";
    }
    const auto out = cli::expand_config({"prog", "--config", path.string(), "eval", "--t", "3"}, {"eval", "certify"});
    EXPECT_EQ(out, (std::vector<std::string>{"prog", "eval", "--space=H4", "--t=2", "--t", "3"}));
    EXPECT_THROW(cli::expand_config({"prog", "--config", path.string()}, {"eval"}), cli::ConfigError);
    EXPECT_THROW(cli::expand_config({"prog", "--config"}, {"eval"}), cli::ConfigError);
    EXPECT_THROW(cli::read_config((path.string() + ".missing")), cli::ConfigError);
    {
        std::ofstream f(path);
        f << "novalue\n";
    }
    EXPECT_THROW(cli::read_config(path.string()), cli::ConfigError);
    std::filesystem::remove(path);
}

TEST(ExitCodes, Mapping) {
    EXPECT_EQ(cli::exit_code_for(cli::ConfigError("x")), cli::kConfig);
    EXPECT_EQ(cli::exit_code_for(smv::DomainError("x")), cli::kConfig);
    EXPECT_EQ(cli::exit_code_for(smv::RangeError("x")), cli::kConfig);
    EXPECT_EQ(cli::exit_code_for(smv::DegenerateError("x")), cli::kConfig);
    EXPECT_EQ(cli::exit_code_for(smv::ConvergenceError("x", 1.0)), cli::kNumeric);
    EXPECT_EQ(cli::exit_code_for(smv::ResonanceError("x", 2)), cli::kNumeric);
    EXPECT_EQ(cli::exit_code_for(smv::SearchExhaustedError("x", 1.0)), cli::kSearchExhausted);
}
