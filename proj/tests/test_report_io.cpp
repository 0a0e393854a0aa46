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

// CSV and JSON report writers.

#include <cmath>
#include <cstdlib>
#include <limits>

#include <gtest/gtest.h>

#include <spherical_mv/report_io.hpp>

namespace io = spherical_mv::io;

TEST(Csv, NumbersRoundTrip) {
    for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) EXPECT_EQ(std::strtod(io::csv_number(v).c_str(), nullptr), v);
    EXPECT_EQ(io::csv_number(std::numeric_limits<double>::quiet_NaN()), "nan");
    EXPECT_EQ(io::csv_number(-std::numeric_limits<double>::infinity()), "-inf");
}

TEST(Csv, QuotingAndLineEnds) {
    EXPECT_EQ(io::csv_field("plain"), "plain");
    EXPECT_EQ(io::csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(io::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    io::CsvWriter w({"x", "note"});
    w.row({"1", "two\nlines"});
    EXPECT_EQ(w.str(), "x,note\r\n1,\"two\nlines\"\r\n");
}

TEST(Json, NonFiniteBecomesNull) {
    EXPECT_TRUE(io::num(std::numeric_limits<double>::infinity()).is_null());
    EXPECT_EQ(io::num(2.5).get<double>(), 2.5);
    const auto z = io::num(std::complex<double>(1.0, std::nan("")));
    EXPECT_EQ(z[0].get<double>(), 1.0);
    EXPECT_TRUE(z[1].is_null());
}

TEST(Json, ReportsSerialiseDeterministically) {
    spherical_mv::SlowDecreaseReport R;
    R.A = 7.0;
    R.rows.push_back({10.0, 2.0, 0.5, 0.0, 0.25, 2.0});
    R.fitted = {0.1, 2.0, 1.0};
    R.pass = true;
    const auto a = io::to_json(R).dump(), b = io::to_json(R).dump();
    EXPECT_EQ(a, b);
    const auto j = io::to_json(R);
    EXPECT_EQ(j.at("fitted").at("D").get<double>(), 1.0);
    EXPECT_EQ(io::to_json(spherical_mv::BCD{1.0, 2.0, 3.0}).dump(), R"({"B":1.0,"C":2.0,"D":3.0})");
    EXPECT_NE(io::slow_decrease_csv(R).find("xi,radius,sup,bound,margin\r\n10,2,0.5,0.25,2\r\n"), std::string::npos);
}
