// Copyright 2026 The netrigid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <numbers>
#include <stdexcept>

#include "angle.hpp"

namespace {

using netrigid_cli::parse_angle;
constexpr double kPi = std::numbers::pi;

TEST(Angle, Decimals) {
    EXPECT_DOUBLE_EQ(parse_angle("0.25"), 0.25);
    EXPECT_DOUBLE_EQ(parse_angle(" -1e-3 "), -1e-3);
    EXPECT_DOUBLE_EQ(parse_angle("0"), 0.0);
}

TEST(Angle, PiForms) {
    EXPECT_DOUBLE_EQ(parse_angle("pi"), kPi);
    EXPECT_DOUBLE_EQ(parse_angle("pi/8"), kPi / 8);
    EXPECT_DOUBLE_EQ(parse_angle("-3pi/4"), -3 * kPi / 4);
    EXPECT_DOUBLE_EQ(parse_angle("2*pi/3"), 2 * kPi / 3);
    EXPECT_DOUBLE_EQ(parse_angle("0.5pi"), kPi / 2);
}

TEST(Angle, Rejects) {
    for (const char *bad : {"", "  ", "pie", "pi/0", "1/8", "nan", "inf", "3x", "pi/"}) {
        EXPECT_THROW(parse_angle(bad), std::invalid_argument) << bad;
    }
}

}  // namespace
