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

#include "angle.hpp"

#include <cmath>
#include <numbers>
#include <regex>
#include <stdexcept>

namespace netrigid_cli {

namespace {

double to_number(const std::string &s, const std::string &whole) {
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        throw std::invalid_argument("not an angle: '" + whole + "'");
    }
    if (used != s.size() || !std::isfinite(v)) {
        throw std::invalid_argument("not an angle: '" + whole + "'");
    }
    return v;
}

}  // namespace

double parse_angle(const std::string &text) {
    static const std::regex pi_form(R"(^\s*([+-]?)(\d+(?:\.\d*)?|\.\d+)?\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, pi_form)) {
        double coef = m[2].matched ? to_number(m[2].str(), text) : 1.0;
        double den = m[3].matched ? to_number(m[3].str(), text) : 1.0;
        if (den == 0) {
            throw std::invalid_argument("division by zero in angle '" + text + "'");
        }
        double v = coef * std::numbers::pi / den;
        return m[1].str() == "-" ? -v : v;
    }
    std::string trimmed = std::regex_replace(text, std::regex(R"(^\s+|\s+$)"), "");
    if (trimmed.empty()) {
        throw std::invalid_argument("empty angle");
    }
    return to_number(trimmed, text);
}

}  // namespace netrigid_cli
