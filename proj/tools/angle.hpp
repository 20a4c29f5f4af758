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

#pragma once

#include <string>

namespace netrigid_cli {

/// Decimal radians ("0.3927", "-1e-2") or multiples of pi ("pi", "pi/8", "-3pi/4", "2*pi/3").
/// Throws std::invalid_argument on anything else.
double parse_angle(const std::string &text);

}  // namespace netrigid_cli
