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

#include <stdexcept>
#include <string>

namespace netrigid {

enum class ErrorKind {
    invalid_input,   // malformed documents, out-of-range parameters, structural mismatches
    capacity,        // enumeration or state size above the configured cap
    indeterminate,   // neither LP branch could be certified at the stated margins
};

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message) : std::runtime_error(message), kind_(kind) {
    }
    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_input(const std::string &message) {
    throw Error(ErrorKind::invalid_input, message);
}

[[noreturn]] inline void fail_capacity(const std::string &message) {
    throw Error(ErrorKind::capacity, message);
}

}  // namespace netrigid
