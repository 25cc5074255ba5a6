// Copyright 2026 The covobs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace covobs {

enum class ErrorCode {
    InvalidArgument,
    ShiftTooLarge,
    Aliasing,
    SupportOverflow,
    GridTooSmall,
    NonConvexWeights,
    Resolution,
    BandSelection,
    WindowTooSmall,
    NotARotation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map them without parsing messages.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string &what);

inline void require(bool condition, ErrorCode code, const std::string &what) {
    if (!condition) {
        raise(code, what);
    }
}

} // namespace covobs
