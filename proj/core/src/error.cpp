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

#include "covobs/error.hpp"

namespace covobs {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument:
        return "invalid-argument";
    case ErrorCode::ShiftTooLarge:
        return "shift-too-large";
    case ErrorCode::Aliasing:
        return "aliasing";
    case ErrorCode::SupportOverflow:
        return "support-overflow";
    case ErrorCode::GridTooSmall:
        return "grid-too-small";
    case ErrorCode::NonConvexWeights:
        return "non-convex-weights";
    case ErrorCode::Resolution:
        return "resolution";
    case ErrorCode::BandSelection:
        return "band-selection";
    case ErrorCode::WindowTooSmall:
        return "window-too-small";
    case ErrorCode::NotARotation:
        return "not-a-rotation";
    }
    return "unknown";
}

void raise(ErrorCode code, const std::string &what) {
    throw Error(code, std::string(to_string(code)) + ": " + what);
}

} // namespace covobs
