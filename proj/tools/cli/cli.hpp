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

#include <iosfwd>
#include <string>
#include <vector>

namespace covobs::cli {

enum ExitCode : int { kPass = 0, kFailed = 1, kConfigError = 2 };

/// Runs one command line (without the program name) and returns the
/// process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Writes `content` to `path` through a temporary file and a rename.
void write_atomically(const std::string &path, const std::string &content);

} // namespace covobs::cli
