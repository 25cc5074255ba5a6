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

#include <cstdint>
#include <random>

namespace covobs {

/// One step of the splitmix64 sequence; advances state.
std::uint64_t splitmix64(std::uint64_t &state) noexcept;

/// Independent child seed for (stream, index) under a root seed.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream, std::uint64_t index) noexcept;

std::mt19937_64 make_engine(std::uint64_t root, std::uint64_t stream, std::uint64_t index);

double uniform(std::mt19937_64 &engine, double lo, double hi);

} // namespace covobs
