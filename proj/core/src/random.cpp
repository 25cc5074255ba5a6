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


#include "covobs/random.hpp"

namespace covobs {

std::uint64_t splitmix64(std::uint64_t &state) noexcept {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream, std::uint64_t index) noexcept {
    std::uint64_t state = root;
    const std::uint64_t a = splitmix64(state);
    state = a ^ (stream * 0xd1b54a32d192ed03ULL);
    const std::uint64_t b = splitmix64(state);
    state = b ^ (index * 0x8cb92ba72f3d8dd7ULL);
    return splitmix64(state);
}

std::mt19937_64 make_engine(std::uint64_t root, std::uint64_t stream, std::uint64_t index) {
    return std::mt19937_64(derive_seed(root, stream, index));
}

double uniform(std::mt19937_64 &engine, double lo, double hi) {
    // Explicit 53-bit mapping: std::uniform_real_distribution output is
    // implementation-defined, which would break cross-platform reports.
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

} // namespace covobs
