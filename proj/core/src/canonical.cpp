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


#include "covobs/canonical.hpp"

namespace covobs {

Measure1D position_distribution(const MixedState &state) {
    const GridSpec &grid = state.grid();
    std::vector<double> density(grid.size(), 0.0);
    for (const auto &component : state.components()) {
        for (std::size_t j = 0; j < grid.size(); ++j) {
            density[j] += component.weight * std::norm(component.state[j]);
        }
    }
    // Component norms hold to ~1e-12; fold the residue back in.
    double mass = 0.0;
    for (double v : density) {
        mass += v;
    }
    mass *= grid.dx();
    for (auto &v : density) {
        v /= mass;
    }
    return Measure1D::from_density(grid, std::move(density));
}

MixedState fourier(const MixedState &state) {
    std::vector<MixedState::Component> parts;
    parts.reserve(state.components().size());
    for (const auto &component : state.components()) {
        parts.push_back({component.weight, fourier(component.state)});
    }
    return MixedState(std::move(parts));
}

Measure1D momentum_distribution(const MixedState &state) {
    return position_distribution(fourier(state));
}

} // namespace covobs
