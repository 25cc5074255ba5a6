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

#include "covobs/grid.hpp"
#include "covobs/measure.hpp"

namespace covobs {

/// Outcome law of the sharp position observable: sum_i w_i |phi_i(x_j)|^2.
Measure1D position_distribution(const MixedState &state);

/// Same construction on the Fourier-transformed components; the result
/// lives on grid().conjugate().
Measure1D momentum_distribution(const MixedState &state);

MixedState fourier(const MixedState &state);

} // namespace covobs
