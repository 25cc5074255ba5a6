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

#include "covobs/measure.hpp"

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace covobs {

struct ResolutionReport {
    double gamma = 0.0;
    double tolerance = 0.0;
    std::vector<std::pair<double, double>> curve;
    std::string method = "bisection";

    [[nodiscard]] bool infinite() const noexcept { return gamma == std::numeric_limits<double>::infinity(); }
};

/// g(alpha) = sup_x rho(I_{x;alpha}) > 1/2.  Values within 1e-12 of 1/2
/// count as not regular.
bool is_alpha_regular(const Measure1D &rho, double alpha);

/// gamma = inf{alpha > 0 : rho is alpha-regular}, bracketed to within tol.
/// For measures with a density part tol must be at least dx / 4.
ResolutionReport limit_of_resolution(const Measure1D &rho, double tol);

/// The trivial observable E(X) = lambda(X) I: no interval effect is regular.
ResolutionReport trivial_resolution();

} // namespace covobs
