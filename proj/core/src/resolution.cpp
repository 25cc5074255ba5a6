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


#include "covobs/resolution.hpp"

#include "covobs/error.hpp"

#include <algorithm>
#include <cmath>

namespace covobs {
namespace {

constexpr double kHalf = 0.5 + 1e-12;
constexpr int kCurveSamples = 64;

} // namespace

bool is_alpha_regular(const Measure1D &rho, double alpha) {
    return sliding_sup(rho, alpha) > kHalf;
}

ResolutionReport limit_of_resolution(const Measure1D &rho, double tol) {
    require(tol > 0.0 && std::isfinite(tol), ErrorCode::InvalidArgument,
            "resolution tolerance must be positive");
    if (rho.has_density()) {
        require(tol >= 0.25 * rho.grid()->dx() * (1.0 - 1e-12), ErrorCode::InvalidArgument,
                "resolution tolerance must be at least dx / 4");
    }
    ResolutionReport report;
    report.tolerance = rho.has_density() ? std::max(tol, rho.grid()->dx()) : tol;

    const double diameter = rho.support_hull().width();
    if (is_alpha_regular(rho, tol)) {
        report.gamma = 0.0;
    } else {
        double lo = tol;
        double hi = diameter + tol;
        while (!is_alpha_regular(rho, hi)) {
            hi *= 2.0; // only reachable through round-off at the hull edge
        }
        while (hi - lo > tol) {
            const double mid = 0.5 * (lo + hi);
            if (is_alpha_regular(rho, mid)) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        report.gamma = 0.5 * (lo + hi);
    }

    const double span = std::min(diameter + tol, std::max(4.0 * report.gamma, 4.0 * tol));
    report.curve.reserve(kCurveSamples);
    for (int k = 1; k <= kCurveSamples; ++k) {
        const double alpha = span * k / kCurveSamples;
        report.curve.emplace_back(alpha, sliding_sup(rho, alpha));
    }
    return report;
}

ResolutionReport trivial_resolution() {
    ResolutionReport report;
    report.gamma = std::numeric_limits<double>::infinity();
    report.tolerance = 0.0;
    return report;
}

} // namespace covobs
