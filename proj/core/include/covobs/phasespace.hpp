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
#include "covobs/resolution.hpp"

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace covobs {

/// W(q,p) = e^{iqp/2} U(q) V(p).
WaveFunction weyl_apply(const WaveFunction &phi, double q, double p);

/// Covariant phase-space observable generated by the state T.
struct PhaseSpaceObservable {
    MixedState generator;
};

struct PhaseWindow {
    double q_max = 12.0;
    double p_max = 12.0;
    /// Approximate number of lattice points per axis; q values are spaced
    /// by a whole number of grid steps, p values by whole dual steps.
    std::size_t target_points = 256;
};

struct JointDensity {
    std::vector<double> q;
    std::vector<double> p;
    double dq = 0.0;
    double dp = 0.0;
    /// Row-major: values[i * p.size() + k] is the density at (q[i], p[k]).
    std::vector<double> values;
    /// Indices of q and p on the state grid and its conjugate.
    std::vector<std::size_t> q_index;
    std::vector<std::size_t> p_index;

    [[nodiscard]] double at(std::size_t i, std::size_t k) const { return values[i * p.size() + k]; }
    [[nodiscard]] double mass() const;
    /// Integral over p for each q, and over q for each p.
    [[nodiscard]] std::vector<double> q_margin() const;
    [[nodiscard]] std::vector<double> p_margin() const;
};

JointDensity joint_density(const PhaseSpaceObservable &g, const MixedState &s,
                           const PhaseWindow &window = {});

/// Margins e(q) = sum w |phi(-q)|^2 and f(p) = sum w |phi^(-p)|^2.  The
/// second lives on the conjugate grid.
std::pair<Measure1D, Measure1D> margin_measures(const PhaseSpaceObservable &g);

inline constexpr double kResolutionProductBound = 0.17157287525380990; // 3 - 2 sqrt 2

struct ProductReport {
    ResolutionReport position;
    ResolutionReport momentum;
    double product = 0.0;
    double bound = kResolutionProductBound;
    double slack = 1e-3;
    bool pass = false;
};

/// Gaussian generator with position deviation s / sqrt 2 (s = 1: vacuum).
MixedState squeezed_vacuum(const GridSpec &grid, double s);

/// Rank 1 to 3 mixture of displaced, boosted Hermite functions of order
/// up to 5 and scale in [0.6, 1.6].
MixedState random_hermite_mixture(const GridSpec &grid, std::mt19937_64 &engine);

/// Grid with dx = dp, so both margins are resolved equally.
GridSpec balanced_grid(std::size_t n);

ProductReport resolution_product_check(const PhaseSpaceObservable &g, double tol);

/// CSV of (q,p,value) triples.
std::string joint_density_csv(const JointDensity &density);
/// One JSON header line, then little-endian float32 values row-major.
std::string joint_density_binary(const JointDensity &density);

} // namespace covobs
