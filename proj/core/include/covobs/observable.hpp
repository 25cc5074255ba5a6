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

#include <cstdint>
#include <functional>
#include <random>
#include <variant>
#include <vector>

namespace covobs {

enum class ObservableKind { Position, Momentum };

/**
 * Covariant position (or momentum) observable, identified with its smearing
 * measure.  For Momentum the smear lives on the conjugate grid of the states
 * it is applied to.
 */
struct Observable1D {
    ObservableKind kind;
    Measure1D smear;
};

/// Finite union of closed intervals, kept sorted and disjoint.
class IntervalUnion {
  public:
    IntervalUnion() = default;
    explicit IntervalUnion(std::vector<Interval> pieces);

    [[nodiscard]] std::span<const Interval> pieces() const noexcept { return pieces_; }
    [[nodiscard]] bool empty() const noexcept { return pieces_.empty(); }
    [[nodiscard]] double lo() const { return pieces_.front().lo; }
    [[nodiscard]] double hi() const { return pieces_.back().hi; }

    /// Closure of [lo, hi] minus this union.
    [[nodiscard]] IntervalUnion complement(double lo, double hi) const;

  private:
    std::vector<Interval> pieces_;
};

Measure1D outcome_distribution(const Observable1D &obs, const MixedState &state,
                               Boundary boundary = Boundary::Linear);

/// sup over x of rho(X - x), the norm of the effect E(X).
double effect_sup(const Observable1D &obs, const IntervalUnion &x_set);
/// inf over the same candidate shifts, plus shifts that move X clear of rho.
double effect_inf(const Observable1D &obs, const IntervalUnion &x_set);

bool is_regular_effect(const Observable1D &obs, const IntervalUnion &x_set);

/// Maps a state to an outcome law; lets the battery run on deliberately
/// broken models as well as on genuine observables.
using OutcomeModel = std::function<Measure1D(const MixedState &)>;

struct BatteryReport {
    ObservableKind kind;
    double max_deviation = 0.0;
    double covariance_deviation = 0.0;
    double invariance_deviation = 0.0;
    unsigned trials = 0;
    std::uint64_t seed = 0;
    double tolerance = 1e-7;
    bool pass = false;
};

/// Default state grid for batteries: packets stay in the middle half.
GridSpec battery_grid();

BatteryReport covariance_battery(const Observable1D &obs, unsigned trials, std::uint64_t seed,
                                 const GridSpec &state_grid = battery_grid());

BatteryReport model_battery(ObservableKind kind, const OutcomeModel &model, unsigned trials,
                            std::uint64_t seed, const GridSpec &state_grid = battery_grid());

/// Position model that smears x < 0 with rho and x >= 0 with rho shifted
/// by `offset`.  Not translation covariant for offset != 0.
OutcomeModel split_smear_model(const Measure1D &rho, double offset);

/// Superposition of 1 to 3 Gaussian packets with random centres, widths
/// and momenta, drawn from `engine`.
WaveFunction random_packet_state(const GridSpec &grid, std::mt19937_64 &engine);

struct SharpAt {
    double t;
    double residual;
};

struct NotDilationCovariant {
    Interval witness;
    double sup;
};

using DilationClass = std::variant<SharpAt, NotDilationCovariant>;

DilationClass dilation_classification(const Observable1D &obs,
                                      const GridSpec &state_grid = battery_grid());

} // namespace covobs
