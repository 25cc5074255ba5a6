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

#include <string_view>
#include <utility>
#include <vector>

namespace covobs {

enum class Relation { LeftLessEq, RightLessEq, Equivalent, Incomparable };

std::string_view to_string(Relation relation) noexcept;

struct DistinctionVerdict {
    Relation relation;
    std::vector<Interval> left_support;
    std::vector<Interval> right_support;
    double threshold;
    double xi_max;
    double xi_step;
    /// Some sample of either transform lies within a factor 10 of the
    /// threshold, so the verdict may flip with a different threshold.
    bool near_threshold;
};

/// Grid used when a distinction helper needs one and none is given.
GridSpec distinction_grid();

/// Multiples of 2 pi / L of distinction_grid() up to |xi| <= 2.
FreqGrid distinction_freqs();

DistinctionVerdict compare(const Measure1D &rho1, const Measure1D &rho2,
                           const FreqGrid &freqs = distinction_freqs(),
                           double threshold = kDefaultSupportThreshold);

bool is_maximal_class(const Measure1D &rho, const FreqGrid &freqs = distinction_freqs(),
                      double threshold = kDefaultSupportThreshold);

/// f_i = F^{-1} h_i with h_i supported on a <= |p| <= b, odd for i = 1 and
/// even for i = 2.
std::pair<WaveFunction, WaveFunction> witness_states(double a, double b, const GridSpec &grid);

struct SeparationReport {
    double a;
    double b;
    double tv_under_rho1;
    double tv_under_rho2;
    double tv_rho1_min = 0.05;
    double tv_rho2_max = 1e-6;
    double threshold = kDefaultSupportThreshold;
    bool pass;
};

/// Builds the witness pair for the band (a, b) and measures both outcome
/// laws under E_rho1 and E_rho2 (periodic convolution on the grid).
SeparationReport verify_separation(const Measure1D &rho1, const Measure1D &rho2, double a,
                                   double b, const GridSpec &grid = distinction_grid(),
                                   double threshold = kDefaultSupportThreshold);

} // namespace covobs
