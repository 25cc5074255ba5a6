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


#include "covobs/distinction.hpp"

#include "covobs/canonical.hpp"
#include "covobs/error.hpp"

#include <algorithm>
#include <cmath>

namespace covobs {
namespace {

/// Right-hand intervals with gaps of at most `gap` closed up.
std::vector<Interval> close_gaps(std::span<const Interval> pieces, double gap) {
    std::vector<Interval> out;
    for (const auto &piece : pieces) {
        if (!out.empty() && piece.lo - out.back().hi <= gap * (1.0 + 1e-9)) {
            out.back().hi = std::max(out.back().hi, piece.hi);
        } else {
            out.push_back(piece);
        }
    }
    return out;
}

bool included(std::span<const Interval> left, std::span<const Interval> right, double step) {
    const auto cover = close_gaps(right, step);
    const double slack = step * (1.0 + 1e-9);
    for (const auto &piece : left) {
        const bool inside = std::any_of(cover.begin(), cover.end(), [&](const Interval &c) {
            return c.lo - slack <= piece.lo && piece.hi <= c.hi + slack;
        });
        if (!inside) {
            return false;
        }
    }
    return true;
}

bool near(const CharFn &cf) {
    return std::any_of(cf.values.begin(), cf.values.end(), [&](const Complex &v) {
        const double m = std::abs(v);
        return m > 0.1 * cf.threshold && m < 10.0 * cf.threshold;
    });
}

} // namespace

std::string_view to_string(Relation relation) noexcept {
    switch (relation) {
    case Relation::LeftLessEq:
        return "LeftLessEq";
    case Relation::RightLessEq:
        return "RightLessEq";
    case Relation::Equivalent:
        return "Equivalent";
    case Relation::Incomparable:
        return "Incomparable";
    }
    return "Incomparable";
}

GridSpec distinction_grid() { return GridSpec(4096, 400.0); }

FreqGrid distinction_freqs() { return FreqGrid::lattice(distinction_grid(), 2.0); }

DistinctionVerdict compare(const Measure1D &rho1, const Measure1D &rho2, const FreqGrid &freqs,
                           double threshold) {
    const CharFn cf1 = char_fn(rho1, freqs, threshold);
    const CharFn cf2 = char_fn(rho2, freqs, threshold);
    DistinctionVerdict verdict{Relation::Incomparable,
                               char_support(cf1),
                               char_support(cf2),
                               threshold,
                               freqs.xi_max(),
                               freqs.step,
                               near(cf1) || near(cf2)};
    const bool left_in_right = included(verdict.left_support, verdict.right_support, freqs.step);
    const bool right_in_left = included(verdict.right_support, verdict.left_support, freqs.step);
    if (left_in_right && right_in_left) {
        verdict.relation = Relation::Equivalent;
    } else if (left_in_right) {
        verdict.relation = Relation::LeftLessEq;
    } else if (right_in_left) {
        verdict.relation = Relation::RightLessEq;
    }
    return verdict;
}

bool is_maximal_class(const Measure1D &rho, const FreqGrid &freqs, double threshold) {
    const auto support = char_support(char_fn(rho, freqs, threshold));
    const auto cover = close_gaps(support, 2.0 * freqs.step);
    if (cover.size() != 1) {
        return false;
    }
    const double slack = 2.0 * freqs.step * (1.0 + 1e-9);
    return cover.front().lo <= -freqs.xi_max() + slack && cover.front().hi >= freqs.xi_max() - slack;
}

std::pair<WaveFunction, WaveFunction> witness_states(double a, double b, const GridSpec &grid) {
    require(a >= 0.0 && b > a, ErrorCode::InvalidArgument, "witness band needs 0 <= a < b");
    require(2.0 * b < grid.nyquist(), ErrorCode::BandSelection,
            "witness band does not fit the conjugate grid");
    const GridSpec dual = grid.conjugate();
    const double eps = 1e-9 * dual.dx();
    std::vector<Complex> h1(dual.size(), Complex{0.0, 0.0});
    std::vector<Complex> h2(dual.size(), Complex{0.0, 0.0});
    std::size_t count = 0;
    for (std::size_t k = 0; k < dual.size(); ++k) {
        const double p = dual.x(k);
        const double m = std::abs(p);
        if (m >= a - eps && m <= b + eps && m > 0.0) {
            h1[k] = p > 0.0 ? 1.0 : -1.0;
            h2[k] = 1.0;
            ++count;
        }
    }
    require(count >= 2, ErrorCode::BandSelection, "witness band holds no dual lattice points");
    const double c = 1.0 / std::sqrt(static_cast<double>(count) * dual.dx());
    auto f1 = inverse_fourier(WaveFunction(dual, std::move(h1)).scaled(c));
    auto f2 = inverse_fourier(WaveFunction(dual, std::move(h2)).scaled(c));
    return {std::move(f1), std::move(f2)};
}

SeparationReport verify_separation(const Measure1D &rho1, const Measure1D &rho2, double a,
                                   double b, const GridSpec &grid, double threshold) {
    const double step = grid.dp();
    // Band for rho1; rho2 must vanish on it widened by two lattice steps.
    const auto k_lo = static_cast<std::size_t>(std::ceil(2.0 * a / step - 1e-9));
    const auto k_hi = static_cast<std::size_t>(std::floor(2.0 * b / step + 1e-9));
    require(k_hi > k_lo, ErrorCode::BandSelection, "band [2a, 2b] holds no lattice frequencies");
    const FreqGrid freqs{step, k_hi + 2};
    const CharFn cf1 = char_fn(rho1, freqs, threshold);
    const CharFn cf2 = char_fn(rho2, freqs, threshold);
    const std::size_t centre = freqs.half_count;
    const std::size_t widened_lo = k_lo >= 2 ? k_lo - 2 : 0;
    for (std::size_t k = widened_lo; k <= k_hi + 2; ++k) {
        for (std::size_t m : {centre + k, centre - k}) {
            if (std::abs(cf2.values[m]) > threshold) {
                raise(ErrorCode::BandSelection,
                      "band meets the support of the second characteristic function");
            }
            if (k >= k_lo && k <= k_hi && std::abs(cf1.values[m]) <= threshold) {
                raise(ErrorCode::BandSelection,
                      "band leaves the support of the first characteristic function");
            }
        }
    }

    const auto [f1, f2] = witness_states(a, b, grid);
    const auto p1 = position_distribution(MixedState::pure(f1));
    const auto p2 = position_distribution(MixedState::pure(f2));
    SeparationReport report{};
    report.a = a;
    report.b = b;
    report.threshold = threshold;
    report.tv_under_rho1 = total_variation(convolve(p1, rho1, Boundary::Periodic),
                                           convolve(p2, rho1, Boundary::Periodic));
    report.tv_under_rho2 = total_variation(convolve(p1, rho2, Boundary::Periodic),
                                           convolve(p2, rho2, Boundary::Periodic));
    report.pass = report.tv_under_rho2 <= report.tv_rho2_max &&
                  report.tv_under_rho1 >= report.tv_rho1_min;
    return report;
}

} // namespace covobs
