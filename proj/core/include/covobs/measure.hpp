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

#include <optional>
#include <span>
#include <vector>

namespace covobs {

struct Atom {
    double location;
    double weight;
};

struct Interval {
    double lo;
    double hi;
    [[nodiscard]] double width() const noexcept { return hi - lo; }
};

/// How density parts behave at the ends of the grid.  Linear treats the grid
/// as a window onto the real line and refuses to lose mass; Periodic treats
/// it as the circle R / L Z.
enum class Boundary { Linear, Periodic };

/**
 * Probability measure on the line: a density part sampled on a grid plus a
 * finite list of atoms.
 *
 * density[j] is the value of the density on the cell
 * [x_j - dx/2, x_j + dx/2), so the density part has mass sum density * dx.
 * Atoms are kept sorted by location and merged when they coincide.
 */
class Measure1D {
  public:
    Measure1D(std::optional<GridSpec> grid, std::vector<double> density,
              std::vector<Atom> atoms);

    static Measure1D from_density(GridSpec grid, std::vector<double> density);
    static Measure1D from_atoms(std::vector<Atom> atoms);

    [[nodiscard]] const std::optional<GridSpec> &grid() const noexcept { return grid_; }
    [[nodiscard]] std::span<const double> density() const noexcept { return density_; }
    [[nodiscard]] std::span<const Atom> atoms() const noexcept { return atoms_; }
    [[nodiscard]] bool has_density() const noexcept { return !density_.empty(); }

    [[nodiscard]] double density_mass() const;
    [[nodiscard]] double atom_mass() const;
    [[nodiscard]] double total_mass() const { return density_mass() + atom_mass(); }
    [[nodiscard]] double mean() const;
    [[nodiscard]] double variance() const;

    /// Smallest closed interval holding every nonzero cell and every atom.
    [[nodiscard]] Interval support_hull() const;

  private:
    std::optional<GridSpec> grid_;
    std::vector<double> density_;
    std::vector<Atom> atoms_;
};

struct WeightedMeasure {
    double weight;
    Measure1D measure;
};

/// N(mean, sigma^2) sampled at the nodes.  Requires mean +- 8 sigma inside
/// the grid and sigma >= dx.
Measure1D make_gaussian(double mean, double sigma, const GridSpec &grid);
Measure1D make_dirac(double t);
/// Uniform law on [center - width/2, center + width/2] with exact cell
/// averages, so a box whose edges sit on cell boundaries is represented
/// exactly.
Measure1D make_uniform(double center, double width, const GridSpec &grid);
/// Convex combination; weights must be positive and sum to 1.
Measure1D mix(std::span<const WeightedMeasure> parts);

/// Law of X + Y for independent X ~ mu and Y ~ rho.
Measure1D convolve(const Measure1D &mu, const Measure1D &rho,
                   Boundary boundary = Boundary::Linear);

/// Law of X + t.  Atoms move exactly, grid-aligned density shifts are index
/// shifts, other shifts are band-limited unless that creates negative values,
/// in which case a mass-conserving linear remap is used.
Measure1D shift(const Measure1D &rho, double t, Boundary boundary = Boundary::Linear);

/// Law of s X for s > 0 (conservative remap of the density part).
Measure1D scale(const Measure1D &rho, double s);

/// The mass of closed intervals, with the density CDF precomputed.
class MassProfile {
  public:
    explicit MassProfile(const Measure1D &rho);

    /// rho([lo, hi]), atoms on the boundary included.
    [[nodiscard]] double mass(double lo, double hi) const;
    [[nodiscard]] double cdf_density(double y) const;

  private:
    std::optional<GridSpec> grid_;
    std::vector<double> density_;
    std::vector<double> prefix_;
    std::vector<double> atom_locations_;
    std::vector<double> atom_prefix_;
};

/// rho(I_{x;r}) with I_{x;r} = [x - r/2, x + r/2].
double interval_mass(const Measure1D &rho, double x, double r);

/// g(alpha) = sup_x rho(I_{x;alpha}) over grid-node centres and the centres
/// that put an atom on (or just inside) a window edge.
double sliding_sup(const Measure1D &rho, double alpha);

/// Symmetric frequency lattice xi_m = (m - K) * step, m = 0..2K.
struct FreqGrid {
    double step;
    std::size_t half_count;

    [[nodiscard]] std::size_t size() const noexcept { return 2 * half_count + 1; }
    [[nodiscard]] double xi(std::size_t m) const noexcept {
        return (static_cast<double>(m) - static_cast<double>(half_count)) * step;
    }
    [[nodiscard]] double xi_max() const noexcept {
        return static_cast<double>(half_count) * step;
    }

    /// K = n_xi / 2 and step = xi_max / K; requires n_xi >= 64.
    static FreqGrid uniform(double xi_max, std::size_t n_xi);
    /// Multiples of the grid's dual spacing 2 pi / L up to xi_max.
    static FreqGrid lattice(const GridSpec &grid, double xi_max);
};

inline constexpr double kDefaultSupportThreshold = 1e-6;

struct CharFn {
    std::vector<double> freqs;
    std::vector<Complex> values;
    double threshold = kDefaultSupportThreshold;
};

/// rho^(xi) = sum_j density_j exp(-i xi x_j) dx + sum_k w_k exp(-i xi t_k).
CharFn char_fn(const Measure1D &rho, const FreqGrid &freqs,
               double threshold = kDefaultSupportThreshold);
CharFn char_fn(const Measure1D &rho, double xi_max, std::size_t n_xi,
               double threshold = kDefaultSupportThreshold);

/// Maximal runs of the frequency grid where |rho^| > threshold, made
/// symmetric under xi -> -xi and merged.
std::vector<Interval> char_support(const CharFn &cf);

/// d rho(x) = |f(x)|^2 dx with f the inverse Fourier-Plancherel transform of
/// a^{-1/2} chi_[-a/2, a/2] sampled on the dual lattice.  The measure lives
/// on the circle of the grid (its tails are periodized); its characteristic
/// function on the dual lattice vanishes outside [-a, a].
Measure1D sinc_measure(double a, const GridSpec &grid);

/// Half the L1 distance of the density parts plus half the atom-weight
/// differences.
double total_variation(const Measure1D &a, const Measure1D &b);

/// Largest pointwise density difference together with atom-weight
/// differences; used by the covariance batteries.
double sup_difference(const Measure1D &a, const Measure1D &b);

} // namespace covobs
