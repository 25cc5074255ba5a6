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

#include "covobs/fft.hpp"

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace covobs {

/**
 * Uniform periodic lattice standing in for the real line.
 *
 * Nodes are x_j = -L/2 + j dx, j = 0..n-1, with dx = L/n.  The conjugate
 * lattice has spacing dp = 2 pi / L and nodes p_k = (k - n/2) dp, so that
 * dx * dp * n = 2 pi.  The conjugate lattice is itself a GridSpec (of length
 * 2 pi n / L); conjugating twice returns the original length exactly.
 */
class GridSpec {
  public:
    GridSpec(std::size_t n_points, double length);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] double length() const noexcept { return length_; }
    [[nodiscard]] double dx() const noexcept { return length_ / static_cast<double>(n_); }
    [[nodiscard]] double dp() const noexcept { return 2.0 * std::numbers::pi / length_; }
    [[nodiscard]] double x(std::size_t j) const noexcept {
        return -0.5 * length_ + static_cast<double>(j) * dx();
    }
    [[nodiscard]] double x_min() const noexcept { return x(0); }
    [[nodiscard]] double x_max() const noexcept { return x(n_ - 1); }
    /// Largest representable frequency magnitude, pi / dx.
    [[nodiscard]] double nyquist() const noexcept { return std::numbers::pi / dx(); }
    [[nodiscard]] std::vector<double> nodes() const;

    /// Index of the node nearest to x (clamped to the lattice).
    [[nodiscard]] std::size_t nearest_index(double x) const noexcept;
    /// True when t is an integer multiple of dx (to 1e-9 dx).
    [[nodiscard]] bool is_aligned_shift(double t) const noexcept;

    [[nodiscard]] GridSpec conjugate() const;

    /// Same node count and lengths equal to 1e-12 relative.
    [[nodiscard]] bool matches(const GridSpec &other) const noexcept;

    friend bool operator==(const GridSpec &a, const GridSpec &b) noexcept { return a.matches(b); }

  private:
    GridSpec(std::size_t n_points, double length, double dual_length);

    std::size_t n_;
    double length_;
    double dual_length_;
};

/// Complex amplitudes sampled at the nodes of a grid.
class WaveFunction {
  public:
    WaveFunction(GridSpec grid, std::vector<Complex> values);

    [[nodiscard]] const GridSpec &grid() const noexcept { return grid_; }
    [[nodiscard]] std::span<const Complex> values() const noexcept { return values_; }
    [[nodiscard]] Complex operator[](std::size_t j) const noexcept { return values_[j]; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

    /// L2 norm on the grid: sqrt(sum |psi_j|^2 dx).
    [[nodiscard]] double norm() const;
    [[nodiscard]] WaveFunction normalized() const;
    [[nodiscard]] WaveFunction scaled(Complex factor) const;

  private:
    GridSpec grid_;
    std::vector<Complex> values_;
};

/// <a, b> = sum conj(a_j) b_j dx.
Complex inner_product(const WaveFunction &a, const WaveFunction &b);

/// Largest pointwise modulus of a - b.
double max_abs_difference(const WaveFunction &a, const WaveFunction &b);

/// Normalized Gaussian packet exp(-(x-center)^2 / (4 sigma^2) + i momentum x);
/// sigma is the position standard deviation of |psi|^2.
WaveFunction gaussian_packet(const GridSpec &grid, double center, double sigma,
                             double momentum = 0.0);

/// Hermite function of the given order, dilated by `scale` (scale 1 is the
/// harmonic-oscillator eigenfunction with position variance order + 1/2).
WaveFunction hermite_function(const GridSpec &grid, unsigned order, double scale = 1.0);

/// Finite convex mixture sum_i w_i |phi_i><phi_i|.  Components are normalized
/// on construction; they need not be mutually orthogonal.
class MixedState {
  public:
    struct Component {
        double weight;
        WaveFunction state;
    };

    explicit MixedState(std::vector<Component> components);
    static MixedState pure(WaveFunction state);

    [[nodiscard]] std::span<const Component> components() const noexcept { return components_; }
    [[nodiscard]] const GridSpec &grid() const noexcept { return components_.front().state.grid(); }

  private:
    std::vector<Component> components_;
};

// Unitary actions of the translation, boost and dilation groups and the
// Fourier-Plancherel transform.  Conventions:
//   fourier(psi)(p) = (2 pi)^{-1/2} sum_j psi(x_j) exp(-i p x_j) dx,
// which gives fourier(translate(psi, q)) == boost(fourier(psi), -q).

/// [U(q) psi](x) = psi(x - q).  Exact index shift when q is a multiple of dx,
/// spectral phase multiply otherwise.  Requires |q| < L/4.
WaveFunction translate(const WaveFunction &psi, double q);

/// [V(p) psi](x) = exp(i p x) psi(x).  Raises Aliasing when the shifted
/// momentum content would leave (-pi/dx, pi/dx).
WaveFunction boost(const WaveFunction &psi, double p);

/// [A_t(a) psi](x) = a^{-1/2} psi(a^{-1}(x - t) + t), evaluated with the
/// band-limited interpolant of psi.  Requires a in [1/8, 8].
WaveFunction dilate(const WaveFunction &psi, double a, double t);

/// Fourier-Plancherel transform onto grid.conjugate().
WaveFunction fourier(const WaveFunction &psi);
WaveFunction inverse_fourier(const WaveFunction &psi_hat);

/// Smallest interval [lo, hi] of grid coordinates outside which |psi| stays
/// below `relative` * max |psi|.
struct Extent {
    double lo;
    double hi;
};
Extent significant_extent(const WaveFunction &psi, double relative = 1e-10);

/// Evaluates the trigonometric interpolant of `samples` (taken on `grid`) at
/// arbitrary coordinates.  Periodic with period grid.length().
std::vector<Complex> bandlimited_interpolate(const GridSpec &grid,
                                             std::span<const Complex> samples,
                                             std::span<const double> points);

} // namespace covobs
