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

#include "covobs/grid.hpp"

#include "covobs/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace covobs {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

double sign_of_index(std::size_t j) { return (j % 2 == 0) ? 1.0 : -1.0; }

} // namespace

// ---------------------------------------------------------------- GridSpec

GridSpec::GridSpec(std::size_t n_points, double length)
    : GridSpec(n_points, length, kTwoPi * static_cast<double>(n_points) / length) {}

GridSpec::GridSpec(std::size_t n_points, double length, double dual_length)
    : n_(n_points), length_(length), dual_length_(dual_length) {
    require(n_points >= 8 && is_power_of_two(n_points), ErrorCode::InvalidArgument,
            "grid size must be a power of two >= 8, got " + std::to_string(n_points));
    require(std::isfinite(length) && length > 0.0, ErrorCode::InvalidArgument,
            "grid length must be positive and finite");
}

std::vector<double> GridSpec::nodes() const {
    std::vector<double> out(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        out[j] = x(j);
    }
    return out;
}

std::size_t GridSpec::nearest_index(double value) const noexcept {
    const double pos = std::round((value - x_min()) / dx());
    if (!(pos > 0.0)) {
        return 0;
    }
    return std::min(static_cast<std::size_t>(pos), n_ - 1);
}

bool GridSpec::is_aligned_shift(double t) const noexcept {
    const double steps = t / dx();
    return std::abs(steps - std::round(steps)) < 1e-9;
}

GridSpec GridSpec::conjugate() const { return GridSpec(n_, dual_length_, length_); }

bool GridSpec::matches(const GridSpec &other) const noexcept {
    return n_ == other.n_ &&
           std::abs(length_ - other.length_) <= 1e-12 * std::max(length_, other.length_);
}

// ------------------------------------------------------------ WaveFunction

WaveFunction::WaveFunction(GridSpec grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
    require(values_.size() == grid_.size(), ErrorCode::InvalidArgument,
            "wavefunction length does not match its grid");
}

double WaveFunction::norm() const {
    double sum = 0.0;
    for (const auto &v : values_) {
        sum += std::norm(v);
    }
    return std::sqrt(sum * grid_.dx());
}

WaveFunction WaveFunction::normalized() const {
    const double n = norm();
    require(n > 0.0, ErrorCode::InvalidArgument, "cannot normalize the zero vector");
    return scaled(1.0 / n);
}

WaveFunction WaveFunction::scaled(Complex factor) const {
    std::vector<Complex> out(values_);
    for (auto &v : out) {
        v *= factor;
    }
    return {grid_, std::move(out)};
}

Complex inner_product(const WaveFunction &a, const WaveFunction &b) {
    require(a.grid() == b.grid(), ErrorCode::InvalidArgument, "inner product across grids");
    Complex sum{0.0, 0.0};
    for (std::size_t j = 0; j < a.size(); ++j) {
        sum += std::conj(a[j]) * b[j];
    }
    return sum * a.grid().dx();
}

double max_abs_difference(const WaveFunction &a, const WaveFunction &b) {
    require(a.size() == b.size(), ErrorCode::InvalidArgument, "size mismatch");
    double worst = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        worst = std::max(worst, std::abs(a[j] - b[j]));
    }
    return worst;
}

WaveFunction gaussian_packet(const GridSpec &grid, double center, double sigma, double momentum) {
    require(sigma > 0.0, ErrorCode::InvalidArgument, "gaussian packet needs sigma > 0");
    std::vector<Complex> values(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double u = grid.x(j) - center;
        values[j] = std::exp(-u * u / (4.0 * sigma * sigma)) *
                    std::polar(1.0, momentum * grid.x(j));
    }
    return WaveFunction(grid, std::move(values)).normalized();
}

WaveFunction hermite_function(const GridSpec &grid, unsigned order, double scale) {
    require(scale > 0.0, ErrorCode::InvalidArgument, "hermite scale must be positive");
    std::vector<Complex> values(grid.size());
    const double norm0 = std::pow(std::numbers::pi, -0.25) / std::sqrt(scale);
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double u = grid.x(j) / scale;
        double prev = 0.0;
        double cur = norm0 * std::exp(-0.5 * u * u);
        for (unsigned k = 0; k < order; ++k) {
            const double next = std::sqrt(2.0 / (k + 1.0)) * u * cur -
                                std::sqrt(static_cast<double>(k) / (k + 1.0)) * prev;
            prev = cur;
            cur = next;
        }
        values[j] = cur;
    }
    return WaveFunction(grid, std::move(values)).normalized();
}

// -------------------------------------------------------------- MixedState

MixedState::MixedState(std::vector<Component> components) : components_(std::move(components)) {
    require(!components_.empty(), ErrorCode::InvalidArgument, "mixed state needs a component");
    double total = 0.0;
    for (auto &c : components_) {
        require(c.weight > 0.0 && c.weight <= 1.0, ErrorCode::NonConvexWeights,
                "mixture weights must lie in (0, 1]");
        require(c.state.grid() == components_.front().state.grid(), ErrorCode::InvalidArgument,
                "mixture components live on different grids");
        c.state = c.state.normalized();
        total += c.weight;
    }
    require(std::abs(total - 1.0) <= 1e-12, ErrorCode::NonConvexWeights,
            "mixture weights sum to " + std::to_string(total));
}

MixedState MixedState::pure(WaveFunction state) {
    std::vector<Component> one;
    one.push_back({1.0, std::move(state)});
    return MixedState(std::move(one));
}

// ------------------------------------------------------------- transforms

WaveFunction fourier(const WaveFunction &psi) {
    const auto &grid = psi.grid();
    const std::size_t n = grid.size();
    std::vector<Complex> z(n);
    for (std::size_t j = 0; j < n; ++j) {
        z[j] = sign_of_index(j) * psi[j];
    }
    auto spectrum = fft::forward(z);
    const double scale = grid.dx() / std::sqrt(kTwoPi);
    for (std::size_t k = 0; k < n; ++k) {
        spectrum[k] *= scale * sign_of_index(k);
    }
    return {grid.conjugate(), std::move(spectrum)};
}

WaveFunction inverse_fourier(const WaveFunction &psi_hat) {
    const auto &dual = psi_hat.grid();
    const std::size_t n = dual.size();
    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        z[k] = sign_of_index(k) * psi_hat[k];
    }
    auto values = fft::backward(z);
    // dual.dx() is the momentum step of the original grid.
    const double scale = dual.dx() / std::sqrt(kTwoPi);
    for (std::size_t j = 0; j < n; ++j) {
        values[j] *= scale * sign_of_index(j);
    }
    return {dual.conjugate(), std::move(values)};
}

Extent significant_extent(const WaveFunction &psi, double relative) {
    double peak = 0.0;
    for (const auto &v : psi.values()) {
        peak = std::max(peak, std::abs(v));
    }
    const double cut = relative * peak;
    std::size_t first = psi.size();
    std::size_t last = 0;
    for (std::size_t j = 0; j < psi.size(); ++j) {
        if (std::abs(psi[j]) > cut) {
            first = std::min(first, j);
            last = j;
        }
    }
    if (first == psi.size()) {
        return {0.0, 0.0};
    }
    return {psi.grid().x(first), psi.grid().x(last)};
}

std::vector<Complex> bandlimited_interpolate(const GridSpec &grid,
                                             std::span<const Complex> samples,
                                             std::span<const double> points) {
    require(samples.size() == grid.size(), ErrorCode::InvalidArgument,
            "sample count does not match grid");
    const WaveFunction as_wave(grid, std::vector<Complex>(samples.begin(), samples.end()));
    const auto spectrum = fourier(as_wave);
    const GridSpec dual = spectrum.grid();
    const std::size_t n = grid.size();
    const double coeff = grid.dp() / std::sqrt(kTwoPi);

    std::vector<Complex> out(points.size());
    constexpr std::size_t kReseed = 64;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double y = points[i];
        const Complex step = std::polar(1.0, grid.dp() * y);
        Complex sum{0.0, 0.0};
        Complex phase{};
        for (std::size_t k = 0; k < n; ++k) {
            if (k % kReseed == 0) {
                phase = std::polar(1.0, dual.x(k) * y);
            }
            sum += spectrum[k] * phase;
            phase *= step;
        }
        out[i] = coeff * sum;
    }
    return out;
}

// ------------------------------------------------------------ group actions

WaveFunction translate(const WaveFunction &psi, double q) {
    const auto &grid = psi.grid();
    require(std::abs(q) < 0.25 * grid.length(), ErrorCode::ShiftTooLarge,
            "translation " + std::to_string(q) + " must stay below L/4");
    const std::size_t n = grid.size();
    if (grid.is_aligned_shift(q)) {
        const auto steps = static_cast<long long>(std::llround(q / grid.dx()));
        const auto ln = static_cast<long long>(n);
        std::vector<Complex> out(n);
        for (std::size_t j = 0; j < n; ++j) {
            const long long src = ((static_cast<long long>(j) - steps) % ln + ln) % ln;
            out[j] = psi[static_cast<std::size_t>(src)];
        }
        return {grid, std::move(out)};
    }
    auto spectrum = fourier(psi);
    std::vector<Complex> shifted(spectrum.values().begin(), spectrum.values().end());
    for (std::size_t k = 0; k < n; ++k) {
        shifted[k] *= std::polar(1.0, -spectrum.grid().x(k) * q);
    }
    return inverse_fourier(WaveFunction(spectrum.grid(), std::move(shifted)));
}

WaveFunction boost(const WaveFunction &psi, double p) {
    const auto &grid = psi.grid();
    if (p != 0.0) {
        const auto band = significant_extent(fourier(psi));
        const double limit = grid.nyquist();
        require(band.lo + p > -limit && band.hi + p < limit, ErrorCode::Aliasing,
                "boost by " + std::to_string(p) + " pushes momentum content past pi/dx");
    }
    std::vector<Complex> out(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        out[j] = psi[j] * std::polar(1.0, p * grid.x(j));
    }
    return {grid, std::move(out)};
}

WaveFunction dilate(const WaveFunction &psi, double a, double t) {
    require(a >= 0.125 && a <= 8.0, ErrorCode::InvalidArgument,
            "dilation factor must lie in [1/8, 8]");
    const auto &grid = psi.grid();
    const auto support = significant_extent(psi);
    const double lo = a * (support.lo - t) + t;
    const double hi = a * (support.hi - t) + t;
    require(lo >= grid.x_min() && hi <= grid.x_max(), ErrorCode::SupportOverflow,
            "dilated support leaves the grid");
    const auto band = significant_extent(fourier(psi));
    require(std::max(std::abs(band.lo), std::abs(band.hi)) / a < grid.nyquist(),
            ErrorCode::SupportOverflow, "dilated momentum content exceeds pi/dx");

    std::vector<double> preimage(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        preimage[j] = (grid.x(j) - t) / a + t;
    }
    auto values = bandlimited_interpolate(grid, psi.values(), preimage);
    const double scale = 1.0 / std::sqrt(a);
    // psi lives on the line; preimages off the lattice would otherwise read
    // its periodic images.
    const double reach = 0.5 * grid.length();
    for (std::size_t j = 0; j < grid.size(); ++j) {
        values[j] = std::abs(preimage[j]) <= reach ? values[j] * scale : Complex{0.0, 0.0};
    }
    WaveFunction out(grid, std::move(values));
    const double before = psi.norm();
    require(std::abs(out.norm() - before) <= 1e-6 * before, ErrorCode::SupportOverflow,
            "dilation picked up periodic images; enlarge the grid");
    return out;
}

} // namespace covobs
