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

#include "covobs/measure.hpp"

#include "covobs/error.hpp"
#include "covobs/log.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

namespace covobs {
namespace {

constexpr double kMassTolerance = 1e-9;
constexpr double kAtomMergeTolerance = 1e-12;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double location_slack(double value) { return 1e-12 * std::max(1.0, std::abs(value)); }

std::vector<Atom> normalize_atoms(std::vector<Atom> atoms) {
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom &a, const Atom &b) { return a.location < b.location; });
    std::vector<Atom> merged;
    for (const auto &atom : atoms) {
        if (atom.weight == 0.0) {
            continue;
        }
        if (!merged.empty() &&
            std::abs(merged.back().location - atom.location) <= kAtomMergeTolerance) {
            merged.back().weight += atom.weight;
        } else {
            merged.push_back(atom);
        }
    }
    return merged;
}

/// Zeroes round-off negatives; reports whether any value was genuinely
/// negative (below -tol * peak).
bool clean_negatives(std::vector<double> &values, double tol) {
    double peak = 0.0;
    for (double v : values) {
        peak = std::max(peak, std::abs(v));
    }
    bool genuine = false;
    for (double &v : values) {
        if (v < 0.0) {
            if (v < -tol * peak) {
                genuine = true;
            }
            v = 0.0;
        }
    }
    return genuine;
}

double sum_of(std::span<const double> values) {
    return std::accumulate(values.begin(), values.end(), 0.0);
}

const GridSpec &common_grid(const Measure1D &a, const Measure1D &b) {
    if (a.has_density() && b.has_density()) {
        require(*a.grid() == *b.grid(), ErrorCode::InvalidArgument,
                "density parts live on different grids");
    }
    return a.has_density() ? *a.grid() : *b.grid();
}

// Signed DFT frequency (angular, per unit length) of bin k on an m-point
// lattice with spacing dx.
double dft_frequency(std::size_t k, std::size_t m, double dx) {
    const auto sk = static_cast<double>(k);
    const auto sm = static_cast<double>(m);
    const double signed_k = (k <= m / 2) ? sk : sk - sm;
    return kTwoPi * signed_k / (sm * dx);
}

std::vector<double> spectral_shift(std::span<const double> values, double t, double dx) {
    const std::size_t m = values.size();
    std::vector<Complex> buffer(values.begin(), values.end());
    auto spectrum = fft::forward(buffer);
    for (std::size_t k = 0; k < m; ++k) {
        const double w = dft_frequency(k, m, dx);
        if (2 * k == m) {
            spectrum[k] *= std::cos(w * t); // Nyquist bin stays real
        } else {
            spectrum[k] *= std::polar(1.0, -w * t);
        }
    }
    const auto back = fft::backward(spectrum);
    std::vector<double> out(m);
    for (std::size_t j = 0; j < m; ++j) {
        out[j] = back[j].real() / static_cast<double>(m);
    }
    return out;
}

// out[j] = in[j - steps] on an m-point lattice, either circular or zero-fill.
std::vector<double> index_shift(std::span<const double> values, long long steps, bool circular) {
    const auto m = static_cast<long long>(values.size());
    std::vector<double> out(values.size(), 0.0);
    for (long long j = 0; j < m; ++j) {
        long long src = j - steps;
        if (circular) {
            src = ((src % m) + m) % m;
        } else if (src < 0 || src >= m) {
            continue;
        }
        out[static_cast<std::size_t>(j)] = values[static_cast<std::size_t>(src)];
    }
    return out;
}

// Mass-conserving linear remap for shifts by (steps + frac) cells.
std::vector<double> remap_shift(std::span<const double> values, double t, double dx,
                                bool circular) {
    const double cells = t / dx;
    const double whole = std::floor(cells);
    const double frac = cells - whole;
    const auto base = static_cast<long long>(whole);
    const auto a = index_shift(values, base, circular);
    const auto b = index_shift(values, base + 1, circular);
    std::vector<double> out(values.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = (1.0 - frac) * a[j] + frac * b[j];
    }
    return out;
}

/// Shifts an n-point density on `grid` by t.  Linear boundaries work on a
/// 2n zero-padded buffer and report the mass pushed off the grid.
std::vector<double> shift_density(const GridSpec &grid, std::span<const double> density,
                                  double t, Boundary boundary, double *lost_mass) {
    const std::size_t n = grid.size();
    const double dx = grid.dx();
    const bool circular = boundary == Boundary::Periodic;
    *lost_mass = 0.0;

    if (grid.is_aligned_shift(t)) {
        const auto steps = static_cast<long long>(std::llround(t / dx));
        auto out = index_shift(density, steps, circular);
        if (!circular) {
            *lost_mass = (sum_of(density) - sum_of(out)) * dx;
        }
        return out;
    }

    std::vector<double> work;
    std::size_t offset = 0;
    if (circular) {
        work.assign(density.begin(), density.end());
    } else {
        work.assign(2 * n, 0.0);
        offset = n / 2;
        std::copy(density.begin(), density.end(), work.begin() + static_cast<long>(offset));
    }
    auto shifted = spectral_shift(work, t, dx);
    if (clean_negatives(shifted, 1e-10)) {
        log_note("band-limited shift of a non-smooth density went negative; "
                 "using conservative linear remap");
        shifted = remap_shift(work, t, dx, circular);
    }
    std::vector<double> out(shifted.begin() + static_cast<long>(offset),
                            shifted.begin() + static_cast<long>(offset + n));
    if (!circular) {
        *lost_mass = std::max(0.0, (sum_of(shifted) - sum_of(out)) * dx);
    }
    return out;
}

void add_scaled(std::vector<double> &target, std::span<const double> source, double weight) {
    for (std::size_t j = 0; j < target.size(); ++j) {
        target[j] += weight * source[j];
    }
}

} // namespace

// --------------------------------------------------------------- Measure1D

Measure1D::Measure1D(std::optional<GridSpec> grid, std::vector<double> density,
                     std::vector<Atom> atoms)
    : grid_(std::move(grid)), density_(std::move(density)),
      atoms_(normalize_atoms(std::move(atoms))) {
    if (!density_.empty()) {
        require(grid_.has_value(), ErrorCode::InvalidArgument, "density part needs a grid");
        require(density_.size() == grid_->size(), ErrorCode::InvalidArgument,
                "density length does not match its grid");
        for (double v : density_) {
            require(std::isfinite(v) && v >= 0.0, ErrorCode::InvalidArgument,
                    "density must be finite and nonnegative");
        }
        if (std::all_of(density_.begin(), density_.end(), [](double v) { return v == 0.0; })) {
            density_.clear();
        }
    }
    for (const auto &atom : atoms_) {
        require(std::isfinite(atom.location) && atom.weight > 0.0 && atom.weight <= 1.0 + 1e-12,
                ErrorCode::InvalidArgument, "atom weights must lie in (0, 1]");
    }
    const double mass = total_mass();
    require(std::abs(mass - 1.0) <= kMassTolerance, ErrorCode::InvalidArgument,
            "measure mass is " + std::to_string(mass) + ", expected 1");
}

Measure1D Measure1D::from_density(GridSpec grid, std::vector<double> density) {
    return {std::move(grid), std::move(density), {}};
}

Measure1D Measure1D::from_atoms(std::vector<Atom> atoms) {
    return {std::nullopt, {}, std::move(atoms)};
}

double Measure1D::density_mass() const {
    if (density_.empty()) {
        return 0.0;
    }
    return sum_of(density_) * grid_->dx();
}

double Measure1D::atom_mass() const {
    double total = 0.0;
    for (const auto &atom : atoms_) {
        total += atom.weight;
    }
    return total;
}

double Measure1D::mean() const {
    double m = 0.0;
    if (!density_.empty()) {
        for (std::size_t j = 0; j < density_.size(); ++j) {
            m += grid_->x(j) * density_[j];
        }
        m *= grid_->dx();
    }
    for (const auto &atom : atoms_) {
        m += atom.location * atom.weight;
    }
    return m / total_mass();
}

double Measure1D::variance() const {
    const double mu = mean();
    double v = 0.0;
    if (!density_.empty()) {
        for (std::size_t j = 0; j < density_.size(); ++j) {
            const double u = grid_->x(j) - mu;
            v += u * u * density_[j];
        }
        v *= grid_->dx();
    }
    for (const auto &atom : atoms_) {
        const double u = atom.location - mu;
        v += u * u * atom.weight;
    }
    return v / total_mass();
}

Interval Measure1D::support_hull() const {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    if (!density_.empty()) {
        const double half = 0.5 * grid_->dx();
        for (std::size_t j = 0; j < density_.size(); ++j) {
            if (density_[j] > 0.0) {
                lo = std::min(lo, grid_->x(j) - half);
                hi = std::max(hi, grid_->x(j) + half);
            }
        }
    }
    for (const auto &atom : atoms_) {
        lo = std::min(lo, atom.location);
        hi = std::max(hi, atom.location);
    }
    return {lo, hi};
}

// ------------------------------------------------------------ constructors

Measure1D make_gaussian(double mean, double sigma, const GridSpec &grid) {
    require(sigma > 0.0, ErrorCode::InvalidArgument, "gaussian sigma must be positive");
    require(mean - 8.0 * sigma >= grid.x_min() && mean + 8.0 * sigma <= grid.x_max(),
            ErrorCode::GridTooSmall, "grid does not cover mean +- 8 sigma");
    require(sigma >= grid.dx(), ErrorCode::GridTooSmall, "grid spacing does not resolve sigma");
    std::vector<double> density(grid.size());
    const double norm = 1.0 / (sigma * std::sqrt(kTwoPi));
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double u = (grid.x(j) - mean) / sigma;
        density[j] = norm * std::exp(-0.5 * u * u);
    }
    return Measure1D::from_density(grid, std::move(density));
}

Measure1D make_dirac(double t) { return Measure1D::from_atoms({{t, 1.0}}); }

Measure1D make_uniform(double center, double width, const GridSpec &grid) {
    require(width > 0.0, ErrorCode::InvalidArgument, "uniform width must be positive");
    const double lo = center - 0.5 * width;
    const double hi = center + 0.5 * width;
    const double dx = grid.dx();
    require(lo >= grid.x_min() - 0.5 * dx && hi <= grid.x_max() + 0.5 * dx,
            ErrorCode::GridTooSmall, "uniform support leaves the grid");
    std::vector<double> density(grid.size(), 0.0);
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double cell_lo = grid.x(j) - 0.5 * dx;
        const double cell_hi = grid.x(j) + 0.5 * dx;
        const double overlap = std::min(cell_hi, hi) - std::max(cell_lo, lo);
        if (overlap > 0.0) {
            density[j] = overlap / (dx * width);
        }
    }
    return Measure1D::from_density(grid, std::move(density));
}

Measure1D mix(std::span<const WeightedMeasure> parts) {
    require(!parts.empty(), ErrorCode::NonConvexWeights, "empty mixture");
    double total = 0.0;
    std::optional<GridSpec> grid;
    for (const auto &part : parts) {
        require(part.weight > 0.0, ErrorCode::NonConvexWeights, "mixture weights must be positive");
        total += part.weight;
        if (part.measure.has_density()) {
            if (grid) {
                require(*grid == *part.measure.grid(), ErrorCode::InvalidArgument,
                        "mixture components live on different grids");
            } else {
                grid = part.measure.grid();
            }
        }
    }
    require(std::abs(total - 1.0) <= 1e-12, ErrorCode::NonConvexWeights,
            "mixture weights sum to " + std::to_string(total));
    std::vector<double> density;
    if (grid) {
        density.assign(grid->size(), 0.0);
    }
    std::vector<Atom> atoms;
    for (const auto &part : parts) {
        if (part.measure.has_density()) {
            add_scaled(density, part.measure.density(), part.weight);
        }
        for (const auto &atom : part.measure.atoms()) {
            atoms.push_back({atom.location, part.weight * atom.weight});
        }
    }
    return {grid, std::move(density), std::move(atoms)};
}

// -------------------------------------------------------------- operations

Measure1D convolve(const Measure1D &mu, const Measure1D &rho, Boundary boundary) {
    std::vector<Atom> atoms;
    for (const auto &a : mu.atoms()) {
        for (const auto &b : rho.atoms()) {
            atoms.push_back({a.location + b.location, a.weight * b.weight});
        }
    }
    if (!mu.has_density() && !rho.has_density()) {
        return Measure1D::from_atoms(std::move(atoms));
    }

    const GridSpec &grid = common_grid(mu, rho);
    const std::size_t n = grid.size();
    const double dx = grid.dx();
    std::vector<double> density(n, 0.0);
    double lost = 0.0;

    if (mu.has_density() && rho.has_density()) {
        if (boundary == Boundary::Periodic) {
            // b'[l] = b[l + n/2] re-centres the kernel so that sums of node
            // coordinates land back on nodes.
            std::vector<double> kernel(n);
            for (std::size_t l = 0; l < n; ++l) {
                kernel[l] = rho.density()[(l + n / 2) % n];
            }
            density = fft::circular_convolution(mu.density(), kernel);
            for (auto &v : density) {
                v *= dx;
            }
        } else {
            std::vector<double> a(2 * n, 0.0);
            std::vector<double> b(2 * n, 0.0);
            std::copy(mu.density().begin(), mu.density().end(), a.begin());
            std::copy(rho.density().begin(), rho.density().end(), b.begin());
            const auto full = fft::circular_convolution(a, b);
            double inside = 0.0;
            for (std::size_t m = 0; m < n; ++m) {
                density[m] = full[m + n / 2] * dx;
                inside += density[m];
            }
            lost += std::max(0.0, mu.density_mass() * rho.density_mass() - inside * dx);
        }
    }

    auto smear_by_atoms = [&](const Measure1D &dense, const Measure1D &atomic) {
        if (!dense.has_density()) {
            return;
        }
        for (const auto &atom : atomic.atoms()) {
            double lost_here = 0.0;
            const auto shifted = shift_density(grid, dense.density(), atom.location, boundary,
                                               &lost_here);
            add_scaled(density, shifted, atom.weight);
            lost += atom.weight * lost_here;
        }
    };
    smear_by_atoms(mu, rho);
    smear_by_atoms(rho, mu);

    clean_negatives(density, 1e-9);
    require(lost <= kMassTolerance, ErrorCode::SupportOverflow,
            "convolution pushes mass " + std::to_string(lost) + " off the grid");
    return {grid, std::move(density), std::move(atoms)};
}

Measure1D shift(const Measure1D &rho, double t, Boundary boundary) {
    std::vector<Atom> atoms(rho.atoms().begin(), rho.atoms().end());
    for (auto &atom : atoms) {
        atom.location += t;
    }
    if (!rho.has_density()) {
        return Measure1D::from_atoms(std::move(atoms));
    }
    double lost = 0.0;
    auto density = shift_density(*rho.grid(), rho.density(), t, boundary, &lost);
    require(lost <= kMassTolerance, ErrorCode::SupportOverflow, "shift pushes mass off the grid");
    return {rho.grid(), std::move(density), std::move(atoms)};
}

Measure1D scale(const Measure1D &rho, double s) {
    require(s > 0.0 && std::isfinite(s), ErrorCode::InvalidArgument, "scale factor must be > 0");
    std::vector<Atom> atoms(rho.atoms().begin(), rho.atoms().end());
    for (auto &atom : atoms) {
        atom.location *= s;
    }
    if (!rho.has_density()) {
        return Measure1D::from_atoms(std::move(atoms));
    }
    const GridSpec &grid = *rho.grid();
    const Measure1D dense_only = Measure1D::from_density(
        grid, [&] {
            std::vector<double> d(rho.density().begin(), rho.density().end());
            const double m = rho.density_mass();
            for (auto &v : d) {
                v /= m;
            }
            return d;
        }());
    const MassProfile profile(dense_only);
    const double dx = grid.dx();
    const double dense_mass = rho.density_mass();
    std::vector<double> density(grid.size());
    double captured = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double lo = (grid.x(j) - 0.5 * dx) / s;
        const double hi = (grid.x(j) + 0.5 * dx) / s;
        const double cell = profile.cdf_density(hi) - profile.cdf_density(lo);
        density[j] = dense_mass * cell / dx;
        captured += cell;
    }
    require(1.0 - captured <= kMassTolerance, ErrorCode::SupportOverflow,
            "scaled density leaves the grid");
    return {grid, std::move(density), std::move(atoms)};
}

// ------------------------------------------------------------- MassProfile

MassProfile::MassProfile(const Measure1D &rho)
    : grid_(rho.grid()), density_(rho.density().begin(), rho.density().end()) {
    if (!density_.empty()) {
        prefix_.assign(density_.size() + 1, 0.0);
        const double dx = grid_->dx();
        for (std::size_t j = 0; j < density_.size(); ++j) {
            prefix_[j + 1] = prefix_[j] + density_[j] * dx;
        }
    }
    atom_prefix_.push_back(0.0);
    for (const auto &atom : rho.atoms()) {
        atom_locations_.push_back(atom.location);
        atom_prefix_.push_back(atom_prefix_.back() + atom.weight);
    }
}

double MassProfile::cdf_density(double y) const {
    if (density_.empty()) {
        return 0.0;
    }
    const double dx = grid_->dx();
    const double u = (y - (grid_->x_min() - 0.5 * dx)) / dx;
    if (!(u > 0.0)) {
        return 0.0;
    }
    const auto n = static_cast<double>(density_.size());
    if (u >= n) {
        return prefix_.back();
    }
    const auto j = static_cast<std::size_t>(u);
    return prefix_[j] + density_[j] * (u - static_cast<double>(j)) * dx;
}

double MassProfile::mass(double lo, double hi) const {
    if (hi < lo) {
        return 0.0;
    }
    double total = cdf_density(hi) - cdf_density(lo);
    if (!atom_locations_.empty()) {
        const auto first = std::lower_bound(atom_locations_.begin(), atom_locations_.end(),
                                            lo - location_slack(lo));
        const auto last = std::upper_bound(atom_locations_.begin(), atom_locations_.end(),
                                           hi + location_slack(hi));
        total += atom_prefix_[static_cast<std::size_t>(last - atom_locations_.begin())] -
                 atom_prefix_[static_cast<std::size_t>(first - atom_locations_.begin())];
    }
    return std::max(0.0, total);
}

double interval_mass(const Measure1D &rho, double x, double r) {
    require(r > 0.0, ErrorCode::InvalidArgument, "interval width must be positive");
    return MassProfile(rho).mass(x - 0.5 * r, x + 0.5 * r);
}

double sliding_sup(const Measure1D &rho, double alpha) {
    require(alpha > 0.0, ErrorCode::InvalidArgument, "window width must be positive");
    const MassProfile profile(rho);
    const double half = 0.5 * alpha;
    double best = 0.0;
    auto consider = [&](double center) {
        best = std::max(best, profile.mass(center - half, center + half));
    };
    if (rho.has_density()) {
        const auto &grid = *rho.grid();
        for (std::size_t j = 0; j < grid.size(); ++j) {
            consider(grid.x(j));
        }
    }
    const double eta = rho.grid() ? rho.grid()->dx() / 16.0 : alpha * 1e-6;
    const double nudge = std::min(eta, 0.25 * alpha);
    for (const auto &atom : rho.atoms()) {
        consider(atom.location);
        consider(atom.location + half);
        consider(atom.location - half);
        consider(atom.location + half - nudge);
        consider(atom.location - half + nudge);
    }
    return std::min(best, 1.0);
}

// --------------------------------------------------- characteristic function

FreqGrid FreqGrid::uniform(double xi_max, std::size_t n_xi) {
    require(n_xi >= 64, ErrorCode::InvalidArgument, "need at least 64 frequencies");
    require(xi_max > 0.0, ErrorCode::InvalidArgument, "xi_max must be positive");
    const std::size_t half = n_xi / 2;
    return {xi_max / static_cast<double>(half), half};
}

FreqGrid FreqGrid::lattice(const GridSpec &grid, double xi_max) {
    require(xi_max > 0.0, ErrorCode::InvalidArgument, "xi_max must be positive");
    const double step = grid.dp();
    const auto half = static_cast<std::size_t>(std::floor(xi_max / step + 1e-9));
    require(half >= 1, ErrorCode::Resolution, "xi_max below one dual-lattice step");
    return {step, half};
}

CharFn char_fn(const Measure1D &rho, const FreqGrid &freqs, double threshold) {
    require(threshold > 0.0, ErrorCode::InvalidArgument, "support threshold must be positive");
    CharFn cf;
    cf.threshold = threshold;
    cf.freqs.resize(freqs.size());
    cf.values.assign(freqs.size(), Complex{0.0, 0.0});
    constexpr std::size_t kReseed = 64;
    for (std::size_t m = 0; m < freqs.size(); ++m) {
        const double xi = freqs.xi(m);
        cf.freqs[m] = xi;
        Complex sum{0.0, 0.0};
        if (rho.has_density()) {
            const auto &grid = *rho.grid();
            const auto density = rho.density();
            const Complex step = std::polar(1.0, -xi * grid.dx());
            Complex phase{};
            for (std::size_t j = 0; j < density.size(); ++j) {
                if (j % kReseed == 0) {
                    phase = std::polar(1.0, -xi * grid.x(j));
                }
                sum += density[j] * phase;
                phase *= step;
            }
            sum *= grid.dx();
        }
        for (const auto &atom : rho.atoms()) {
            sum += atom.weight * std::polar(1.0, -xi * atom.location);
        }
        cf.values[m] = sum;
    }
    return cf;
}

CharFn char_fn(const Measure1D &rho, double xi_max, std::size_t n_xi, double threshold) {
    return char_fn(rho, FreqGrid::uniform(xi_max, n_xi), threshold);
}

std::vector<Interval> char_support(const CharFn &cf) {
    std::vector<Interval> runs;
    const std::size_t m = cf.values.size();
    std::size_t j = 0;
    while (j < m) {
        if (std::abs(cf.values[j]) > cf.threshold) {
            std::size_t k = j;
            while (k + 1 < m && std::abs(cf.values[k + 1]) > cf.threshold) {
                ++k;
            }
            runs.push_back({cf.freqs[j], cf.freqs[k]});
            j = k + 1;
        } else {
            ++j;
        }
    }
    // |rho^(-xi)| = |rho^(xi)|; enforce the symmetry against round-off.
    const std::size_t original = runs.size();
    for (std::size_t i = 0; i < original; ++i) {
        runs.push_back({-runs[i].hi, -runs[i].lo});
    }
    std::sort(runs.begin(), runs.end(),
              [](const Interval &a, const Interval &b) { return a.lo < b.lo; });
    std::vector<Interval> merged;
    const double step = m > 1 ? std::abs(cf.freqs[1] - cf.freqs[0]) : 0.0;
    for (const auto &run : runs) {
        if (!merged.empty() && run.lo <= merged.back().hi + 0.5 * step) {
            merged.back().hi = std::max(merged.back().hi, run.hi);
        } else {
            merged.push_back(run);
        }
    }
    return merged;
}

Measure1D sinc_measure(double a, const GridSpec &grid) {
    require(a > 0.0, ErrorCode::InvalidArgument, "sinc measure needs a > 0");
    require(grid.dx() <= std::numbers::pi / (4.0 * a), ErrorCode::Resolution,
            "grid spacing does not resolve the oscillations of the sinc measure");
    const GridSpec dual = grid.conjugate();
    require(0.5 * a >= 2.0 * dual.dx(), ErrorCode::Resolution,
            "dual lattice too coarse for the band [-a/2, a/2]");
    std::vector<Complex> h(dual.size(), Complex{0.0, 0.0});
    const double height = 1.0 / std::sqrt(a);
    const double edge_tol = 1e-9 * dual.dx();
    double raw = 0.0;
    for (std::size_t k = 0; k < dual.size(); ++k) {
        const double p = std::abs(dual.x(k));
        if (p < 0.5 * a - edge_tol) {
            h[k] = height;
        } else if (p <= 0.5 * a + edge_tol) {
            h[k] = 0.5 * height;
        }
        raw += std::norm(h[k]);
    }
    raw *= dual.dx();
    const WaveFunction f = inverse_fourier(WaveFunction(dual, std::move(h)).scaled(1.0 / std::sqrt(raw)));
    std::vector<double> density(grid.size());
    double mass = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        density[j] = std::norm(f[j]);
        mass += density[j];
    }
    mass *= grid.dx();
    for (auto &v : density) {
        v /= mass;
    }
    std::ostringstream note;
    note << "sinc_measure(a=" << a << "): sampled band carries mass " << raw
         << " before renormalization (deficiency " << 1.0 - raw << ")";
    log_note(note.str());
    return Measure1D::from_density(grid, std::move(density));
}

// ------------------------------------------------------------- distances

namespace {

double atom_difference_sum(const Measure1D &a, const Measure1D &b, bool take_max) {
    std::vector<Atom> diff(a.atoms().begin(), a.atoms().end());
    for (const auto &atom : b.atoms()) {
        diff.push_back({atom.location, -atom.weight});
    }
    std::sort(diff.begin(), diff.end(),
              [](const Atom &x, const Atom &y) { return x.location < y.location; });
    double total = 0.0;
    std::size_t i = 0;
    while (i < diff.size()) {
        double w = diff[i].weight;
        std::size_t k = i + 1;
        while (k < diff.size() &&
               std::abs(diff[k].location - diff[i].location) <= kAtomMergeTolerance) {
            w += diff[k].weight;
            ++k;
        }
        total = take_max ? std::max(total, std::abs(w)) : total + std::abs(w);
        i = k;
    }
    return total;
}

} // namespace

double total_variation(const Measure1D &a, const Measure1D &b) {
    double l1 = 0.0;
    if (a.has_density() || b.has_density()) {
        const GridSpec &grid = common_grid(a, b);
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double da = a.has_density() ? a.density()[j] : 0.0;
            const double db = b.has_density() ? b.density()[j] : 0.0;
            l1 += std::abs(da - db);
        }
        l1 *= grid.dx();
    }
    return 0.5 * (l1 + atom_difference_sum(a, b, false));
}

double sup_difference(const Measure1D &a, const Measure1D &b) {
    double worst = 0.0;
    if (a.has_density() || b.has_density()) {
        const GridSpec &grid = common_grid(a, b);
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double da = a.has_density() ? a.density()[j] : 0.0;
            const double db = b.has_density() ? b.density()[j] : 0.0;
            worst = std::max(worst, std::abs(da - db));
        }
    }
    return std::max(worst, atom_difference_sum(a, b, true));
}

} // namespace covobs
