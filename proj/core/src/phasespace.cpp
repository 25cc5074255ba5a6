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


#include "covobs/phasespace.hpp"

#include "covobs/canonical.hpp"
#include "covobs/error.hpp"
#include "covobs/fft.hpp"
#include "covobs/random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>

namespace covobs {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Axis {
    std::vector<double> values;
    std::vector<std::size_t> index;
    double step = 0.0;
};

Axis lattice_axis(const GridSpec &grid, double half_width, std::size_t target) {
    const double dx = grid.dx();
    const auto stride = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(2.0 * half_width / (target * dx))));
    Axis axis;
    axis.step = static_cast<double>(stride) * dx;
    const std::size_t centre = grid.size() / 2; // node at 0
    const auto reach = static_cast<std::size_t>(std::floor(half_width / axis.step + 1e-9));
    require(reach * stride < centre, ErrorCode::WindowTooSmall,
            "phase-space window exceeds the grid");
    for (std::size_t m = 0; m <= 2 * reach; ++m) {
        const std::size_t j = centre - reach * stride + m * stride;
        axis.index.push_back(j);
        axis.values.push_back(grid.x(j));
    }
    return axis;
}

std::vector<double> reflected_density(const MixedState &state) {
    const std::size_t n = state.grid().size();
    std::vector<double> out(n, 0.0);
    for (const auto &component : state.components()) {
        for (std::size_t j = 0; j < n; ++j) {
            out[j] += component.weight * std::norm(component.state[(n - j) % n]);
        }
    }
    double mass = 0.0;
    for (double v : out) {
        mass += v;
    }
    mass *= state.grid().dx();
    for (auto &v : out) {
        v /= mass;
    }
    return out;
}

} // namespace

WaveFunction weyl_apply(const WaveFunction &phi, double q, double p) {
    return translate(boost(phi, p), q).scaled(std::polar(1.0, 0.5 * q * p));
}

double JointDensity::mass() const {
    double total = 0.0;
    for (double v : values) {
        total += v;
    }
    return total * dq * dp;
}

std::vector<double> JointDensity::q_margin() const {
    std::vector<double> out(q.size(), 0.0);
    for (std::size_t i = 0; i < q.size(); ++i) {
        for (std::size_t k = 0; k < p.size(); ++k) {
            out[i] += at(i, k);
        }
        out[i] *= dp;
    }
    return out;
}

std::vector<double> JointDensity::p_margin() const {
    std::vector<double> out(p.size(), 0.0);
    for (std::size_t i = 0; i < q.size(); ++i) {
        for (std::size_t k = 0; k < p.size(); ++k) {
            out[k] += at(i, k);
        }
    }
    for (auto &v : out) {
        v *= dq;
    }
    return out;
}

JointDensity joint_density(const PhaseSpaceObservable &g, const MixedState &s,
                           const PhaseWindow &window) {
    const GridSpec &grid = s.grid();
    require(g.generator.grid() == grid, ErrorCode::InvalidArgument,
            "generator and state live on different grids");
    const std::size_t n = grid.size();
    const Axis q_axis = lattice_axis(grid, window.q_max, window.target_points);
    const Axis p_axis = lattice_axis(grid.conjugate(), window.p_max, window.target_points);

    JointDensity out;
    out.q = q_axis.values;
    out.p = p_axis.values;
    out.q_index = q_axis.index;
    out.p_index = p_axis.index;
    out.dq = q_axis.step;
    out.dp = p_axis.step;
    out.values.assign(out.q.size() * out.p.size(), 0.0);

    std::vector<std::vector<Complex>> generator_spectra;
    for (const auto &component : g.generator.components()) {
        generator_spectra.push_back(fft::forward(component.state.values()));
    }
    const auto q_steps = static_cast<long long>(std::llround(q_axis.step / grid.dx()));
    const long long q_first = -static_cast<long long>(out.q.size() / 2) * q_steps;

    std::vector<Complex> g_row(n);
    std::vector<Complex> product(n);
    for (std::size_t k = 0; k < out.p.size(); ++k) {
        const double p = out.p[k];
        for (const auto &state_part : s.components()) {
            for (std::size_t j = 0; j < n; ++j) {
                g_row[j] = state_part.state[j] * std::polar(1.0, -p * grid.x(j));
            }
            const auto g_spec = fft::forward(g_row);
            for (std::size_t t = 0; t < generator_spectra.size(); ++t) {
                const double weight = state_part.weight * g.generator.components()[t].weight;
                const auto &phi_spec = generator_spectra[t];
                for (std::size_t m = 0; m < n; ++m) {
                    product[m] = g_spec[m] * std::conj(phi_spec[m]);
                }
                // corr[m] = sum_j g_j conj(phi_{j-m}); FFTW leaves the 1/n.
                const auto corr = fft::backward(product);
                const double scale = grid.dx() / static_cast<double>(n);
                for (std::size_t i = 0; i < out.q.size(); ++i) {
                    const long long m = q_first + static_cast<long long>(i) * q_steps;
                    const auto idx = static_cast<std::size_t>(
                        ((m % static_cast<long long>(n)) + static_cast<long long>(n)) %
                        static_cast<long long>(n));
                    out.values[i * out.p.size() + k] +=
                        weight * std::norm(corr[idx] * scale) / kTwoPi;
                }
            }
        }
    }
    const double deficiency = std::abs(1.0 - out.mass());
    require(deficiency <= 1e-4, ErrorCode::WindowTooSmall,
            "phase-space window misses mass " + std::to_string(deficiency));
    return out;
}

std::pair<Measure1D, Measure1D> margin_measures(const PhaseSpaceObservable &g) {
    const MixedState &t = g.generator;
    Measure1D rho = Measure1D::from_density(t.grid(), reflected_density(t));
    const MixedState t_hat = fourier(t);
    Measure1D nu = Measure1D::from_density(t_hat.grid(), reflected_density(t_hat));
    return {std::move(rho), std::move(nu)};
}

MixedState squeezed_vacuum(const GridSpec &grid, double s) {
    require(s > 0.0, ErrorCode::InvalidArgument, "squeeze parameter must be positive");
    return MixedState::pure(gaussian_packet(grid, 0.0, s / std::sqrt(2.0)));
}

MixedState random_hermite_mixture(const GridSpec &grid, std::mt19937_64 &engine) {
    const int rank = 1 + static_cast<int>(engine() % 3);
    std::vector<MixedState::Component> parts;
    double total = 0.0;
    for (int i = 0; i < rank; ++i) {
        const auto order = static_cast<unsigned>(engine() % 6);
        const double scale = uniform(engine, 0.6, 1.6);
        const double centre = uniform(engine, -2.0, 2.0);
        const double momentum = uniform(engine, -2.0, 2.0);
        const double weight = uniform(engine, 0.2, 1.0);
        total += weight;
        auto state = translate(boost(hermite_function(grid, order, scale), momentum), centre);
        parts.push_back({weight, state.normalized()});
    }
    for (auto &part : parts) {
        part.weight /= total;
    }
    return MixedState(std::move(parts));
}

GridSpec balanced_grid(std::size_t n) {
    return GridSpec(n, std::sqrt(kTwoPi * static_cast<double>(n)));
}

ProductReport resolution_product_check(const PhaseSpaceObservable &g, double tol) {
    const auto [rho, nu] = margin_measures(g);
    ProductReport report;
    report.position = limit_of_resolution(rho, std::max(tol, 0.25 * rho.grid()->dx()));
    report.momentum = limit_of_resolution(nu, std::max(tol, 0.25 * nu.grid()->dx()));
    report.product = report.position.gamma * report.momentum.gamma;
    report.pass = report.product >= report.bound - report.slack;
    return report;
}

std::string joint_density_csv(const JointDensity &density) {
    std::ostringstream out;
    out.precision(17);
    out << "q,p,value\n";
    for (std::size_t i = 0; i < density.q.size(); ++i) {
        for (std::size_t k = 0; k < density.p.size(); ++k) {
            out << density.q[i] << ',' << density.p[k] << ',' << density.at(i, k) << '\n';
        }
    }
    return out.str();
}

std::string joint_density_binary(const JointDensity &density) {
    std::ostringstream header;
    header.precision(17);
    header << "{\"format\":\"float32-le-row-major\",\"rows\":" << density.q.size()
           << ",\"cols\":" << density.p.size() << ",\"q_min\":" << density.q.front()
           << ",\"dq\":" << density.dq << ",\"p_min\":" << density.p.front()
           << ",\"dp\":" << density.dp << "}\n";
    std::string out = header.str();
    out.reserve(out.size() + 4 * density.values.size());
    for (double v : density.values) {
        const auto bits = std::bit_cast<std::uint32_t>(static_cast<float>(v));
        for (int b = 0; b < 4; ++b) {
            out.push_back(static_cast<char>((bits >> (8 * b)) & 0xffU));
        }
    }
    return out;
}

} // namespace covobs
