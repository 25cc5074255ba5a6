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


#include "oracles.hpp"

#include <covobs/error.hpp>
#include <covobs/log.hpp>
#include <covobs/measure.hpp>

#include <catch_amalgamated.hpp>

#include <cmath>
#include <functional>
#include <string>

using namespace covobs;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// dx = 1/101: unit boxes centred at 0 end exactly on cell edges.
GridSpec box_grid() { return GridSpec(4096, 4096.0 / 101.0); }

std::vector<std::pair<double, double>> atom_pairs(const Measure1D &m) {
    std::vector<std::pair<double, double>> out;
    for (const auto &a : m.atoms()) {
        out.emplace_back(a.location, a.weight);
    }
    return out;
}

Measure1D two_atoms(double d) {
    return mix(std::vector<WeightedMeasure>{{0.5, make_dirac(-d)}, {0.5, make_dirac(d)}});
}

double max_char_error(const Measure1D &m, const FreqGrid &freqs,
                      const std::function<Complex(double)> &ref) {
    const auto cf = char_fn(m, freqs);
    double worst = 0.0;
    for (std::size_t k = 0; k < cf.values.size(); ++k) {
        worst = std::max(worst, std::abs(cf.values[k] - ref(cf.freqs[k])));
    }
    return worst;
}

} // namespace

TEST_CASE("gaussian measure", "[measure]") {
    const GridSpec grid(4096, 40.0);
    const auto g = make_gaussian(0.0, 1.0, grid);
    CHECK_THAT(g.total_mass(), WithinAbs(1.0, 1e-10));
    CHECK_THAT(MassProfile(g).mass(-1.0, 1.0), WithinAbs(oracle::normal_mass(0, 1, -1, 1), 1e-4));
    CHECK_THAT(MassProfile(g).mass(-1.0, 1.0), WithinAbs(0.682689492137, 1e-4));
    for (double s : {0.5, 1.0, 2.0}) {
        CHECK_THAT(make_gaussian(0.0, s, grid).variance(), WithinRel(s * s, 1e-6));
    }
    const double m = 0.8137;
    CHECK(sup_difference(make_gaussian(m, 1.0, grid),
                         convolve(make_gaussian(0.0, 1.0, grid), make_dirac(m))) <= 1e-8);
    CHECK_THROWS_AS(make_gaussian(0.0, 3.0, grid), Error);
    CHECK_THROWS_AS(make_gaussian(0.0, 0.001, grid), Error);
}

TEST_CASE("dirac, uniform and mixtures", "[measure]") {
    const auto d = make_dirac(0.0);
    REQUIRE(d.atoms().size() == 1);
    CHECK(d.atoms()[0].location == 0.0);
    CHECK(d.atoms()[0].weight == 1.0);
    CHECK_FALSE(d.has_density());

    const auto u = make_uniform(0.0, 1.0, GridSpec(4096, 40.0));
    CHECK_THAT(u.total_mass(), WithinAbs(1.0, 1e-12));
    CHECK_THAT(u.support_hull().width(), WithinAbs(1.0, 2.0 * u.grid()->dx()));
    const auto aligned = make_uniform(0.0, 1.0, box_grid());
    CHECK_THAT(MassProfile(aligned).mass(-0.5, 0.5), WithinAbs(1.0, 1e-12));

    const auto two = two_atoms(1.25);
    REQUIRE(two.atoms().size() == 2);
    CHECK(two.atoms()[0].weight == 0.5);
    CHECK(two.atoms()[1].weight == 0.5);

    CHECK_THROWS_AS(mix(std::vector<WeightedMeasure>{{0.7, make_dirac(0)}, {0.7, make_dirac(1)}}), Error);
    CHECK_THROWS_AS(mix(std::vector<WeightedMeasure>{{1.5, make_dirac(0)}, {-0.5, make_dirac(1)}}), Error);
}

TEST_CASE("measure validation", "[measure]") {
    const GridSpec grid(64, 8.0);
    std::vector<double> bad(64, 0.0);
    bad[3] = -1.0;
    bad[4] = 2.0 / grid.dx();
    CHECK_THROWS_AS(Measure1D::from_density(grid, bad), Error);
    CHECK_THROWS_AS(Measure1D::from_atoms({{0.0, 0.5}}), Error);
    const auto merged = Measure1D::from_atoms({{1.0, 0.25}, {1.0, 0.25}, {-1.0, 0.5}});
    REQUIRE(merged.atoms().size() == 2);
    CHECK(merged.atoms()[1].weight == 0.5);
}

TEST_CASE("convolution", "[measure]") {
    SECTION("gaussians add variances") {
        const GridSpec grid(4096, 40.0);
        const auto c = convolve(make_gaussian(0, 1.0, grid), make_gaussian(0, 1.5, grid));
        double worst = 0.0;
        const double s = std::sqrt(1.0 + 2.25);
        for (std::size_t j = 0; j < grid.size(); ++j) {
            worst = std::max(worst, std::abs(c.density()[j] - oracle::normal_pdf(grid.x(j), 0, s)));
        }
        CHECK(worst <= 1e-7);
    }
    SECTION("aligned dirac shifts exactly") {
        const GridSpec grid(1024, 40.0);
        const auto g = make_gaussian(0.3, 1.0, grid);
        const auto c = convolve(g, make_dirac(16 * grid.dx()));
        for (std::size_t j = 16; j < grid.size(); ++j) {
            REQUIRE(c.density()[j] == g.density()[j - 16]);
        }
    }
    SECTION("uniform * uniform is the triangle") {
        const GridSpec grid = box_grid();
        const auto u = make_uniform(0.0, 1.0, grid);
        const auto t = convolve(u, u);
        double worst = 0.0;
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double x = grid.x(j);
            worst = std::max(worst, std::abs(t.density()[j] - std::max(0.0, 1.0 - std::abs(x))));
        }
        CHECK(worst <= 1e-6);
        CHECK_THAT(t.density()[grid.nearest_index(0.0)], WithinAbs(1.0, 1e-6));
    }
    SECTION("atoms add locations") {
        const auto c = convolve(two_atoms(1.0), make_dirac(0.25));
        REQUIRE(c.atoms().size() == 2);
        CHECK_THAT(c.atoms()[0].location, WithinAbs(-0.75, 1e-15));
        CHECK_THAT(c.atoms()[1].location, WithinAbs(1.25, 1e-15));
    }
    SECTION("support overflow") {
        const GridSpec grid(1024, 20.0);
        CHECK_THROWS_AS(convolve(make_gaussian(-1.5, 1.0, grid), make_gaussian(8.0, 0.3, grid)), Error);
    }
}

TEST_CASE("characteristic function", "[measure]") {
    const GridSpec grid(4096, 40.0);
    const auto freqs = FreqGrid::uniform(6.0, 512);
    SECTION("gaussian closed form") {
        const double xbar = 0.7;
        const double sigma = 1.3;
        const auto err = max_char_error(make_gaussian(xbar, sigma, grid), freqs, [&](double xi) {
            return std::polar(std::exp(-0.5 * sigma * sigma * xi * xi), -xi * xbar);
        });
        CHECK(err <= 1e-7);
    }
    SECTION("dirac at zero is constant one") {
        CHECK(max_char_error(make_dirac(0.0), freqs, [](double) { return Complex{1.0, 0.0}; }) <= 1e-15);
    }
    SECTION("value at zero is the mass") {
        const auto cf = char_fn(make_uniform(0.2, 1.7, grid), freqs);
        CHECK_THAT(std::abs(cf.values[freqs.half_count] - 1.0), WithinAbs(0.0, 1e-10));
    }
    SECTION("matches the naive sum") {
        const auto m = mix(std::vector<WeightedMeasure>{{0.6, make_uniform(-1.0, 2.0, grid)},
                                                        {0.4, make_dirac(1.3)}});
        const std::vector<double> dens(m.density().begin(), m.density().end());
        const auto cf = char_fn(m, freqs);
        double worst = 0.0;
        for (std::size_t k = 0; k < cf.values.size(); k += 5) {
            worst = std::max(worst, std::abs(cf.values[k] - oracle::naive_char(dens, grid.x_min(), grid.dx(),
                                                                              atom_pairs(m), cf.freqs[k])));
        }
        CHECK(worst <= 1e-12);
    }
    SECTION("requires 64 frequencies") { CHECK_THROWS_AS(FreqGrid::uniform(1.0, 32), Error); }
}

TEST_CASE("characteristic support", "[measure]") {
    const GridSpec grid(4096, 40.0);
    SECTION("gaussian endpoints") {
        const auto freqs = FreqGrid::uniform(8.0, 1024);
        const auto support = char_support(char_fn(make_gaussian(0.0, 1.0, grid), freqs));
        REQUIRE(support.size() == 1);
        const double edge = std::sqrt(2.0 * std::log(1e6)); // 5.25652...
        CHECK_THAT(support[0].hi, WithinAbs(edge, freqs.step));
        CHECK_THAT(support[0].lo, WithinAbs(-edge, freqs.step));
    }
    SECTION("dirac covers the whole range") {
        const auto freqs = FreqGrid::uniform(8.0, 256);
        const auto support = char_support(char_fn(make_dirac(2.5), freqs));
        REQUIRE(support.size() == 1);
        CHECK(support[0].lo == -freqs.xi_max());
        CHECK(support[0].hi == freqs.xi_max());
    }
}

TEST_CASE("sinc measure", "[measure]") {
    const GridSpec grid(4096, 400.0);
    std::string logged;
    set_log_sink([&](std::string_view m) { logged = m; });
    const double a = 1.0;
    const auto s = sinc_measure(a, grid);
    set_log_sink({});
    CHECK(logged.find("deficiency") != std::string::npos);
    CHECK_THAT(s.total_mass(), WithinAbs(1.0, 1e-6));

    const auto freqs = FreqGrid::lattice(grid, 2.0);
    const auto cf = char_fn(s, freqs);
    for (std::size_t k = 0; k < cf.values.size(); ++k) {
        if (std::abs(cf.freqs[k]) > a + 2.0 * freqs.step) {
            REQUIRE(std::abs(cf.values[k]) < kDefaultSupportThreshold);
        }
    }
    const auto support = char_support(cf);
    REQUIRE(support.size() == 1);
    CHECK_THAT(support[0].hi, WithinAbs(a, 2.0 * freqs.step));
    CHECK_THAT(support[0].lo, WithinAbs(-a, 2.0 * freqs.step));

    // f(0) = (2 pi)^{-1/2} int h by Simpson's rule.
    const double f0 = oracle::simpson([&](double) { return 1.0 / std::sqrt(a); }, -a / 2, a / 2, 64) /
                      std::sqrt(2.0 * std::numbers::pi);
    CHECK_THAT(s.density()[grid.nearest_index(0.0)], WithinRel(f0 * f0, 0.02));
    CHECK_THAT(f0 * f0, WithinRel(a / (2.0 * std::numbers::pi), 1e-12));

    for (std::size_t j = 1; j < grid.size(); ++j) {
        REQUIRE_THAT(s.density()[j], WithinAbs(s.density()[grid.size() - j], 1e-10));
    }
    CHECK_THROWS_AS(sinc_measure(50.0, grid), Error);
}

TEST_CASE("interval mass", "[measure]") {
    const GridSpec grid(4096, 40.0);
    CHECK_THAT(interval_mass(make_gaussian(0, 1, grid), 0.0, 2.0), WithinAbs(0.682689492137, 1e-4));
    for (double r : {1e-6, 0.1, 3.0}) {
        CHECK(interval_mass(make_dirac(0.0), 0.0, r) == 1.0);
    }
    CHECK_THAT(interval_mass(make_uniform(0, 1, grid), 0.0, 0.5), WithinAbs(0.5, 1e-8));
    // Closed windows keep their boundary atoms.
    CHECK(interval_mass(make_dirac(1.0), 0.5, 1.0) == 1.0);
    const auto g = make_gaussian(0.2, 0.7, grid);
    double prev = 0.0;
    for (double r = 0.05; r < 6.0; r += 0.05) {
        const double m = interval_mass(g, 0.1, r);
        REQUIRE(m >= prev);
        prev = m;
    }
}

TEST_CASE("sliding supremum", "[measure]") {
    const GridSpec grid = box_grid();
    for (double alpha : {1e-3, 0.7, 5.0}) {
        CHECK(sliding_sup(make_dirac(3.3), alpha) == 1.0);
    }
    const auto u = make_uniform(0.0, 1.0, grid);
    for (double alpha : {0.1, 0.25, 0.5, 0.99, 1.0}) {
        CHECK_THAT(sliding_sup(u, alpha), WithinAbs(alpha, 1e-8));
    }
    CHECK_THAT(sliding_sup(u, 1.3), WithinAbs(1.0, 1e-12));
    const double d = 0.8;
    const auto two = two_atoms(d);
    for (double alpha : {0.1, 1.0, 1.59}) {
        CHECK(sliding_sup(two, alpha) == 0.5);
        CHECK(oracle::atomic_window_sup(atom_pairs(two), alpha) == 0.5);
    }
    CHECK(sliding_sup(two, 2 * d) == 1.0);
    CHECK(sliding_sup(two, 2.5) == 1.0);
}

TEST_CASE("measure properties over a corpus", "[measure]") {
    const GridSpec grid(4096, 40.0);
    const double dx = grid.dx();
    const std::vector<Measure1D> corpus{
        make_gaussian(0.0, 1.0, grid),
        make_gaussian(-1.3, 0.4, grid),
        make_uniform(0.0, 1.0, grid),
        make_uniform(0.75, 2.5, grid),
        make_dirac(0.0),
        make_dirac(37 * dx),
        two_atoms(64 * dx),
        mix(std::vector<WeightedMeasure>{{0.3, make_gaussian(1.0, 0.5, grid)}, {0.7, make_dirac(-12 * dx)}}),
    };
    const auto freqs = FreqGrid::uniform(4.0, 256);

    SECTION("convolution theorem and mass conservation") {
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            for (std::size_t k = 0; k < corpus.size(); ++k) {
                const auto c = convolve(corpus[i], corpus[k]);
                REQUIRE_THAT(c.total_mass(), WithinAbs(1.0, 1e-9));
                const auto cc = char_fn(c, freqs);
                const auto ca = char_fn(corpus[i], freqs);
                const auto cb = char_fn(corpus[k], freqs);
                double worst = 0.0;
                for (std::size_t m = 0; m < cc.values.size(); ++m) {
                    worst = std::max(worst, std::abs(cc.values[m] - ca.values[m] * cb.values[m]));
                }
                REQUIRE(worst <= 1e-8);
                const auto swapped = convolve(corpus[k], corpus[i]);
                REQUIRE(total_variation(c, swapped) <= 1e-9);
            }
        }
    }
    SECTION("hermitian symmetry") {
        for (const auto &m : corpus) {
            const auto cf = char_fn(m, freqs);
            const std::size_t n = cf.values.size();
            for (std::size_t k = 0; k < n; ++k) {
                REQUIRE(std::abs(cf.values[k] - std::conj(cf.values[n - 1 - k])) <= 1e-10);
            }
        }
    }
    SECTION("window supremum is monotone and reaches the total mass") {
        for (const auto &m : corpus) {
            double prev = 0.0;
            for (double alpha = 0.02; alpha < 4.0; alpha *= 1.3) {
                const double g = sliding_sup(m, alpha);
                REQUIRE(g >= prev - 1e-15);
                REQUIRE(g > 0.0);
                REQUIRE(g <= 1.0);
                prev = g;
            }
            const double diameter = m.support_hull().width();
            REQUIRE_THAT(sliding_sup(m, diameter + dx), WithinAbs(m.total_mass(), 1e-12));
        }
    }
}
