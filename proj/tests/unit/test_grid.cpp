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

#include <covobs/canonical.hpp>
#include <covobs/error.hpp>
#include <covobs/grid.hpp>

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace covobs;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double position_mean(const WaveFunction &psi) {
    double m = 0.0;
    for (std::size_t j = 0; j < psi.size(); ++j) {
        m += psi.grid().x(j) * std::norm(psi[j]);
    }
    return m * psi.grid().dx();
}

double position_variance(const WaveFunction &psi) {
    const double mu = position_mean(psi);
    double v = 0.0;
    for (std::size_t j = 0; j < psi.size(); ++j) {
        const double u = psi.grid().x(j) - mu;
        v += u * u * std::norm(psi[j]);
    }
    return v * psi.grid().dx();
}

WaveFunction test_state(const GridSpec &grid) {
    auto a = gaussian_packet(grid, -1.0, 0.8, 0.7);
    auto b = gaussian_packet(grid, 1.5, 0.6, -1.1);
    std::vector<Complex> v(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        v[j] = a[j] + Complex(0.3, 0.4) * b[j];
    }
    return WaveFunction(grid, std::move(v)).normalized();
}

} // namespace

TEST_CASE("lattice invariants", "[grid]") {
    CHECK_THROWS_AS(GridSpec(12, 1.0), Error);
    CHECK_THROWS_AS(GridSpec(4, 1.0), Error);
    CHECK_THROWS_AS(GridSpec(16, -1.0), Error);
    for (std::size_t n : {8u, 256u, 4096u}) {
        const GridSpec g(n, 37.5);
        CHECK_THAT(g.dx() * g.dp() * static_cast<double>(n), WithinRel(2.0 * std::numbers::pi, 1e-15));
        CHECK(g.conjugate().conjugate().length() == g.length());
        CHECK_THAT(g.conjugate().dx(), WithinRel(g.dp(), 1e-15));
    }
}

TEST_CASE("translate", "[grid]") {
    const GridSpec grid(1024, 40.0);
    const auto psi = gaussian_packet(grid, 0.0, 1.0);

    SECTION("zero shift is the identity") {
        CHECK(max_abs_difference(translate(psi, 0.0), psi) <= 1e-14);
    }
    SECTION("mean moves by q") {
        CHECK_THAT(position_mean(translate(psi, 1.0)), WithinAbs(1.0, 1e-8));
        CHECK_THAT(position_mean(translate(psi, 0.3711)), WithinAbs(0.3711, 1e-8));
    }
    SECTION("group inverse") {
        const auto s = test_state(grid);
        CHECK(max_abs_difference(translate(translate(s, 1.234), -1.234), s) <= 1e-10);
    }
    SECTION("aligned shifts are exact index moves") {
        const auto moved = translate(psi, 8 * grid.dx());
        for (std::size_t j = 8; j < grid.size(); ++j) {
            REQUIRE(moved[j] == psi[j - 8]);
        }
    }
    SECTION("guard against wrap-around") {
        CHECK_THROWS_MATCHES(translate(psi, 10.0), Error,
                             Catch::Matchers::Predicate<Error>(
                                 [](const Error &e) { return e.code() == ErrorCode::ShiftTooLarge; }));
    }
}

TEST_CASE("boost", "[grid]") {
    const GridSpec grid(1024, 40.0);
    const auto psi = test_state(grid);
    CHECK(max_abs_difference(boost(psi, 0.0), psi) == 0.0);
    const auto b = boost(psi, 1.7);
    for (std::size_t j = 0; j < grid.size(); ++j) {
        REQUIRE_THAT(std::abs(b[j]), WithinAbs(std::abs(psi[j]), 1e-15));
    }
    const auto mom = [](const WaveFunction &w) {
        return momentum_distribution(MixedState::pure(w)).mean();
    };
    CHECK_THAT(mom(b), WithinAbs(mom(psi) + 1.7, 1e-8));
    CHECK_THROWS_AS(boost(psi, 0.95 * grid.nyquist()), Error);
}

TEST_CASE("dilate", "[grid]") {
    const GridSpec grid(2048, 64.0);
    const auto psi = gaussian_packet(grid, 0.5, 1.0, 0.4);
    CHECK(max_abs_difference(dilate(psi, 1.0, 0.7), psi) <= 1e-12);
    for (double a : {0.5, 2.0, 3.0}) {
        const auto d = dilate(gaussian_packet(grid, 0.0, 1.0), a, 0.0);
        CHECK_THAT(d.norm(), WithinAbs(1.0, 1e-8));
        CHECK_THAT(position_variance(d), WithinRel(a * a, 1e-6));
    }
    CHECK(max_abs_difference(dilate(dilate(psi, 2.0, 0.3), 0.5, 0.3), psi) <= 1e-7);
    CHECK_THROWS_AS(dilate(psi, 10.0, 0.0), Error);
    CHECK_THROWS_AS(dilate(gaussian_packet(grid, 0.0, 3.0), 8.0, 0.0), Error);
}

TEST_CASE("fourier", "[grid]") {
    const GridSpec grid(512, 30.0);
    const auto s = test_state(grid);

    SECTION("matches the naive transform") {
        const auto hat = fourier(s);
        const std::vector<oracle::cplx> values(s.values().begin(), s.values().end());
        double worst = 0.0;
        for (std::size_t k = 0; k < grid.size(); k += 7) {
            const auto ref = oracle::naive_transform(values, grid.x_min(), grid.dx(), hat.grid().x(k));
            worst = std::max(worst, std::abs(ref - hat[k]));
        }
        CHECK(worst <= 1e-12);
    }
    SECTION("vacuum is self-dual") {
        const auto vac = gaussian_packet(grid, 0.0, 1.0 / std::numbers::sqrt2);
        const auto hat = fourier(vac);
        double l2 = 0.0;
        for (std::size_t k = 0; k < grid.size(); ++k) {
            const double p = hat.grid().x(k);
            const double ref = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * p * p);
            l2 += std::norm(hat[k] - ref);
        }
        CHECK(std::sqrt(l2 * hat.grid().dx()) <= 1e-8);
    }
    SECTION("unitary and invertible") {
        CHECK_THAT(fourier(s).norm(), WithinAbs(1.0, 1e-12));
        CHECK(max_abs_difference(fourier(inverse_fourier(s)), s) <= 1e-12);
    }
    SECTION("F U(q) = V(-q) F") {
        for (double q : {0.37, -1.2, 2.0}) {
            CHECK(max_abs_difference(fourier(translate(s, q)), boost(fourier(s), -q)) <= 1e-10);
        }
    }
}

TEST_CASE("canonical distributions", "[grid]") {
    const GridSpec grid(4096, 40.0);
    SECTION("pure gaussian") {
        const auto d = position_distribution(MixedState::pure(gaussian_packet(grid, 0.0, 1.0)));
        double worst = 0.0;
        for (std::size_t j = 0; j < grid.size(); ++j) {
            worst = std::max(worst, std::abs(d.density()[j] - oracle::normal_pdf(grid.x(j), 0.0, 1.0)));
        }
        CHECK(worst <= 1e-8);
        CHECK_THAT(d.total_mass(), WithinAbs(1.0, 1e-10));
    }
    SECTION("mixture of disjoint bumps") {
        const MixedState t({{0.5, gaussian_packet(grid, -6.0, 0.5)}, {0.5, gaussian_packet(grid, 6.0, 0.5)}});
        const MassProfile profile(position_distribution(t));
        CHECK_THAT(profile.mass(-20.0, 0.0), WithinAbs(0.5, 1e-10));
        CHECK_THAT(profile.mass(0.0, 20.0), WithinAbs(0.5, 1e-10));
    }
    SECTION("boosts leave the position law unchanged") {
        const auto s = test_state(grid);
        const auto a = position_distribution(MixedState::pure(s));
        const auto b = position_distribution(MixedState::pure(boost(s, 2.3)));
        CHECK(sup_difference(a, b) <= 1e-15);
    }
    SECTION("momentum law of a gaussian") {
        for (double sx : {0.5, 1.0, 2.0}) {
            const auto m = momentum_distribution(MixedState::pure(gaussian_packet(grid, 0.3, sx)));
            CHECK_THAT(std::sqrt(m.variance()), WithinRel(1.0 / (2.0 * sx), 1e-6));
        }
    }
    SECTION("momentum law is translation invariant") {
        const auto s = test_state(grid);
        const auto a = momentum_distribution(MixedState::pure(s));
        const auto b = momentum_distribution(MixedState::pure(translate(s, 1.37)));
        CHECK(sup_difference(a, b) <= 1e-10);
    }
    SECTION("windowed plane wave concentrates at p0") {
        const auto m = momentum_distribution(MixedState::pure(gaussian_packet(grid, 0.0, 4.0, 3.0)));
        CHECK(MassProfile(m).mass(2.5, 3.5) > 0.999);
    }
    SECTION("momentum law is the position law of the transform") {
        const auto s = test_state(grid);
        const auto a = momentum_distribution(MixedState::pure(s));
        const auto b = position_distribution(MixedState::pure(fourier(s)));
        CHECK(sup_difference(a, b) <= 1e-15);
    }
}

TEST_CASE("unitaries preserve the norm", "[grid]") {
    const GridSpec grid(2048, 64.0);
    const auto s = test_state(grid);
    CHECK_THAT(translate(s, 2.71).norm(), WithinAbs(1.0, 1e-8));
    CHECK_THAT(boost(s, -1.3).norm(), WithinAbs(1.0, 1e-8));
    CHECK_THAT(dilate(s, 1.7, 0.2).norm(), WithinAbs(1.0, 1e-8));
    CHECK_THAT(fourier(s).norm(), WithinAbs(1.0, 1e-8));
}

TEST_CASE("weyl commutation at distribution level", "[grid]") {
    const GridSpec grid(2048, 64.0);
    const auto s = test_state(grid);
    for (double q : {0.5, -2.25, 1.111}) {
        const auto moved = position_distribution(MixedState::pure(translate(s, q)));
        const auto shifted = shift(position_distribution(MixedState::pure(s)), q);
        CHECK(sup_difference(moved, shifted) <= 1e-8);
    }
}

TEST_CASE("mixed state validation", "[grid]") {
    const GridSpec grid(256, 20.0);
    const auto g = gaussian_packet(grid, 0.0, 1.0);
    CHECK_THROWS_AS(MixedState({{0.6, g}, {0.6, g}}), Error);
    const MixedState renorm({{1.0, g.scaled(2.0)}});
    CHECK_THAT(renorm.components()[0].state.norm(), WithinAbs(1.0, 1e-10));
    CHECK_NOTHROW(MixedState({{0.25, g}, {0.75, g}}));
}

TEST_CASE("hermite functions are orthonormal", "[grid]") {
    const GridSpec grid(2048, 40.0);
    for (unsigned i = 0; i < 6; ++i) {
        for (unsigned k = 0; k < 6; ++k) {
            const auto ip = inner_product(hermite_function(grid, i, 1.3), hermite_function(grid, k, 1.3));
            CHECK_THAT(std::abs(ip), WithinAbs(i == k ? 1.0 : 0.0, 1e-10));
        }
    }
}
