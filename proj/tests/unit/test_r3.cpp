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


#include <covobs/error.hpp>
#include <covobs/r3.hpp>

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace covobs;
using namespace covobs::r3;
using Catch::Matchers::WithinAbs;

namespace {

double norm(const Vec3 &v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

Vec3 mean(const SampleCloud3D &c) {
    Vec3 m{0, 0, 0};
    for (const auto &p : c.points) {
        for (int a = 0; a < 3; ++a) {
            m[a] += p[a];
        }
    }
    for (auto &v : m) {
        v /= static_cast<double>(c.points.size());
    }
    return m;
}

double axis_second_moment(const SampleCloud3D &c, int axis) {
    double s = 0.0;
    for (const auto &p : c.points) {
        s += p[axis] * p[axis];
    }
    return s / static_cast<double>(c.points.size());
}

double axis_variance(const SampleCloud3D &c, int axis) {
    const double m = mean(c)[axis];
    return axis_second_moment(c, axis) - m * m;
}

const GridSpec kRadialGrid(4096, 40.0);

} // namespace

TEST_CASE("rotations", "[r3]") {
    const auto r = rotation({0, 0, 1}, std::numbers::pi / 2);
    const auto v = apply(r, {1, 0, 0});
    CHECK_THAT(v[0], WithinAbs(0.0, 1e-15));
    CHECK_THAT(v[1], WithinAbs(1.0, 1e-15));
    CHECK_NOTHROW(require_rotation(rotation({1, 1, 1}, 0.7)));
    Mat3 reflection = identity();
    reflection[2][2] = -1.0;
    CHECK_THROWS_AS(require_rotation(reflection), Error);
    Mat3 stretch = identity();
    stretch[0][0] = 1.1;
    CHECK_THROWS_AS(require_rotation(stretch), Error);
}

TEST_CASE("rotation invariant measures", "[r3]") {
    CHECK_THROWS_AS(RotInvMeasure3D(0.5, std::nullopt), Error);
    CHECK_THROWS_AS(RotInvMeasure3D(0.0, make_gaussian(0.0, 1.0, kRadialGrid)), Error);
    CHECK_THROWS_AS(RotInvMeasure3D(0.0, make_dirac(-1.0)), Error);
    CHECK_THROWS_AS(RotInvMeasure3D(1.5, std::nullopt), Error);
    const RotInvMeasure3D rho(0.25, maxwell_radial(1.0, kRadialGrid));
    CHECK(rho.radial_mass() == 0.75);
    CHECK_THROWS_AS(maxwell_radial(5.0, kRadialGrid), Error);
}

TEST_CASE("sampling", "[r3]") {
    const std::size_t n = 100000;
    SECTION("origin") {
        const auto c = sample_measure(RotInvMeasure3D::origin(), 1000, 1);
        for (const auto &p : c.points) {
            REQUIRE(norm(p) == 0.0);
        }
    }
    SECTION("sphere") {
        const double radius = 2.5;
        const auto c = sample_measure(RotInvMeasure3D::sphere(radius), n, 2);
        REQUIRE(c.points.size() == n);
        for (const auto &p : c.points) {
            REQUIRE_THAT(norm(p), WithinAbs(radius, 1e-12));
        }
        CHECK(norm(mean(c)) / radius <= 3.0 / std::sqrt(static_cast<double>(n)));
    }
    SECTION("isotropic second moments") {
        const double s = 0.8;
        const double atom = 0.2;
        const auto c = sample_measure(RotInvMeasure3D(atom, maxwell_radial(s, kRadialGrid)), n, 3);
        // Away from the atom each coordinate is N(0, s^2).
        const double m2 = (1 - atom) * s * s;
        const double m4 = (1 - atom) * 3 * s * s * s * s;
        const double band = 4.0 * std::sqrt((m4 - m2 * m2) / static_cast<double>(n));
        for (int axis = 0; axis < 3; ++axis) {
            CHECK_THAT(axis_second_moment(c, axis), WithinAbs(m2, band));
        }
    }
    SECTION("fixed seed is reproducible") {
        const RotInvMeasure3D rho(0.1, maxwell_radial(1.0, kRadialGrid));
        CHECK(sample_measure(rho, 20000, 7).points == sample_measure(rho, 20000, 7).points);
        CHECK(sample_measure(rho, 20000, 7).points != sample_measure(rho, 20000, 8).points);
    }
    SECTION("rotated samples match fresh samples") {
        const RotInvMeasure3D rho(0.3, maxwell_radial(1.2, kRadialGrid));
        const auto a = rotate(rotation({1, 2, 3}, 1.1), sample_measure(rho, n, 4));
        const auto b = sample_measure(rho, n, 5);
        const double limit = 2.276 * std::sqrt(2.0 / static_cast<double>(n));
        for (const auto &d : ks_directions()) {
            std::vector<double> pa;
            std::vector<double> pb;
            for (const auto &p : a.points) {
                pa.push_back(p[0] * d[0] + p[1] * d[1] + p[2] * d[2]);
            }
            for (const auto &p : b.points) {
                pb.push_back(p[0] * d[0] + p[1] * d[1] + p[2] * d[2]);
            }
            REQUIRE(ks_statistic(pa, pb) <= limit);
        }
    }
}

TEST_CASE("smeared output", "[r3]") {
    const std::size_t n = 100000;
    const Vec3 centre{0.5, -1.0, 2.0};
    const auto state = gaussian_cloud(centre, 1.0, n, 11);
    SECTION("sharp smear is the identity") {
        const auto out = smeared_output(RotInvMeasure3D::origin(), state, 3);
        CHECK(out.points == state.points);
        CHECK(sharpness_check(RotInvMeasure3D::origin()));
    }
    SECTION("variances add and the mean is kept") {
        const double s = 0.7;
        const auto out = smeared_output(RotInvMeasure3D(0.0, maxwell_radial(s, kRadialGrid)), state, 4);
        const double var = 1.0 + s * s;
        const double nn = static_cast<double>(n);
        for (int axis = 0; axis < 3; ++axis) {
            CHECK_THAT(axis_variance(out, axis), WithinAbs(var, 4.0 * var * std::sqrt(2.0 / nn)));
            CHECK_THAT(mean(out)[axis], WithinAbs(centre[axis], 4.0 * std::sqrt(var / nn)));
        }
    }
    SECTION("commutes with translations") {
        const RotInvMeasure3D rho(0.1, maxwell_radial(1.0, kRadialGrid));
        const Vec3 v{1.5, -2.0, 0.25};
        const auto a = smeared_output(rho, translate(state, v), 9);
        const auto b = translate(smeared_output(rho, state, 9), v);
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (int axis = 0; axis < 3; ++axis) {
                worst = std::max(worst, std::abs(a.points[i][axis] - b.points[i][axis]));
            }
        }
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("rotation covariance", "[r3]") {
    const std::size_t n = 100000;
    const RotInvMeasure3D rho(0.2, maxwell_radial(1.0, kRadialGrid));
    const auto state = gaussian_cloud({0.5, -0.2, 1.0}, 1.0, n, 5);
    SECTION("identity") {
        const auto r = rotation_covariance_test(rho, state, identity(), n, 1);
        CHECK(r.pass);
        CHECK(r.statistics.size() == 3 + 6 + 6);
    }
    SECTION("quarter turn about z") {
        CHECK(rotation_covariance_test(rho, state, rotation({0, 0, 1}, std::numbers::pi / 2), n, 2).pass);
    }
    SECTION("sphere smear") {
        CHECK(rotation_covariance_test(RotInvMeasure3D::sphere(1.5), state, rotation({1, 0, 1}, 2.0), n, 3).pass);
    }
    SECTION("offset smear fails") {
        const auto r = rotation_covariance_test(offset_sampler(rho, {1, 0, 0}), state,
                                                rotation({0, 0, 1}, std::numbers::pi / 2), n, 2);
        CHECK_FALSE(r.pass);
    }
    SECTION("not a rotation") {
        Mat3 m = identity();
        m[1][1] = -1.0;
        CHECK_THROWS_AS(rotation_covariance_test(rho, state, m, n, 1), Error);
    }
}

TEST_CASE("sharpness", "[r3]") {
    CHECK(sharpness_check(RotInvMeasure3D::origin()));
    CHECK(sharpness_check(RotInvMeasure3D(1.0 - 1e-13, std::nullopt)));
    CHECK_FALSE(sharpness_check(RotInvMeasure3D::sphere(0.5)));
    CHECK_FALSE(sharpness_check(RotInvMeasure3D(0.0, maxwell_radial(1.0, kRadialGrid))));
}

TEST_CASE("cloud export", "[r3]") {
    const auto c = gaussian_cloud({0, 0, 0}, 1.0, 10, 1);
    const auto csv = cloud_csv(c);
    CHECK(csv.rfind("x,y,z\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);
    const auto bin = cloud_binary(c);
    const auto header_end = bin.find('\n');
    REQUIRE(header_end != std::string::npos);
    CHECK(bin.substr(0, header_end).find("\"seed\"") != std::string::npos);
    CHECK(bin.size() - header_end - 1 == 10 * 3 * sizeof(double));
}
