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


#include <covobs/canonical.hpp>
#include <covobs/distinction.hpp>
#include <covobs/error.hpp>

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace covobs;
using Catch::Matchers::WithinAbs;

namespace {

bool leq(Relation r) { return r == Relation::LeftLessEq || r == Relation::Equivalent; }

Relation flipped(Relation r) {
    switch (r) {
    case Relation::LeftLessEq:
        return Relation::RightLessEq;
    case Relation::RightLessEq:
        return Relation::LeftLessEq;
    default:
        return r;
    }
}

} // namespace

TEST_CASE("compare", "[distinction]") {
    const GridSpec grid = distinction_grid();
    const auto g1 = make_gaussian(0.0, 1.0, grid);
    const auto g2 = make_gaussian(0.5, 1.5, grid);
    const auto s1 = sinc_measure(1.0, grid);

    const auto v = compare(g1, g2);
    CHECK(v.relation == Relation::Equivalent);
    REQUIRE(v.left_support.size() == 1);
    CHECK(v.left_support[0].lo == -distinction_freqs().xi_max());
    CHECK(v.threshold == kDefaultSupportThreshold);

    CHECK(compare(s1, g1).relation == Relation::LeftLessEq);
    CHECK(compare(g1, s1).relation == Relation::RightLessEq);
    CHECK(compare(s1, sinc_measure(1.0, grid)).relation == Relation::Equivalent);
    CHECK(compare(sinc_measure(0.5, grid), s1).relation == Relation::LeftLessEq);
    CHECK(to_string(Relation::Incomparable) == "Incomparable");
}

TEST_CASE("maximal class", "[distinction]") {
    const GridSpec grid = distinction_grid();
    CHECK(is_maximal_class(make_gaussian(0.0, 1.0, grid)));
    CHECK_FALSE(is_maximal_class(sinc_measure(1.0, grid)));
    CHECK(is_maximal_class(make_dirac(0.0)));
    CHECK(is_maximal_class(make_dirac(2.7)));
}

TEST_CASE("witness states", "[distinction]") {
    const GridSpec grid = distinction_grid();
    const double a = 0.6;
    const double b = 0.9;
    const auto [f1, f2] = witness_states(a, b, grid);
    CHECK_THAT(f1.norm(), WithinAbs(1.0, 1e-8));
    CHECK_THAT(f2.norm(), WithinAbs(1.0, 1e-8));

    const auto freqs = distinction_freqs();
    const auto c1 = char_fn(position_distribution(MixedState::pure(f1)), freqs);
    const auto c2 = char_fn(position_distribution(MixedState::pure(f2)), freqs);
    CHECK_THAT(std::abs(c1.values[freqs.half_count]), WithinAbs(1.0, 1e-10));
    CHECK_THAT(std::abs(c2.values[freqs.half_count]), WithinAbs(1.0, 1e-10));
    double outside = 0.0;
    double inside = 0.0;
    for (std::size_t k = 0; k < c1.values.size(); ++k) {
        const double xi = std::abs(c1.freqs[k]);
        const double diff = std::abs(c1.values[k] - c2.values[k]);
        if (xi < 2 * a - 2 * freqs.step || xi > 2 * b + 2 * freqs.step) {
            outside = std::max(outside, diff);
        } else {
            inside = std::max(inside, diff);
        }
    }
    CHECK(outside <= 1e-12);
    CHECK(inside > 0.1);
    CHECK_THROWS_AS(witness_states(0.9, 0.6, grid), Error);
    CHECK_THROWS_AS(witness_states(0.5, grid.nyquist(), grid), Error);
}

TEST_CASE("separation", "[distinction]") {
    const GridSpec grid = distinction_grid();
    const auto gauss = make_gaussian(0.0, 1.0, grid);
    const auto sinc = sinc_measure(1.0, grid);
    const auto r = verify_separation(gauss, sinc, 0.6, 0.9, grid);
    CHECK(r.pass);
    CHECK(r.tv_under_rho2 <= 1e-6);
    CHECK(r.tv_under_rho1 >= 0.05);
    CHECK(r.tv_under_rho1 > r.tv_rho1_min);
    CHECK(r.tv_under_rho2 < r.tv_rho2_max);

    CHECK_THROWS_AS(verify_separation(gauss, gauss, 0.6, 0.9, grid), Error);
    CHECK_THROWS_AS(verify_separation(sinc, gauss, 0.6, 0.9, grid), Error);
    try {
        verify_separation(sinc, sinc, 0.6, 0.9, grid);
        FAIL("expected a band selection error");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::BandSelection);
    }
}

TEST_CASE("distinction order over a corpus", "[distinction]") {
    const GridSpec grid = distinction_grid();
    const std::vector<Measure1D> corpus{
        make_gaussian(0.0, 1.0, grid), make_gaussian(1.0, 0.5, grid), sinc_measure(1.0, grid),
        sinc_measure(0.5, grid),       make_dirac(0.0),               make_uniform(0.0, 2.0, grid),
    };
    std::vector<std::vector<Relation>> rel(corpus.size(), std::vector<Relation>(corpus.size()));
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (std::size_t j = 0; j < corpus.size(); ++j) {
            rel[i][j] = compare(corpus[i], corpus[j]).relation;
        }
    }
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        REQUIRE(rel[i][i] == Relation::Equivalent);
        for (std::size_t j = 0; j < corpus.size(); ++j) {
            REQUIRE(rel[j][i] == flipped(rel[i][j]));
            for (std::size_t k = 0; k < corpus.size(); ++k) {
                if (leq(rel[i][j]) && leq(rel[j][k])) {
                    REQUIRE(leq(rel[i][k]));
                }
            }
        }
    }
    for (const auto &rho : corpus) {
        const auto r = compare(rho, make_dirac(0.0)).relation;
        REQUIRE((r == Relation::LeftLessEq || r == Relation::Equivalent));
    }
    for (const auto &rho : corpus) {
        const auto support = char_support(char_fn(rho, distinction_freqs()));
        double radius = 0.0;
        for (const auto &piece : support) {
            radius = std::max({radius, std::abs(piece.lo), std::abs(piece.hi)});
        }
        REQUIRE(compare(sinc_measure(radius / 2, grid), rho).relation == Relation::LeftLessEq);
    }
}
