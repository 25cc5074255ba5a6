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


#include "covobs/observable.hpp"

#include "covobs/canonical.hpp"
#include "covobs/error.hpp"
#include "covobs/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace covobs {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double union_mass(const MassProfile &profile, std::span<const Interval> pieces, double s) {
    double total = 0.0;
    for (const auto &piece : pieces) {
        total += profile.mass(piece.lo - s, piece.hi - s);
    }
    return total;
}

/// Shifts s for which rho(X - s) can attain its extremes.
std::vector<double> candidate_shifts(const Measure1D &rho, const IntervalUnion &x_set) {
    std::vector<double> shifts;
    const auto pieces = x_set.pieces();
    if (rho.has_density()) {
        const auto &grid = *rho.grid();
        for (const auto &piece : pieces) {
            const double centre = 0.5 * (piece.lo + piece.hi);
            for (std::size_t j = 0; j < grid.size(); ++j) {
                shifts.push_back(centre - grid.x(j));
            }
        }
    }
    double eta = rho.grid() ? rho.grid()->dx() / 16.0 : std::numeric_limits<double>::infinity();
    for (const auto &piece : pieces) {
        eta = std::min(eta, 0.25 * piece.width());
    }
    if (!std::isfinite(eta) || eta <= 0.0) {
        eta = 1e-9;
    }
    for (const auto &atom : rho.atoms()) {
        for (const auto &piece : pieces) {
            shifts.push_back(piece.lo - atom.location);
            shifts.push_back(piece.hi - atom.location);
            shifts.push_back(piece.lo - atom.location + eta);
            shifts.push_back(piece.hi - atom.location - eta);
            shifts.push_back(0.5 * (piece.lo + piece.hi) - atom.location);
        }
    }
    return shifts;
}

void check_smear_grid(const Observable1D &obs, const GridSpec &state_grid) {
    if (!obs.smear.has_density()) {
        return;
    }
    const GridSpec expected =
        obs.kind == ObservableKind::Position ? state_grid : state_grid.conjugate();
    require(*obs.smear.grid() == expected, ErrorCode::InvalidArgument,
            obs.kind == ObservableKind::Position
                ? "position smear must live on the state grid"
                : "momentum smear must live on the conjugate of the state grid");
}

} // namespace

// ----------------------------------------------------------- IntervalUnion

IntervalUnion::IntervalUnion(std::vector<Interval> pieces) {
    for (const auto &piece : pieces) {
        require(std::isfinite(piece.lo) && std::isfinite(piece.hi) && piece.lo <= piece.hi,
                ErrorCode::InvalidArgument, "interval endpoints must satisfy lo <= hi");
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const Interval &a, const Interval &b) { return a.lo < b.lo; });
    for (const auto &piece : pieces) {
        if (!pieces_.empty() && piece.lo <= pieces_.back().hi) {
            pieces_.back().hi = std::max(pieces_.back().hi, piece.hi);
        } else {
            pieces_.push_back(piece);
        }
    }
}

IntervalUnion IntervalUnion::complement(double lo, double hi) const {
    std::vector<Interval> out;
    double cursor = lo;
    for (const auto &piece : pieces_) {
        if (piece.lo > cursor) {
            out.push_back({cursor, std::min(piece.lo, hi)});
        }
        cursor = std::max(cursor, piece.hi);
        if (cursor >= hi) {
            break;
        }
    }
    if (cursor < hi) {
        out.push_back({cursor, hi});
    }
    std::erase_if(out, [](const Interval &i) { return !(i.hi > i.lo); });
    return IntervalUnion(std::move(out));
}

// ---------------------------------------------------------------- outcomes

Measure1D outcome_distribution(const Observable1D &obs, const MixedState &state,
                               Boundary boundary) {
    check_smear_grid(obs, state.grid());
    const Measure1D canonical = obs.kind == ObservableKind::Position
                                    ? position_distribution(state)
                                    : momentum_distribution(state);
    return convolve(canonical, obs.smear, boundary);
}

double effect_sup(const Observable1D &obs, const IntervalUnion &x_set) {
    if (x_set.empty()) {
        return 0.0;
    }
    const MassProfile profile(obs.smear);
    double best = 0.0;
    for (double s : candidate_shifts(obs.smear, x_set)) {
        best = std::max(best, union_mass(profile, x_set.pieces(), s));
    }
    return std::clamp(best, 0.0, 1.0);
}

double effect_inf(const Observable1D &obs, const IntervalUnion &x_set) {
    if (x_set.empty()) {
        return 0.0;
    }
    const MassProfile profile(obs.smear);
    const Interval hull = obs.smear.support_hull();
    auto shifts = candidate_shifts(obs.smear, x_set);
    shifts.push_back(x_set.hi() - hull.lo + 1.0);
    shifts.push_back(x_set.lo() - hull.hi - 1.0);
    double worst = 1.0;
    for (double s : shifts) {
        worst = std::min(worst, union_mass(profile, x_set.pieces(), s));
    }
    return std::clamp(worst, 0.0, 1.0);
}

bool is_regular_effect(const Observable1D &obs, const IntervalUnion &x_set) {
    require(!x_set.empty(), ErrorCode::InvalidArgument, "effect set must be nonempty");
    const double margin = obs.smear.support_hull().width() + 1.0;
    const IntervalUnion rest = x_set.complement(x_set.lo() - margin, x_set.hi() + margin);
    require(!rest.empty(), ErrorCode::InvalidArgument, "effect complement is empty");
    return effect_sup(obs, x_set) > 0.5 && effect_sup(obs, rest) > 0.5;
}

// ---------------------------------------------------------------- battery

GridSpec battery_grid() { return GridSpec(2048, 64.0); }

WaveFunction random_packet_state(const GridSpec &grid, std::mt19937_64 &engine) {
    const int count = 1 + static_cast<int>(engine() % 3);
    std::vector<Complex> values(grid.size(), Complex{0.0, 0.0});
    for (int c = 0; c < count; ++c) {
        const double centre = uniform(engine, -3.0, 3.0);
        const double sigma = uniform(engine, 0.5, 1.5);
        const double momentum = uniform(engine, -2.0, 2.0);
        const Complex amplitude =
            std::polar(uniform(engine, 0.5, 1.0), uniform(engine, 0.0, kTwoPi));
        const auto packet = gaussian_packet(grid, centre, sigma, momentum);
        for (std::size_t j = 0; j < grid.size(); ++j) {
            values[j] += amplitude * packet[j];
        }
    }
    return WaveFunction(grid, std::move(values)).normalized();
}

BatteryReport model_battery(ObservableKind kind, const OutcomeModel &model, unsigned trials,
                            std::uint64_t seed, const GridSpec &state_grid) {
    require(trials >= 1, ErrorCode::InvalidArgument, "battery needs at least one trial");
    BatteryReport report;
    report.kind = kind;
    report.trials = trials;
    report.seed = seed;
    for (unsigned trial = 0; trial < trials; ++trial) {
        auto engine = make_engine(seed, 0xba77e7, trial);
        const WaveFunction psi = random_packet_state(state_grid, engine);
        const double q = uniform(engine, -3.0, 3.0);
        const double p = uniform(engine, -3.0, 3.0);
        const Measure1D base = model(MixedState::pure(psi));
        const auto translated = model(MixedState::pure(translate(psi, q)));
        const auto boosted = model(MixedState::pure(boost(psi, p)));
        double cov = 0.0;
        double inv = 0.0;
        if (kind == ObservableKind::Position) {
            cov = sup_difference(translated, shift(base, q));
            inv = sup_difference(boosted, base);
        } else {
            cov = sup_difference(boosted, shift(base, p));
            inv = sup_difference(translated, base);
        }
        report.covariance_deviation = std::max(report.covariance_deviation, cov);
        report.invariance_deviation = std::max(report.invariance_deviation, inv);
    }
    report.max_deviation = std::max(report.covariance_deviation, report.invariance_deviation);
    report.pass = report.max_deviation <= report.tolerance;
    return report;
}

BatteryReport covariance_battery(const Observable1D &obs, unsigned trials, std::uint64_t seed,
                                 const GridSpec &state_grid) {
    check_smear_grid(obs, state_grid);
    const OutcomeModel model = [&obs](const MixedState &state) {
        return outcome_distribution(obs, state);
    };
    return model_battery(obs.kind, model, trials, seed, state_grid);
}

OutcomeModel split_smear_model(const Measure1D &rho, double offset) {
    return [rho, offset](const MixedState &state) {
        const Measure1D canonical = position_distribution(state);
        const GridSpec &grid = *canonical.grid();
        std::vector<double> left(grid.size(), 0.0);
        std::vector<double> right(grid.size(), 0.0);
        double left_mass = 0.0;
        double right_mass = 0.0;
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double v = canonical.density()[j];
            if (grid.x(j) < 0.0) {
                left[j] = v;
                left_mass += v * grid.dx();
            } else {
                right[j] = v;
                right_mass += v * grid.dx();
            }
        }
        std::vector<WeightedMeasure> parts;
        auto add_part = [&](std::vector<double> &part, double mass, const Measure1D &smear) {
            if (mass <= 1e-15) {
                return;
            }
            for (auto &v : part) {
                v /= mass;
            }
            parts.push_back({mass, convolve(Measure1D::from_density(grid, part), smear)});
        };
        add_part(left, left_mass, rho);
        add_part(right, right_mass, shift(rho, offset));
        double total = 0.0;
        for (const auto &part : parts) {
            total += part.weight;
        }
        for (auto &part : parts) {
            part.weight /= total;
        }
        return mix(parts);
    };
}

// ------------------------------------------------------------- dilations

DilationClass dilation_classification(const Observable1D &obs, const GridSpec &state_grid) {
    const Measure1D &rho = obs.smear;
    const bool single_atom = rho.atoms().size() == 1 && rho.density_mass() < 1e-9;
    if (single_atom) {
        // Prop.-(b) side: every small window around the atom has norm one.
        for (int k = 0; k <= 12; ++k) {
            const double w = std::ldexp(1.0, -k);
            const IntervalUnion window({{-0.5 * w, 0.5 * w}});
            require(effect_sup(obs, window) >= 1.0 - 1e-12, ErrorCode::InvalidArgument,
                    "sharp observable with an effect of norm < 1");
        }
        const double t = rho.atoms().front().location;
        const Observable1D sharp{obs.kind, make_dirac(t)};
        const GridSpec &grid = state_grid;
        const auto psi = gaussian_packet(grid, -t, 1.0);
        const auto reference = outcome_distribution(sharp, MixedState::pure(psi));
        const std::vector<Complex> samples(reference.density().begin(),
                                           reference.density().end());
        double residual = 0.0;
        for (double a : {0.5, 2.0}) {
            const auto dilated = outcome_distribution(sharp, MixedState::pure(dilate(psi, a, -t)));
            std::vector<double> points(grid.size());
            for (std::size_t j = 0; j < grid.size(); ++j) {
                points[j] = grid.x(j) / a;
            }
            const auto interp = bandlimited_interpolate(grid, samples, points);
            const double edge = 0.5 * grid.length() - grid.dx();
            for (std::size_t j = 0; j < grid.size(); ++j) {
                const double expected =
                    std::abs(points[j]) < edge ? interp[j].real() / a : 0.0;
                residual = std::max(residual, std::abs(dilated.density()[j] - expected));
            }
        }
        return SharpAt{t, residual};
    }

    const double base = std::max(1.0, rho.support_hull().width());
    NotDilationCovariant last{{0.0, 0.0}, 1.0};
    for (int k = 0; k <= 40; ++k) {
        const double w = base * std::ldexp(1.0, -k);
        const IntervalUnion window({{-0.5 * w, 0.5 * w}});
        const double s = effect_sup(obs, window);
        last = {{-0.5 * w, 0.5 * w}, s};
        if (s < 1.0 - 1e-9) {
            break;
        }
    }
    return last;
}

} // namespace covobs
