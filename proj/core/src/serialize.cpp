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


#include "covobs/serialize.hpp"

#include "covobs/error.hpp"

#include <json.hpp>

#include <cmath>
#include <limits>
#include <sstream>

namespace covobs {
namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

Json gamma_value(double gamma) {
    if (std::isinf(gamma)) {
        return "inf";
    }
    return gamma;
}

Json resolution_json(const ResolutionReport &report) {
    Json curve = Json::array();
    for (const auto &[alpha, g] : report.curve) {
        curve.push_back({alpha, g});
    }
    return Json{{"gamma", gamma_value(report.gamma)},
                {"tolerance", report.tolerance},
                {"method", report.method},
                {"curve", curve}};
}

Json intervals_json(std::span<const Interval> pieces) {
    Json out = Json::array();
    for (const auto &piece : pieces) {
        out.push_back({piece.lo, piece.hi});
    }
    return out;
}

} // namespace

std::string to_json(const Measure1D &measure) {
    Json j;
    if (measure.grid()) {
        j["grid"] = {{"n", measure.grid()->size()}, {"length", measure.grid()->length()}};
    } else {
        j["grid"] = nullptr;
    }
    j["density"] = std::vector<double>(measure.density().begin(), measure.density().end());
    Json atoms = Json::array();
    for (const auto &atom : measure.atoms()) {
        atoms.push_back({atom.location, atom.weight});
    }
    j["atoms"] = atoms;
    return dump(j);
}

Measure1D measure_from_json(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception &e) {
        raise(ErrorCode::InvalidArgument, std::string("measure JSON: ") + e.what());
    }
    try {
        std::optional<GridSpec> grid;
        if (j.contains("grid") && !j["grid"].is_null()) {
            grid = GridSpec(j["grid"].at("n").get<std::size_t>(), j["grid"].at("length").get<double>());
        }
        std::vector<double> density = j.value("density", std::vector<double>{});
        std::vector<Atom> atoms;
        for (const auto &a : j.value("atoms", Json::array())) {
            atoms.push_back({a.at(0).get<double>(), a.at(1).get<double>()});
        }
        return {grid, std::move(density), std::move(atoms)};
    } catch (const Json::exception &e) {
        raise(ErrorCode::InvalidArgument, std::string("measure JSON: ") + e.what());
    }
}

std::string to_csv(const Measure1D &measure) {
    std::ostringstream out;
    out.precision(17);
    out << "x,density\n";
    if (measure.has_density()) {
        const auto &grid = *measure.grid();
        for (std::size_t j = 0; j < grid.size(); ++j) {
            out << grid.x(j) << ',' << measure.density()[j] << '\n';
        }
    }
    if (!measure.atoms().empty()) {
        out << "\nlocation,weight\n";
        for (const auto &atom : measure.atoms()) {
            out << atom.location << ',' << atom.weight << '\n';
        }
    }
    return out.str();
}

std::string to_json(const BatteryReport &report) {
    return dump(Json{{"max_deviation", report.max_deviation},
                     {"trials", report.trials},
                     {"seed", report.seed},
                     {"pass", report.pass},
                     {"kind", report.kind == ObservableKind::Position ? "position" : "momentum"},
                     {"covariance_deviation", report.covariance_deviation},
                     {"invariance_deviation", report.invariance_deviation},
                     {"tolerance", report.tolerance}});
}

std::string to_json(const ResolutionReport &report) { return dump(resolution_json(report)); }

ResolutionReport resolution_from_json(std::string_view text) {
    try {
        const Json j = Json::parse(text);
        ResolutionReport report;
        const auto &g = j.at("gamma");
        if (g.is_string()) {
            require(g.get<std::string>() == "inf", ErrorCode::InvalidArgument,
                    "gamma must be a number or \"inf\"");
            report.gamma = std::numeric_limits<double>::infinity();
        } else {
            report.gamma = g.get<double>();
        }
        report.tolerance = j.at("tolerance").get<double>();
        report.method = j.value("method", std::string("bisection"));
        for (const auto &point : j.value("curve", Json::array())) {
            report.curve.emplace_back(point.at(0).get<double>(), point.at(1).get<double>());
        }
        return report;
    } catch (const Json::exception &e) {
        raise(ErrorCode::InvalidArgument, std::string("resolution JSON: ") + e.what());
    }
}

std::string curve_csv(const ResolutionReport &report) {
    std::ostringstream out;
    out.precision(17);
    out << "alpha,g\n";
    for (const auto &[alpha, g] : report.curve) {
        out << alpha << ',' << g << '\n';
    }
    return out.str();
}

std::string to_json(const DistinctionVerdict &verdict) {
    return dump(Json{{"relation", std::string(to_string(verdict.relation))},
                     {"threshold", verdict.threshold},
                     {"left_support", intervals_json(verdict.left_support)},
                     {"right_support", intervals_json(verdict.right_support)},
                     {"xi_max", verdict.xi_max},
                     {"xi_step", verdict.xi_step},
                     {"near_threshold", verdict.near_threshold}});
}

std::string to_json(const SeparationReport &report) {
    return dump(Json{{"a", report.a},
                     {"b", report.b},
                     {"tv_under_rho1", report.tv_under_rho1},
                     {"tv_under_rho2", report.tv_under_rho2},
                     {"tv_rho1_min", report.tv_rho1_min},
                     {"tv_rho2_max", report.tv_rho2_max},
                     {"threshold", report.threshold},
                     {"pass", report.pass}});
}

std::string to_json(const ProductReport &report) {
    return dump(Json{{"gamma_position", gamma_value(report.position.gamma)},
                     {"gamma_momentum", gamma_value(report.momentum.gamma)},
                     {"tolerance_position", report.position.tolerance},
                     {"tolerance_momentum", report.momentum.tolerance},
                     {"product", report.product},
                     {"bound", report.bound},
                     {"slack", report.slack},
                     {"pass", report.pass}});
}

std::string to_json(const r3::RotationReport &report) {
    Json stats = Json::array();
    for (const auto &s : report.statistics) {
        stats.push_back(Json{{"name", s.name}, {"value", s.value}, {"limit", s.limit}, {"pass", s.pass}});
    }
    return dump(Json{{"n", report.n}, {"seed", report.seed}, {"pass", report.pass},
                     {"statistics", stats}});
}

} // namespace covobs
