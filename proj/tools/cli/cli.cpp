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


#include "cli.hpp"

#include "config.hpp"

#include <covobs/canonical.hpp>
#include <covobs/distinction.hpp>
#include <covobs/error.hpp>
#include <covobs/observable.hpp>
#include <covobs/phasespace.hpp>
#include <covobs/r3.hpp>
#include <covobs/random.hpp>
#include <covobs/resolution.hpp>
#include <covobs/serialize.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>

namespace covobs::cli {
namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Context {
    Config config;
    fs::path out_dir;
    std::uint64_t seed = 0;
    std::ostream *out = nullptr;
};

/// Runs a builder and reattributes library precondition failures to the
/// config field that fed it.
template <typename Fn> auto build(const std::string &field, Fn fn) {
    try {
        return fn();
    } catch (const Error &e) {
        throw ConfigError(field, "invalid value for '" + field + "': " + e.what());
    }
}

GridSpec read_grid(Config &config) {
    const auto n = config.require_uint("grid.n");
    const double length = config.require_double("grid.length");
    return build("grid.n", [&] { return GridSpec(static_cast<std::size_t>(n), length); });
}

Measure1D read_measure(Config &config, const std::string &prefix, const GridSpec &grid) {
    const std::string kind = config.require_string(prefix + ".kind");
    const std::string field = prefix + ".kind";
    if (kind == "gaussian") {
        const double mean = config.get_double(prefix + ".mean", 0.0);
        const double sigma = config.require_double(prefix + ".sigma");
        return build(prefix + ".sigma", [&] { return make_gaussian(mean, sigma, grid); });
    }
    if (kind == "dirac") {
        return make_dirac(config.get_double(prefix + ".t", 0.0));
    }
    if (kind == "uniform") {
        const double centre = config.get_double(prefix + ".center", 0.0);
        const double width = config.require_double(prefix + ".width");
        return build(prefix + ".width", [&] { return make_uniform(centre, width, grid); });
    }
    if (kind == "two_atom") {
        const double d = config.require_double(prefix + ".d");
        return build(prefix + ".d", [&] {
            return mix(std::vector<WeightedMeasure>{{0.5, make_dirac(-d)}, {0.5, make_dirac(d)}});
        });
    }
    if (kind == "sinc") {
        const double a = config.require_double(prefix + ".a");
        return build(prefix + ".a", [&] { return sinc_measure(a, grid); });
    }
    throw ConfigError(field, "unsupported '" + field + "' value '" + kind +
                                 "' (gaussian, dirac, uniform, two_atom, sinc)");
}

WaveFunction read_state(Config &config, const std::string &prefix, const GridSpec &grid) {
    const std::string kind = config.get_string(prefix + ".kind", "gaussian");
    const std::string field = prefix + ".kind";
    return build(field, [&]() -> WaveFunction {
        if (kind == "gaussian") {
            return gaussian_packet(grid, config.get_double(prefix + ".center", 0.0),
                                   config.get_double(prefix + ".sigma", 1.0),
                                   config.get_double(prefix + ".momentum", 0.0));
        }
        if (kind == "vacuum") {
            return gaussian_packet(grid, 0.0, 1.0 / std::numbers::sqrt2);
        }
        if (kind == "squeezed") {
            return squeezed_vacuum(grid, config.require_double(prefix + ".s")).components()[0].state;
        }
        if (kind == "hermite") {
            const auto order = static_cast<unsigned>(config.get_uint(prefix + ".order", 0));
            auto h = hermite_function(grid, order, config.get_double(prefix + ".scale", 1.0));
            h = boost(h, config.get_double(prefix + ".momentum", 0.0));
            return translate(h, config.get_double(prefix + ".center", 0.0));
        }
        throw ConfigError(field, "unsupported '" + field + "' value '" + kind +
                                     "' (gaussian, vacuum, squeezed, hermite)");
    });
}

ObservableKind read_kind(Config &config) {
    const std::string kind = config.get_string("observable", "position");
    if (kind == "position") {
        return ObservableKind::Position;
    }
    if (kind == "momentum") {
        return ObservableKind::Momentum;
    }
    throw ConfigError("observable", "'observable' must be position or momentum, got '" + kind + "'");
}

Json parsed(const std::string &text) { return Json::parse(text); }

void emit(const Context &ctx, const std::string &name, const std::string &content) {
    const fs::path path = ctx.out_dir / name;
    write_atomically(path.string(), content);
    *ctx.out << "wrote " << path.string() << '\n';
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

Json header(const Context &ctx, const std::string &command) {
    return Json{{"command", command}, {"seed", ctx.seed}};
}

Json summary_of(const Measure1D &m) {
    return Json{{"mean", m.mean()}, {"variance", m.variance()}, {"mass", m.total_mass()}};
}

// ---------------------------------------------------------------- commands

int cmd_distribution(Context &ctx) {
    Config &c = ctx.config;
    const GridSpec grid = read_grid(c);
    const ObservableKind kind = read_kind(c);
    const WaveFunction psi = read_state(c, "state", grid);
    const GridSpec smear_grid = kind == ObservableKind::Position ? grid : grid.conjugate();
    const Measure1D smear = read_measure(c, "smear", smear_grid);
    c.reject_unused();

    const Observable1D obs{kind, smear};
    const auto outcome = build("smear.kind", [&] {
        return outcome_distribution(obs, MixedState::pure(psi));
    });
    Json report = header(ctx, "distribution");
    report["observable"] = kind == ObservableKind::Position ? "position" : "momentum";
    report["grid"] = {{"n", grid.size()}, {"length", grid.length()}};
    report["outcome"] = summary_of(outcome);
    const auto canonical = kind == ObservableKind::Position
                               ? position_distribution(MixedState::pure(psi))
                               : momentum_distribution(MixedState::pure(psi));
    report["canonical"] = summary_of(canonical);
    report["smear"] = summary_of(smear);
    emit(ctx, "distribution.csv", to_csv(outcome));
    emit(ctx, "distribution.json", dump(report));
    return kPass;
}

int cmd_resolution(Context &ctx) {
    Config &c = ctx.config;
    const bool trivial = c.get_string("smear.kind", "") == "trivial";
    ResolutionReport result;
    if (trivial) {
        result = trivial_resolution();
    } else {
        const GridSpec grid = read_grid(c);
        const Measure1D smear = read_measure(c, "smear", grid);
        const double tol = c.get_double("tol", 0.25 * grid.dx());
        result = build("tol", [&] { return limit_of_resolution(smear, tol); });
    }
    const bool has_lo = c.has("expect.min");
    const bool has_hi = c.has("expect.max");
    const double lo = has_lo ? c.require_double("expect.min") : 0.0;
    const double hi = has_hi ? c.require_double("expect.max") : 0.0;
    c.reject_unused();

    const bool pass = (!has_lo || result.gamma >= lo) && (!has_hi || result.gamma <= hi);
    Json report = header(ctx, "resolution");
    report["resolution"] = parsed(to_json(result));
    if (has_lo || has_hi) {
        report["expect"] = {{"min", has_lo ? Json(lo) : Json(nullptr)},
                            {"max", has_hi ? Json(hi) : Json(nullptr)}};
    }
    report["pass"] = pass;
    emit(ctx, "resolution_curve.csv", curve_csv(result));
    emit(ctx, "resolution.json", dump(report));
    return pass ? kPass : kFailed;
}

int cmd_bound(Context &ctx) {
    Config &c = ctx.config;
    const GridSpec grid = read_grid(c);
    const std::string generator = c.get_string("generator.kind", "vacuum");
    const double tol = c.get_double("tol", 0.0);
    std::vector<std::pair<std::string, MixedState>> cases;
    if (generator == "vacuum") {
        cases.emplace_back("vacuum", build("grid.n", [&] { return squeezed_vacuum(grid, 1.0); }));
    } else if (generator == "squeezed") {
        const double s = c.require_double("generator.s");
        cases.emplace_back("squeezed", build("generator.s", [&] { return squeezed_vacuum(grid, s); }));
    } else if (generator == "corpus") {
        const auto size = c.get_uint("corpus.size", 50);
        if (size == 0) {
            throw ConfigError("corpus.size", "'corpus.size' must be positive");
        }
        for (std::uint64_t i = 0; i < size; ++i) {
            auto engine = make_engine(ctx.seed, 0xb0a4d, i);
            cases.emplace_back("mixture_" + std::to_string(i),
                               build("grid.n", [&] { return random_hermite_mixture(grid, engine); }));
        }
    } else {
        throw ConfigError("generator.kind", "'generator.kind' must be vacuum, squeezed or corpus");
    }
    c.reject_unused();

    Json report = header(ctx, "bound");
    report["generator"] = generator;
    report["bound"] = kResolutionProductBound;
    Json rows = Json::array();
    std::string csv = "label,gamma_position,gamma_momentum,product,pass\n";
    bool all = true;
    for (const auto &entry : cases) {
        const std::string &label = entry.first;
        const auto check = build("tol", [&] {
            return resolution_product_check(PhaseSpaceObservable{entry.second}, tol);
        });
        Json row = parsed(to_json(check));
        row["label"] = label;
        rows.push_back(row);
        all = all && check.pass;
        csv += label + "," + Json(check.position.gamma).dump() + "," +
               Json(check.momentum.gamma).dump() + "," + Json(check.product).dump() + "," +
               (check.pass ? "true" : "false") + "\n";
    }
    report["cases"] = rows;
    report["pass"] = all;
    emit(ctx, "bound.csv", csv);
    emit(ctx, "bound.json", dump(report));
    return all ? kPass : kFailed;
}

int cmd_distinction(Context &ctx) {
    Config &c = ctx.config;
    const GridSpec grid = read_grid(c);
    const Measure1D left = read_measure(c, "left", grid);
    const Measure1D right = read_measure(c, "right", grid);
    const double threshold = c.get_double("threshold", kDefaultSupportThreshold);
    const double xi_max = c.get_double("xi_max", 2.0);
    const bool with_band = c.has("band.a") || c.has("band.b");
    const double a = with_band ? c.require_double("band.a") : 0.0;
    const double b = with_band ? c.require_double("band.b") : 0.0;
    c.reject_unused();

    const FreqGrid freqs = build("xi_max", [&] { return FreqGrid::lattice(grid, xi_max); });
    const auto verdict = build("threshold", [&] { return compare(left, right, freqs, threshold); });
    Json report = header(ctx, "distinction");
    report["verdict"] = parsed(to_json(verdict));
    bool pass = true;
    if (with_band) {
        try {
            const auto sep = verify_separation(left, right, a, b, grid, threshold);
            report["separation"] = parsed(to_json(sep));
            pass = sep.pass;
        } catch (const Error &e) {
            if (e.code() != ErrorCode::BandSelection) {
                throw;
            }
            report["separation"] = {{"error", e.what()}, {"pass", false}};
            pass = false;
        }
    }
    report["pass"] = pass;
    emit(ctx, "distinction.json", dump(report));
    return pass ? kPass : kFailed;
}

r3::Mat3 read_rotation(Config &c) {
    const std::string axis = c.get_string("rotation.axis", "z");
    const double degrees = c.get_double("rotation.angle", 90.0);
    r3::Vec3 v{};
    if (axis == "x") {
        v = {1.0, 0.0, 0.0};
    } else if (axis == "y") {
        v = {0.0, 1.0, 0.0};
    } else if (axis == "z") {
        v = {0.0, 0.0, 1.0};
    } else if (axis == "diagonal") {
        v = {1.0, 1.0, 1.0};
    } else {
        throw ConfigError("rotation.axis", "'rotation.axis' must be x, y, z or diagonal");
    }
    return r3::rotation(v, degrees * std::numbers::pi / 180.0);
}

int cmd_r3(Context &ctx) {
    Config &c = ctx.config;
    const double atom = c.get_double("rho.atom", 0.0);
    const std::string radial = c.get_string("rho.radial", "maxwell");
    std::optional<Measure1D> law;
    if (atom < 1.0) {
        if (radial == "maxwell") {
            const GridSpec grid = read_grid(c);
            const double s = c.get_double("rho.scale", 1.0);
            law = build("rho.scale", [&] { return r3::maxwell_radial(s, grid); });
        } else if (radial == "sphere") {
            law = make_dirac(c.require_double("rho.radius"));
        } else {
            throw ConfigError("rho.radial", "'rho.radial' must be maxwell or sphere");
        }
    }
    const auto rho = build("rho.atom", [&] { return r3::RotInvMeasure3D(atom, law); });
    const auto n = c.get_uint("n", 100000);
    const double sigma = c.get_double("state.sigma", 1.0);
    const r3::Vec3 centre{c.get_double("state.x", 0.0), c.get_double("state.y", 0.0),
                          c.get_double("state.z", 0.0)};
    const r3::Mat3 r = read_rotation(c);
    const bool control = c.has("control.offset");
    const double offset = control ? c.require_double("control.offset") : 0.0;
    const bool export_cloud = c.get_bool("export.cloud", false);
    // grid.* only matters for the maxwell law; accept it either way.
    c.get_string("grid.n", "");
    c.get_string("grid.length", "");
    c.reject_unused();
    if (n < 2) {
        throw ConfigError("n", "'n' must be at least 2");
    }

    const auto cloud = build("state.sigma", [&] {
        return r3::gaussian_cloud(centre, sigma, n, derive_seed(ctx.seed, 1, 0));
    });
    const auto sampler = control ? r3::offset_sampler(rho, {offset, 0.0, 0.0})
                                 : r3::measure_sampler(rho);
    const auto test = build("rotation.axis", [&] {
        return r3::rotation_covariance_test(sampler, cloud, r, n, derive_seed(ctx.seed, 2, 0));
    });
    Json report = header(ctx, "r3");
    report["sharp"] = r3::sharpness_check(rho);
    report["control"] = control;
    report["rotation"] = parsed(to_json(test));
    report["pass"] = test.pass;
    if (export_cloud) {
        const auto smeared = r3::smeared_output(rho, cloud, derive_seed(ctx.seed, 3, 0));
        emit(ctx, "r3_cloud.csv", r3::cloud_csv(smeared));
        emit(ctx, "r3_cloud.bin", r3::cloud_binary(smeared));
    }
    emit(ctx, "r3.json", dump(report));
    return test.pass ? kPass : kFailed;
}

int cmd_battery(Context &ctx) {
    Config &c = ctx.config;
    const GridSpec grid = read_grid(c);
    const ObservableKind kind = read_kind(c);
    const GridSpec smear_grid = kind == ObservableKind::Position ? grid : grid.conjugate();
    const Measure1D smear = read_measure(c, "smear", smear_grid);
    const auto trials = c.get_uint("trials", 20);
    const bool control = c.has("control.offset");
    const double offset = control ? c.require_double("control.offset") : 0.0;
    c.reject_unused();
    if (trials == 0) {
        throw ConfigError("trials", "'trials' must be positive");
    }
    if (control && kind != ObservableKind::Position) {
        throw ConfigError("control.offset", "the broken control model is position-only");
    }

    const auto result = build("smear.kind", [&] {
        if (control) {
            return model_battery(kind, split_smear_model(smear, offset),
                                 static_cast<unsigned>(trials), ctx.seed, grid);
        }
        return covariance_battery(Observable1D{kind, smear}, static_cast<unsigned>(trials),
                                  ctx.seed, grid);
    });
    Json report = header(ctx, "battery");
    report["control"] = control;
    report["battery"] = parsed(to_json(result));
    report["pass"] = result.pass;
    emit(ctx, "battery.json", dump(report));
    return result.pass ? kPass : kFailed;
}

} // namespace

void write_atomically(const std::string &path, const std::string &content) {
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        }
        file << content;
        file.flush();
        if (!file) {
            throw std::runtime_error("failed writing '" + tmp.string() + "'");
        }
    }
    fs::rename(tmp, target);
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"covobs: covariant position and momentum observables"};
    app.require_subcommand(1);

    struct Flags {
        std::string config;
        std::string out = ".";
        std::optional<std::uint64_t> seed;
        std::optional<std::uint64_t> grid_n;
        std::optional<double> grid_length;
        std::optional<double> tol;
    } flags;

    using Command = std::function<int(Context &)>;
    const std::vector<std::tuple<std::string, std::string, Command>> commands{
        {"distribution", "outcome distribution of a smeared observable", cmd_distribution},
        {"resolution", "limit of resolution of a smearing measure", cmd_resolution},
        {"bound", "resolution product bound for phase-space margins", cmd_bound},
        {"distinction", "distinction ordering and witness separation", cmd_distinction},
        {"r3", "rotation covariance of a smeared observable on R^3", cmd_r3},
        {"battery", "covariance and invariance battery", cmd_battery},
    };
    std::vector<std::pair<CLI::App *, Command>> subs;
    for (const auto &[name, help, fn] : commands) {
        auto *sub = app.add_subcommand(name, help);
        sub->add_option("--config", flags.config, "key = value config file");
        sub->add_option("--out", flags.out, "output directory");
        sub->add_option("--seed", flags.seed, "root random seed (u64)");
        sub->add_option("--grid-n", flags.grid_n, "grid points (power of two)");
        sub->add_option("--grid-length", flags.grid_length, "grid length");
        sub->add_option("--tol", flags.tol, "numeric tolerance");
        subs.emplace_back(sub, fn);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kConfigError;
    }

    try {
        Context ctx;
        ctx.config = flags.config.empty() ? Config() : Config::load(flags.config);
        if (flags.grid_n) {
            ctx.config.set("grid.n", std::to_string(*flags.grid_n));
        }
        if (flags.grid_length) {
            ctx.config.set("grid.length", Json(*flags.grid_length).dump());
        }
        if (flags.tol) {
            ctx.config.set("tol", Json(*flags.tol).dump());
        }
        if (flags.seed) {
            ctx.config.set("seed", std::to_string(*flags.seed));
        }
        ctx.seed = ctx.config.get_uint("seed", 0);
        ctx.out_dir = flags.out;
        ctx.out = &out;
        std::error_code ec;
        fs::create_directories(ctx.out_dir, ec);
        if (ec) {
            throw ConfigError("--out", "cannot create output directory '" + flags.out + "'");
        }
        for (const auto &[sub, fn] : subs) {
            if (sub->parsed()) {
                return fn(ctx);
            }
        }
        return kConfigError;
    } catch (const ConfigError &e) {
        err << "config error [" << e.field() << "]: " << e.what() << '\n';
        return kConfigError;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }
}

} // namespace covobs::cli
