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


#include "covobs/r3.hpp"

#include "covobs/error.hpp"
#include "covobs/random.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

namespace covobs::r3 {
namespace {

constexpr std::uint64_t kStreamMeasure = 0x3d01;
constexpr std::uint64_t kStreamGaussian = 0x3d02;
constexpr double kBand = 4.0;
// Two-sample KS critical constant matching a 4 sigma two-sided level.
constexpr double kKsConstant = 2.276;

/// Runs fn(shard) for every shard; shards write disjoint output ranges.
template <typename Fn> void for_each_shard(std::size_t n, Fn fn) {
    const std::size_t shards = (n + kShardSize - 1) / kShardSize;
    const std::size_t workers =
        std::min<std::size_t>(shards, std::max(1U, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t s = 0; s < shards; ++s) {
            fn(s);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t s = next++; s < shards; s = next++) {
                fn(s);
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
}

double standard_normal(std::mt19937_64 &engine) {
    // Box-Muller on the explicit uniform mapping keeps clouds reproducible
    // across standard libraries.
    const double u1 = 1.0 - uniform(engine, 0.0, 1.0);
    const double u2 = uniform(engine, 0.0, 1.0);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Vec3 unit_direction(std::mt19937_64 &engine) {
    for (;;) {
        const Vec3 g{standard_normal(engine), standard_normal(engine), standard_normal(engine)};
        const double norm = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
        if (norm > 1e-12) {
            return {g[0] / norm, g[1] / norm, g[2] / norm};
        }
    }
}

/// Inverse-CDF sampler over the atoms and cells of a radial law.
class RadialSampler {
  public:
    explicit RadialSampler(const Measure1D &law) {
        double acc = 0.0;
        for (const auto &atom : law.atoms()) {
            acc += atom.weight;
            cdf_.push_back(acc);
            lo_.push_back(atom.location);
            width_.push_back(0.0);
        }
        if (law.has_density()) {
            const auto &grid = *law.grid();
            for (std::size_t j = 0; j < grid.size(); ++j) {
                if (law.density()[j] > 0.0) {
                    acc += law.density()[j] * grid.dx();
                    cdf_.push_back(acc);
                    lo_.push_back(grid.x(j) - 0.5 * grid.dx());
                    width_.push_back(grid.dx());
                }
            }
        }
        total_ = acc;
    }

    double draw(std::mt19937_64 &engine) const {
        const double u = uniform(engine, 0.0, total_);
        auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
        if (it == cdf_.end()) {
            --it;
        }
        const auto k = static_cast<std::size_t>(it - cdf_.begin());
        const double r = lo_[k] + width_[k] * uniform(engine, 0.0, 1.0);
        return std::max(0.0, r);
    }

  private:
    std::vector<double> cdf_;
    std::vector<double> lo_;
    std::vector<double> width_;
    double total_ = 0.0;
};

void draw_points(const RotInvMeasure3D &rho, std::vector<Vec3> &out, std::uint64_t seed,
                 std::uint64_t stream) {
    const std::optional<RadialSampler> radial =
        rho.radial() ? std::optional<RadialSampler>(*rho.radial()) : std::nullopt;
    for_each_shard(out.size(), [&](std::size_t shard) {
        auto engine = make_engine(seed, stream, shard);
        const std::size_t end = std::min(out.size(), (shard + 1) * kShardSize);
        for (std::size_t i = shard * kShardSize; i < end; ++i) {
            const double u = uniform(engine, 0.0, 1.0);
            if (!radial || u < rho.atom_at_origin()) {
                out[i] = {0.0, 0.0, 0.0};
                continue;
            }
            const double r = radial->draw(engine);
            const Vec3 d = unit_direction(engine);
            out[i] = {r * d[0], r * d[1], r * d[2]};
        }
    });
}

struct Moments {
    Vec3 mean{};
    Vec3 mean_var{};
    std::array<double, 6> second{};
    std::array<double, 6> second_var{};
};

constexpr std::array<std::array<int, 2>, 6> kPairs{{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}}};

Moments moments(const std::vector<Vec3> &pts) {
    Moments m;
    const auto n = static_cast<double>(pts.size());
    std::array<double, 3> s1{};
    std::array<double, 3> s2{};
    std::array<double, 6> t1{};
    std::array<double, 6> t2{};
    for (const auto &p : pts) {
        for (int a = 0; a < 3; ++a) {
            s1[a] += p[a];
            s2[a] += p[a] * p[a];
        }
        for (std::size_t k = 0; k < kPairs.size(); ++k) {
            const double v = p[kPairs[k][0]] * p[kPairs[k][1]];
            t1[k] += v;
            t2[k] += v * v;
        }
    }
    for (int a = 0; a < 3; ++a) {
        m.mean[a] = s1[a] / n;
        m.mean_var[a] = std::max(0.0, s2[a] / n - m.mean[a] * m.mean[a]) / n;
    }
    for (std::size_t k = 0; k < kPairs.size(); ++k) {
        m.second[k] = t1[k] / n;
        m.second_var[k] = std::max(0.0, t2[k] / n - m.second[k] * m.second[k]) / n;
    }
    return m;
}

double z_score(double a, double b, double var_a, double var_b) {
    const double se = std::sqrt(var_a + var_b);
    if (se == 0.0) {
        return a == b ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return std::abs(a - b) / se;
}

std::string pair_name(std::size_t k) {
    static constexpr const char *kAxes = "xyz";
    return std::string("second_") + kAxes[kPairs[k][0]] + kAxes[kPairs[k][1]];
}

} // namespace

// ----------------------------------------------------------- linear algebra

Mat3 identity() { return {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}}; }

Mat3 rotation(const Vec3 &axis, double angle) {
    const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    require(norm > 0.0, ErrorCode::InvalidArgument, "rotation axis must be nonzero");
    const double x = axis[0] / norm;
    const double y = axis[1] / norm;
    const double z = axis[2] / norm;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double t = 1.0 - c;
    return {{{t * x * x + c, t * x * y - s * z, t * x * z + s * y},
             {t * x * y + s * z, t * y * y + c, t * y * z - s * x},
             {t * x * z - s * y, t * y * z + s * x, t * z * z + c}}};
}

Vec3 apply(const Mat3 &r, const Vec3 &v) {
    Vec3 out{};
    for (int i = 0; i < 3; ++i) {
        out[i] = r[i][0] * v[0] + r[i][1] * v[1] + r[i][2] * v[2];
    }
    return out;
}

void require_rotation(const Mat3 &r) {
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double dot = 0.0;
            for (int k = 0; k < 3; ++k) {
                dot += r[k][i] * r[k][j];
            }
            require(std::abs(dot - (i == j ? 1.0 : 0.0)) <= 1e-10, ErrorCode::NotARotation,
                    "matrix is not orthogonal");
        }
    }
    const double det = r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) -
                       r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
                       r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
    require(std::abs(det - 1.0) <= 1e-10, ErrorCode::NotARotation, "determinant is not 1");
}

// ----------------------------------------------------------------- measure

RotInvMeasure3D::RotInvMeasure3D(double atom_at_origin, std::optional<Measure1D> radial)
    : atom_(atom_at_origin), radial_(std::move(radial)) {
    require(atom_ >= 0.0 && atom_ <= 1.0, ErrorCode::InvalidArgument,
            "origin atom weight must lie in [0, 1]");
    if (atom_ >= 1.0 - 1e-12) {
        atom_ = 1.0;
        radial_.reset();
        return;
    }
    require(radial_.has_value(), ErrorCode::InvalidArgument,
            "radial law required when the origin atom is below 1");
    for (const auto &atom : radial_->atoms()) {
        require(atom.location >= 0.0, ErrorCode::InvalidArgument, "radial atoms need r >= 0");
    }
    if (radial_->has_density()) {
        const auto &grid = *radial_->grid();
        for (std::size_t j = 0; j < grid.size(); ++j) {
            require(grid.x(j) >= 0.0 || radial_->density()[j] == 0.0,
                    ErrorCode::InvalidArgument, "radial density must vanish for r < 0");
        }
    }
}

RotInvMeasure3D RotInvMeasure3D::origin() { return {1.0, std::nullopt}; }

RotInvMeasure3D RotInvMeasure3D::sphere(double radius) {
    require(radius > 0.0, ErrorCode::InvalidArgument, "sphere radius must be positive");
    return {0.0, make_dirac(radius)};
}

Measure1D maxwell_radial(double s, const GridSpec &grid) {
    require(s > 0.0, ErrorCode::InvalidArgument, "maxwell scale must be positive");
    require(grid.x_max() >= 9.0 * s && grid.dx() <= 0.25 * s, ErrorCode::GridTooSmall,
            "grid does not resolve the radial law");
    std::vector<double> density(grid.size(), 0.0);
    double mass = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double r = grid.x(j);
        if (r > 0.0) {
            density[j] = r * r * std::exp(-0.5 * r * r / (s * s));
            mass += density[j];
        }
    }
    mass *= grid.dx();
    for (auto &v : density) {
        v /= mass;
    }
    return Measure1D::from_density(grid, std::move(density));
}

// ---------------------------------------------------------------- sampling

SampleCloud3D sample_measure(const RotInvMeasure3D &rho, std::size_t n, std::uint64_t seed) {
    require(n >= 1, ErrorCode::InvalidArgument, "need at least one sample");
    SampleCloud3D cloud;
    cloud.seed = seed;
    cloud.points.resize(n);
    draw_points(rho, cloud.points, seed, kStreamMeasure);
    return cloud;
}

SampleCloud3D gaussian_cloud(const Vec3 &mean, double sigma, std::size_t n, std::uint64_t seed) {
    require(n >= 1 && sigma >= 0.0, ErrorCode::InvalidArgument, "bad gaussian cloud request");
    SampleCloud3D cloud;
    cloud.seed = seed;
    cloud.points.resize(n);
    for_each_shard(n, [&](std::size_t shard) {
        auto engine = make_engine(seed, kStreamGaussian, shard);
        const std::size_t end = std::min(n, (shard + 1) * kShardSize);
        for (std::size_t i = shard * kShardSize; i < end; ++i) {
            for (int a = 0; a < 3; ++a) {
                cloud.points[i][a] = mean[a] + sigma * standard_normal(engine);
            }
        }
    });
    return cloud;
}

SampleCloud3D smeared_output(const RotInvMeasure3D &rho, const SampleCloud3D &state,
                             std::uint64_t seed) {
    SampleCloud3D out;
    out.seed = seed;
    out.points.resize(state.points.size());
    draw_points(rho, out.points, seed, kStreamMeasure);
    for (std::size_t i = 0; i < out.points.size(); ++i) {
        for (int a = 0; a < 3; ++a) {
            out.points[i][a] += state.points[i][a];
        }
    }
    return out;
}

SampleCloud3D rotate(const Mat3 &r, const SampleCloud3D &cloud) {
    SampleCloud3D out{{}, cloud.seed};
    out.points.reserve(cloud.points.size());
    for (const auto &p : cloud.points) {
        out.points.push_back(apply(r, p));
    }
    return out;
}

SampleCloud3D translate(const SampleCloud3D &cloud, const Vec3 &offset) {
    SampleCloud3D out = cloud;
    for (auto &p : out.points) {
        for (int a = 0; a < 3; ++a) {
            p[a] += offset[a];
        }
    }
    return out;
}

Sampler measure_sampler(const RotInvMeasure3D &rho) {
    return [rho](const SampleCloud3D &state, std::uint64_t seed) {
        return smeared_output(rho, state, seed);
    };
}

Sampler offset_sampler(const RotInvMeasure3D &rho, const Vec3 &offset) {
    return [rho, offset](const SampleCloud3D &state, std::uint64_t seed) {
        return translate(smeared_output(rho, state, seed), offset);
    };
}

// ------------------------------------------------------------- statistics

std::array<Vec3, 6> ks_directions() {
    const double h = 1.0 / std::sqrt(2.0);
    const double t = 1.0 / std::sqrt(3.0);
    return {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {h, h, 0.0}, {h, 0.0, -h},
             {t, -t, t}}};
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
    require(!a.empty() && !b.empty(), ErrorCode::InvalidArgument, "KS needs two samples");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const auto na = static_cast<double>(a.size());
    const auto nb = static_cast<double>(b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double worst = 0.0;
    while (i < a.size() && j < b.size()) {
        const double v = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= v) {
            ++i;
        }
        while (j < b.size() && b[j] <= v) {
            ++j;
        }
        worst = std::max(worst, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return worst;
}

RotationReport rotation_covariance_test(const Sampler &sampler, const SampleCloud3D &state,
                                        const Mat3 &r, std::size_t n, std::uint64_t seed) {
    require_rotation(r);
    require(n >= 2 && state.points.size() >= n, ErrorCode::InvalidArgument,
            "state cloud smaller than the requested sample count");
    SampleCloud3D base{{state.points.begin(), state.points.begin() + static_cast<long>(n)},
                       state.seed};
    // A: smear the rotated state.  B: rotate the smeared state.
    const auto lhs = sampler(rotate(r, base), derive_seed(seed, 0xa, 0));
    const auto rhs = rotate(r, sampler(base, derive_seed(seed, 0xb, 0)));

    RotationReport report;
    report.n = n;
    report.seed = seed;
    const Moments ma = moments(lhs.points);
    const Moments mb = moments(rhs.points);
    static constexpr const char *kMeanNames[] = {"mean_x", "mean_y", "mean_z"};
    for (int a = 0; a < 3; ++a) {
        const double z = z_score(ma.mean[a], mb.mean[a], ma.mean_var[a], mb.mean_var[a]);
        report.statistics.push_back({kMeanNames[a], z, kBand, z <= kBand});
    }
    for (std::size_t k = 0; k < kPairs.size(); ++k) {
        const double z = z_score(ma.second[k], mb.second[k], ma.second_var[k], mb.second_var[k]);
        report.statistics.push_back({pair_name(k), z, kBand, z <= kBand});
    }
    const double critical = kKsConstant * std::sqrt(2.0 / static_cast<double>(n));
    const auto dirs = ks_directions();
    for (std::size_t d = 0; d < dirs.size(); ++d) {
        std::vector<double> pa;
        std::vector<double> pb;
        pa.reserve(n);
        pb.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto &u = dirs[d];
            pa.push_back(u[0] * lhs.points[i][0] + u[1] * lhs.points[i][1] + u[2] * lhs.points[i][2]);
            pb.push_back(u[0] * rhs.points[i][0] + u[1] * rhs.points[i][1] + u[2] * rhs.points[i][2]);
        }
        const double ks = ks_statistic(std::move(pa), std::move(pb));
        report.statistics.push_back({"ks_" + std::to_string(d), ks, critical, ks <= critical});
    }
    report.pass = std::all_of(report.statistics.begin(), report.statistics.end(),
                              [](const Statistic &s) { return s.pass; });
    return report;
}

RotationReport rotation_covariance_test(const RotInvMeasure3D &rho, const SampleCloud3D &state,
                                        const Mat3 &r, std::size_t n, std::uint64_t seed) {
    return rotation_covariance_test(measure_sampler(rho), state, r, n, seed);
}

bool sharpness_check(const RotInvMeasure3D &rho) { return rho.atom_at_origin() >= 1.0 - 1e-12; }

// ------------------------------------------------------------------ export

std::string cloud_csv(const SampleCloud3D &cloud) {
    std::ostringstream out;
    out.precision(17);
    out << "x,y,z\n";
    for (const auto &p : cloud.points) {
        out << p[0] << ',' << p[1] << ',' << p[2] << '\n';
    }
    return out.str();
}

std::string cloud_binary(const SampleCloud3D &cloud) {
    std::string out = "{\"n\":" + std::to_string(cloud.points.size()) +
                      ",\"seed\":" + std::to_string(cloud.seed) + "}\n";
    out.reserve(out.size() + 24 * cloud.points.size());
    for (const auto &p : cloud.points) {
        for (double v : p) {
            const auto bits = std::bit_cast<std::uint64_t>(v);
            for (int b = 0; b < 8; ++b) {
                out.push_back(static_cast<char>((bits >> (8 * b)) & 0xffU));
            }
        }
    }
    return out;
}

} // namespace covobs::r3
