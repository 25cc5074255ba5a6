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


#pragma once

#include "covobs/measure.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace covobs::r3 {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

Mat3 identity();
/// Rotation by `angle` radians about the unit vector `axis`.
Mat3 rotation(const Vec3 &axis, double angle);
Vec3 apply(const Mat3 &r, const Vec3 &v);
/// Raises not-a-rotation unless R^T R = I and det R = 1 within 1e-10.
void require_rotation(const Mat3 &r);

/**
 * Rotation-invariant probability measure on R^3: an atom at the origin of
 * weight `atom` plus (1 - atom) times radial law x uniform sphere.  The
 * radial law is stored normalized to mass one and supported on r >= 0.
 */
class RotInvMeasure3D {
  public:
    RotInvMeasure3D(double atom_at_origin, std::optional<Measure1D> radial);

    static RotInvMeasure3D origin();
    static RotInvMeasure3D sphere(double radius);

    [[nodiscard]] double atom_at_origin() const noexcept { return atom_; }
    [[nodiscard]] double radial_mass() const noexcept { return 1.0 - atom_; }
    [[nodiscard]] const std::optional<Measure1D> &radial() const noexcept { return radial_; }

  private:
    double atom_;
    std::optional<Measure1D> radial_;
};

/// Radial law of an isotropic Gaussian with per-axis deviation s:
/// density proportional to r^2 exp(-r^2 / 2 s^2) on r >= 0.
Measure1D maxwell_radial(double s, const GridSpec &grid);

struct SampleCloud3D {
    std::vector<Vec3> points;
    std::uint64_t seed = 0;
};

inline constexpr std::size_t kShardSize = 8192;

SampleCloud3D sample_measure(const RotInvMeasure3D &rho, std::size_t n, std::uint64_t seed);

/// Isotropic Gaussian cloud: a Monte-Carlo stand-in for a state's |f|^2.
SampleCloud3D gaussian_cloud(const Vec3 &mean, double sigma, std::size_t n, std::uint64_t seed);

/// q_i + y_i with y_i drawn independently from rho.
SampleCloud3D smeared_output(const RotInvMeasure3D &rho, const SampleCloud3D &state,
                             std::uint64_t seed);

SampleCloud3D rotate(const Mat3 &r, const SampleCloud3D &cloud);
SampleCloud3D translate(const SampleCloud3D &cloud, const Vec3 &offset);

/// A smearing procedure in sampling form.
using Sampler = std::function<SampleCloud3D(const SampleCloud3D &, std::uint64_t)>;

Sampler measure_sampler(const RotInvMeasure3D &rho);
/// rho followed by a fixed offset: not rotation invariant unless offset = 0.
Sampler offset_sampler(const RotInvMeasure3D &rho, const Vec3 &offset);

struct Statistic {
    std::string name;
    double value;
    double limit;
    bool pass;
};

struct RotationReport {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::vector<Statistic> statistics;
    bool pass = false;
};

/// The six slicing directions of the KS statistic.
std::array<Vec3, 6> ks_directions();

RotationReport rotation_covariance_test(const RotInvMeasure3D &rho, const SampleCloud3D &state,
                                        const Mat3 &r, std::size_t n, std::uint64_t seed);

RotationReport rotation_covariance_test(const Sampler &sampler, const SampleCloud3D &state,
                                        const Mat3 &r, std::size_t n, std::uint64_t seed);

/// Two-sample KS distance between two sets of reals.
double ks_statistic(std::vector<double> a, std::vector<double> b);

bool sharpness_check(const RotInvMeasure3D &rho);

std::string cloud_csv(const SampleCloud3D &cloud);
/// JSON header line {n, seed}, then little-endian float64 x,y,z triples.
std::string cloud_binary(const SampleCloud3D &cloud);

} // namespace covobs::r3
