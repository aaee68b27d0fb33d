// SPDX-License-Identifier: Apache-2.0
//
// pinchbf - pinching-antenna multiuser downlink beamforming
// Copyright (C) 2026 The pinchbf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "pinchbf/types.hpp"

namespace pinchbf {

/// Speed of light used for every wavelength computation [m/s].
inline constexpr double kSpeedOfLight = 2.998e8;

double dbm_to_watt(double dbm);
double watt_to_dbm(double watt);

/// Carrier-derived constants. Built only through from_frequency() so the
/// relations between the fields always hold.
struct RfConstants {
    double carrier_frequency_hz = 0.0;
    double wavelength_m = 0.0;
    double wavenumber_k0 = 0.0;  // 2 pi / lambda
    double xi = 0.0;             // lambda / (4 pi)
    double refractive_index = 1.0;

    static RfConstants from_frequency(double carrier_frequency_hz, double refractive_index);
};

/// M parallel waveguides along x at height a; waveguide m is fed at
/// [0, y_offset + m d, a] (zero-based m).
struct WaveguideArray {
    int num_waveguides = 0;
    double height_a_m = 0.0;
    double spacing_d_m = 0.0;
    double y_offset_m = 0.0;  // nonzero only for the single-waveguide layout
    std::vector<double> lengths_m;
    std::vector<Eigen::Vector3d> feed_points;

    double waveguide_y(int m) const { return feed_points[static_cast<std::size_t>(m)].y(); }
};

struct UserLayout {
    std::vector<Eigen::Vector3d> positions;  // all z = 0

    int num_users() const { return static_cast<int>(positions.size()); }
};

/// A complete static problem instance. Power and noise are linear watts.
struct Scene {
    RfConstants rf;
    WaveguideArray array;
    UserLayout users;
    double side_d_m = 0.0;
    double power_w = 0.0;
    double noise_w = 0.0;
    std::vector<double> rate_weights;  // lambda_k
    Eigen::MatrixXd shadowing;         // K x M, alpha_{m,k} stored at (k, m)

    int num_waveguides() const { return array.num_waveguides; }
    int num_users() const { return users.num_users(); }

    /// Throws ConfigError when any invariant is violated.
    void validate() const;
};

/// Physical defaults that are not swept by the experiments.
struct SceneOverrides {
    double noise_dbm = -90.0;
    double freq_ghz = 28.0;
    double refractive_index = 1.44;
    double height_a_m = 3.0;
    // Lateral position of the lone waveguide when M = 1. Defaults to D/2 with a warning.
    std::optional<double> single_waveguide_y_m;
};

/// Everything needed to draw a random scene. Mirrors the flat config file.
struct SceneParams {
    int m = 4;
    int k = 4;
    double side_d_m = 30.0;
    double power_dbm = 20.0;
    std::uint64_t seed = 1;
    SceneOverrides overrides;
};

/// Scene with explicit user positions. Spacing d = D/(M-1), lengths L_m = D,
/// uniform weights 1/K and unit shadowing.
Scene make_scene(int m, double side_d_m, std::vector<Eigen::Vector3d> user_positions, double power_dbm,
                 const SceneOverrides& overrides = {});

/// Users i.i.d. uniform over [0, D] x [0, D] in the xy-plane, drawn from CounterRng(seed).
Scene build_scene(int m, int k, double side_d_m, double power_dbm, std::uint64_t seed,
                  const SceneOverrides& overrides = {});
Scene build_scene(const SceneParams& params);

/// Conventional half-wavelength array: [D/2, m lambda/2, a] for zero-based m.
std::vector<Eigen::Vector3d> fixed_array_positions(const Scene& scene);

} // namespace pinchbf
