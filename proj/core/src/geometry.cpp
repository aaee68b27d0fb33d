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

#include "pinchbf/geometry.hpp"

#include <cmath>
#include <iostream>
#include <mutex>
#include <numbers>
#include <string>

#include "pinchbf/rng.hpp"

namespace pinchbf {

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watt_to_dbm(double watt) { return 10.0 * std::log10(watt) + 30.0; }

RfConstants RfConstants::from_frequency(double carrier_frequency_hz, double refractive_index) {
    if (!(carrier_frequency_hz > 0.0) || !std::isfinite(carrier_frequency_hz))
        throw ConfigError("carrier frequency must be positive and finite");
    if (!(refractive_index >= 1.0) || !std::isfinite(refractive_index))
        throw ConfigError("refractive index must be >= 1");
    RfConstants rf;
    rf.carrier_frequency_hz = carrier_frequency_hz;
    rf.wavelength_m = kSpeedOfLight / carrier_frequency_hz;
    rf.wavenumber_k0 = 2.0 * std::numbers::pi / rf.wavelength_m;
    rf.xi = rf.wavelength_m / (4.0 * std::numbers::pi);
    rf.refractive_index = refractive_index;
    return rf;
}

void Scene::validate() const {
    const int m = num_waveguides();
    const int k = num_users();
    if (m < 1) throw ConfigError("scene needs at least one waveguide");
    if (k < 1) throw ConfigError("scene needs at least one user");
    if (!(side_d_m > 0.0)) throw ConfigError("side length must be positive");
    if (!(power_w > 0.0) || !std::isfinite(power_w)) throw ConfigError("power budget must be positive");
    if (!(noise_w > 0.0) || !std::isfinite(noise_w)) throw ConfigError("noise variance must be positive");
    if (!(array.height_a_m > 0.0)) throw ConfigError("waveguide height must be positive");
    if (static_cast<int>(array.lengths_m.size()) != m || static_cast<int>(array.feed_points.size()) != m)
        throw ConfigError("waveguide array is inconsistent with M");
    for (double len : array.lengths_m)
        if (!(len > 0.0) || !std::isfinite(len)) throw ConfigError("waveguide lengths must be positive and finite");
    for (const auto& u : users.positions)
        if (u.z() != 0.0) throw ConfigError("users must lie in the xy-plane");
    if (static_cast<int>(rate_weights.size()) != k) throw ConfigError("one rate weight per user is required");
    bool any_positive = false;
    for (double w : rate_weights) {
        if (!(w >= 0.0)) throw ConfigError("rate weights must be nonnegative");
        any_positive = any_positive || w > 0.0;
    }
    if (!any_positive) throw ConfigError("at least one rate weight must be positive");
    if (shadowing.rows() != k || shadowing.cols() != m) throw ConfigError("shadowing must be K x M");
    if (!(shadowing.array() > 0.0).all()) throw ConfigError("shadowing coefficients must be positive");
}

Scene make_scene(int m, double side_d_m, std::vector<Eigen::Vector3d> user_positions, double power_dbm,
                 const SceneOverrides& overrides) {
    if (m < 1) throw ConfigError("M must be >= 1, got " + std::to_string(m));
    if (user_positions.empty()) throw ConfigError("K must be >= 1");
    if (!(side_d_m > 0.0) || !std::isfinite(side_d_m)) throw ConfigError("side length D must be positive");
    if (!std::isfinite(power_dbm)) throw ConfigError("power must be finite");

    Scene scene;
    scene.rf = RfConstants::from_frequency(overrides.freq_ghz * 1e9, overrides.refractive_index);
    scene.side_d_m = side_d_m;
    scene.power_w = dbm_to_watt(power_dbm);
    scene.noise_w = dbm_to_watt(overrides.noise_dbm);

    auto& array = scene.array;
    array.num_waveguides = m;
    array.height_a_m = overrides.height_a_m;
    if (m >= 2) {
        array.spacing_d_m = side_d_m / static_cast<double>(m - 1);
    } else {
        array.spacing_d_m = 0.0;
        if (overrides.single_waveguide_y_m) {
            array.y_offset_m = *overrides.single_waveguide_y_m;
        } else {
            array.y_offset_m = side_d_m / 2.0;
            static std::once_flag warned;
            std::call_once(warned, [] { std::cerr << "pinchbf: warning: M = 1, placing the waveguide at y = D/2\n"; });
        }
    }
    array.lengths_m.assign(static_cast<std::size_t>(m), side_d_m);
    for (int i = 0; i < m; ++i)
        array.feed_points.emplace_back(0.0, array.y_offset_m + static_cast<double>(i) * array.spacing_d_m,
                                       array.height_a_m);

    const int k = static_cast<int>(user_positions.size());
    scene.users.positions = std::move(user_positions);
    scene.rate_weights.assign(static_cast<std::size_t>(k), 1.0 / static_cast<double>(k));
    scene.shadowing = Eigen::MatrixXd::Ones(k, m);
    scene.validate();
    return scene;
}

Scene build_scene(int m, int k, double side_d_m, double power_dbm, std::uint64_t seed,
                  const SceneOverrides& overrides) {
    if (k < 1) throw ConfigError("K must be >= 1, got " + std::to_string(k));
    if (!(side_d_m > 0.0)) throw ConfigError("side length D must be positive");
    CounterRng rng(seed);
    std::vector<Eigen::Vector3d> users;
    users.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const double x = side_d_m * rng.uniform();
        const double y = side_d_m * rng.uniform();
        users.emplace_back(x, y, 0.0);
    }
    return make_scene(m, side_d_m, std::move(users), power_dbm, overrides);
}

Scene build_scene(const SceneParams& p) {
    return build_scene(p.m, p.k, p.side_d_m, p.power_dbm, p.seed, p.overrides);
}

std::vector<Eigen::Vector3d> fixed_array_positions(const Scene& scene) {
    const double half_lambda = scene.rf.wavelength_m / 2.0;
    std::vector<Eigen::Vector3d> out;
    out.reserve(static_cast<std::size_t>(scene.num_waveguides()));
    for (int m = 0; m < scene.num_waveguides(); ++m)
        out.emplace_back(scene.side_d_m / 2.0, static_cast<double>(m) * half_lambda, scene.array.height_a_m);
    return out;
}

} // namespace pinchbf
