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

#include "pinchbf/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace pinchbf {

namespace {

void check_location(const Scene& scene, int m, double ell) {
    if (m < 0 || m >= scene.num_waveguides())
        throw DomainError("waveguide index " + std::to_string(m) + " out of range");
    const double len = scene.array.lengths_m[static_cast<std::size_t>(m)];
    if (!(ell >= 0.0 && ell <= len))
        throw DomainError("pinch location " + std::to_string(ell) + " outside [0, " + std::to_string(len) +
                          "] on waveguide " + std::to_string(m));
}

void check_user(const Scene& scene, int k) {
    if (k < 0 || k >= scene.num_users()) throw DomainError("user index " + std::to_string(k) + " out of range");
}

} // namespace

bool PinchLocations::within(const Scene& scene) const {
    if (size() != scene.num_waveguides()) return false;
    for (int m = 0; m < size(); ++m) {
        const double ell = (*this)[m];
        if (!(ell >= 0.0 && ell <= scene.array.lengths_m[static_cast<std::size_t>(m)])) return false;
    }
    return true;
}

double element_user_distance(const Scene& scene, int m, int k, double ell) {
    check_location(scene, m, ell);
    check_user(scene, k);
    const auto& u = scene.users.positions[static_cast<std::size_t>(k)];
    const double dx = ell - u.x();
    const double dy = scene.array.waveguide_y(m) - u.y();
    const double a = scene.array.height_a_m;
    return std::sqrt(dx * dx + dy * dy + a * a);
}

double pinch_phase(const Scene& scene, double ell) {
    return 2.0 * std::numbers::pi * scene.rf.refractive_index * std::abs(ell) / scene.rf.wavelength_m;
}

cplx unit_phasor(double phase) {
    const double reduced = std::fmod(phase, 2.0 * std::numbers::pi);
    return {std::cos(reduced), -std::sin(reduced)};
}

cplx location_factor(const Scene& scene, int m, int k, double ell) {
    const double dist = element_user_distance(scene, m, k, ell);
    const double phase = scene.rf.wavenumber_k0 * (dist + scene.rf.refractive_index * ell);
    return unit_phasor(phase) / dist;
}

cplx effective_channel_entry(const Scene& scene, int m, int k, double ell) {
    const cplx env(scene.rf.xi * scene.shadowing(k, m), 0.0);
    return env * location_factor(scene, m, k, ell);
}

Eigen::VectorXcd channel_column(const Scene& scene, int m, double ell) {
    Eigen::VectorXcd col(scene.num_users());
    for (int k = 0; k < scene.num_users(); ++k) col(k) = effective_channel_entry(scene, m, k, ell);
    return col;
}

ChannelMatrix build_channel_matrix(const Scene& scene, const PinchLocations& pinch) {
    if (pinch.size() != scene.num_waveguides())
        throw DimensionError("expected " + std::to_string(scene.num_waveguides()) + " pinch locations, got " +
                             std::to_string(pinch.size()));
    ChannelMatrix g(scene.num_users(), scene.num_waveguides());
    for (int m = 0; m < scene.num_waveguides(); ++m) g.col(m) = channel_column(scene, m, pinch[m]);
    return g;
}

ChannelDecomposition decompose_channel(const Scene& scene, const PinchLocations& pinch, int k) {
    check_user(scene, k);
    if (pinch.size() != scene.num_waveguides()) throw DimensionError("pinch locations do not match M");
    const int m_count = scene.num_waveguides();
    ChannelDecomposition out;
    out.env_vector_g0.resize(m_count);
    out.location_diag_lk.resize(m_count);
    for (int m = 0; m < m_count; ++m) {
        out.env_vector_g0(m) = cplx(scene.rf.xi * scene.shadowing(k, m), 0.0);
        out.location_diag_lk(m) = location_factor(scene, m, k, pinch[m]);
    }
    return out;
}

ChannelMatrix fixed_channel_matrix(const Scene& scene) {
    const auto antennas = fixed_array_positions(scene);
    ChannelMatrix h(scene.num_users(), scene.num_waveguides());
    for (int k = 0; k < scene.num_users(); ++k) {
        const auto& u = scene.users.positions[static_cast<std::size_t>(k)];
        for (int m = 0; m < scene.num_waveguides(); ++m) {
            const double dist = (antennas[static_cast<std::size_t>(m)] - u).norm();
            const cplx env(scene.rf.xi * scene.shadowing(k, m), 0.0);
            h(k, m) = env * (unit_phasor(scene.rf.wavenumber_k0 * dist) / dist);
        }
    }
    return h;
}

} // namespace pinchbf
