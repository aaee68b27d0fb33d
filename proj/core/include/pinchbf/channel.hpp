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

#include <vector>

#include "pinchbf/geometry.hpp"
#include "pinchbf/types.hpp"

namespace pinchbf {

/// One element position per waveguide, metres from the feed point.
struct PinchLocations {
    std::vector<double> locations_m;

    int size() const { return static_cast<int>(locations_m.size()); }
    double operator[](int m) const { return locations_m[static_cast<std::size_t>(m)]; }
    double& operator[](int m) { return locations_m[static_cast<std::size_t>(m)]; }

    /// True when 0 <= l_m <= L_m for every waveguide of the scene.
    bool within(const Scene& scene) const;
};

/// Location-independent environment vector and the per-user location diagonal.
struct ChannelDecomposition {
    Eigen::VectorXcd env_vector_g0;    // xi * [alpha_{1,k}, ..., alpha_{M,k}]
    Eigen::VectorXcd location_diag_lk; // diagonal of L_k(l)
};

/// Element-to-user distance; never below the waveguide height a.
double element_user_distance(const Scene& scene, int m, int k, double ell);

/// In-guide phase 2 pi n |l| / lambda accumulated from the feed point.
double pinch_phase(const Scene& scene, double ell);

/// exp(-j phase) with the phase reduced mod 2 pi first.
cplx unit_phasor(double phase);

/// exp(-j k0 (D + n l)) / D, the location-dependent factor of entry (k, m).
cplx location_factor(const Scene& scene, int m, int k, double ell);

/// g_{m,k}(l) = xi alpha exp(-j k0 (D + n l)) / D.
cplx effective_channel_entry(const Scene& scene, int m, int k, double ell);

/// Column m of G(l): entries for every user at element position ell.
Eigen::VectorXcd channel_column(const Scene& scene, int m, double ell);

/// K x M channel, row k = g_k^T(l).
ChannelMatrix build_channel_matrix(const Scene& scene, const PinchLocations& pinch);

ChannelDecomposition decompose_channel(const Scene& scene, const PinchLocations& pinch, int k);

/// LoS channel from the fixed half-wavelength array; no in-guide phase.
ChannelMatrix fixed_channel_matrix(const Scene& scene);

} // namespace pinchbf
