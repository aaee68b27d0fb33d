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

#include <cmath>
#include <numbers>

#include "pinchbf/channel.hpp"
#include "pinchbf/rng.hpp"
#include "pinchbf/types.hpp"

namespace pinchbf::testing {

inline std::complex<double> random_cn(CounterRng& rng) {
    // Box-Muller; unit-variance circular complex Gaussian.
    const double u1 = 1.0 - rng.uniform();
    const double u2 = rng.uniform();
    const double r = std::sqrt(-std::log(u1));
    return std::polar(r, 2.0 * std::numbers::pi * u2);
}

inline Eigen::MatrixXcd random_matrix(CounterRng& rng, Eigen::Index rows, Eigen::Index cols, double scale = 1.0) {
    Eigen::MatrixXcd out(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = scale * random_cn(rng);
    return out;
}

inline PinchLocations random_pinch(const Scene& scene, CounterRng& rng) {
    PinchLocations p;
    for (int m = 0; m < scene.num_waveguides(); ++m)
        p.locations_m.push_back(scene.array.lengths_m[static_cast<std::size_t>(m)] * rng.uniform());
    return p;
}

inline double rel_diff(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

} // namespace pinchbf::testing
