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

#include "pinchbf/fpbcd.hpp"

namespace pinchbf {

/// Condition number of G G^H above which ZF is reported as failed.
inline constexpr double kZfMaxCondition = 1e12;

/// Conventional half-wavelength array with the digital FP loop (no element movement).
SolverResult solve_fixed_antenna(const Scene& scene, const SolverConfig& config);

/// Zero-forcing G^H (G G^H)^{-1} with equal per-user power sqrt(P/K).
/// Throws NumericalError when K > M or G G^H is ill-conditioned.
Precoder zf_precoder(const ChannelMatrix& g, double power_w);

/// Matched filter with equal per-user power; same construction as the solver's initializer.
Precoder mrt_precoder(const ChannelMatrix& g, double power_w);

} // namespace pinchbf
