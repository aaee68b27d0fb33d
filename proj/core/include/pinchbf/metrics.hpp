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

#include <span>
#include <vector>

#include "pinchbf/types.hpp"

namespace pinchbf {

struct RateReport {
    std::vector<double> per_user_sinr;
    std::vector<double> per_user_rate_bits;
    double weighted_sum_rate_bits = 0.0;
};

/// |g_k^T w_k|^2 / (sum_{j != k} |g_k^T w_j|^2 + sigma^2). Zero for W = 0.
double sinr(const ChannelMatrix& g, const Precoder& w, double noise_w, int k);

/// SINR with the noise replaced by (sigma^2 / P) tr(W^H W). Invariant under W -> cW.
double scaled_sinr(const ChannelMatrix& g, const Precoder& w, double noise_w, double power_w, int k);

double weighted_sum_rate(const ChannelMatrix& g, const Precoder& w, double noise_w, std::span<const double> weights);
double weighted_sum_rate_nats(const ChannelMatrix& g, const Precoder& w, double noise_w,
                              std::span<const double> weights);

/// sum_k lambda_k ln(1 + scaled SINR_k), the objective the optimizer climbs.
double scaled_weighted_sum_rate(const ChannelMatrix& g, const Precoder& w, double noise_w, double power_w,
                                std::span<const double> weights);

RateReport rate_report(const ChannelMatrix& g, const Precoder& w, double noise_w, std::span<const double> weights);

/// Rescales W so that tr(W^H W) = P. Throws NumericalError for W = 0.
Precoder enforce_power_equality(const Precoder& w, double power_w);

/// tr(W^H W).
inline double precoder_power(const Precoder& w) { return w.squaredNorm(); }

} // namespace pinchbf
