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

#include "pinchbf/metrics.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace pinchbf {

namespace {

void check_shapes(const ChannelMatrix& g, const Precoder& w, int k) {
    if (g.cols() != w.rows())
        throw DimensionError("channel has " + std::to_string(g.cols()) + " columns but precoder has " +
                             std::to_string(w.rows()) + " rows");
    if (g.rows() != w.cols())
        throw DimensionError("channel has " + std::to_string(g.rows()) + " users but precoder has " +
                             std::to_string(w.cols()) + " columns");
    if (k < 0 || k >= g.rows()) throw DimensionError("user index " + std::to_string(k) + " out of range");
}

void check_weights(const ChannelMatrix& g, std::span<const double> weights) {
    if (static_cast<Eigen::Index>(weights.size()) != g.rows()) throw DimensionError("one weight per user required");
}

struct SinrTerms {
    double signal = 0.0;
    double interference = 0.0;
};

SinrTerms sinr_terms(const ChannelMatrix& g, const Precoder& w, int k) {
    const Eigen::RowVectorXcd gw = g.row(k) * w;
    SinrTerms t;
    for (Eigen::Index j = 0; j < gw.size(); ++j) {
        const double p = std::norm(gw(j));
        if (j == k)
            t.signal = p;
        else
            t.interference += p;
    }
    return t;
}

} // namespace

double sinr(const ChannelMatrix& g, const Precoder& w, double noise_w, int k) {
    check_shapes(g, w, k);
    if (!(noise_w > 0.0)) throw DomainError("noise variance must be positive");
    const auto t = sinr_terms(g, w, k);
    return t.signal / (t.interference + noise_w);
}

double scaled_sinr(const ChannelMatrix& g, const Precoder& w, double noise_w, double power_w, int k) {
    check_shapes(g, w, k);
    if (!(power_w > 0.0)) throw DomainError("power budget must be positive");
    const auto t = sinr_terms(g, w, k);
    const double denom = t.interference + noise_w / power_w * precoder_power(w);
    if (t.signal == 0.0 || denom == 0.0) return 0.0;
    return t.signal / denom;
}

double weighted_sum_rate_nats(const ChannelMatrix& g, const Precoder& w, double noise_w,
                              std::span<const double> weights) {
    check_weights(g, weights);
    double total = 0.0;
    for (int k = 0; k < g.rows(); ++k) total += weights[static_cast<std::size_t>(k)] * std::log1p(sinr(g, w, noise_w, k));
    return total;
}

double weighted_sum_rate(const ChannelMatrix& g, const Precoder& w, double noise_w, std::span<const double> weights) {
    return weighted_sum_rate_nats(g, w, noise_w, weights) / std::numbers::ln2;
}

double scaled_weighted_sum_rate(const ChannelMatrix& g, const Precoder& w, double noise_w, double power_w,
                                std::span<const double> weights) {
    check_weights(g, weights);
    double total = 0.0;
    for (int k = 0; k < g.rows(); ++k)
        total += weights[static_cast<std::size_t>(k)] * std::log1p(scaled_sinr(g, w, noise_w, power_w, k));
    return total;
}

RateReport rate_report(const ChannelMatrix& g, const Precoder& w, double noise_w, std::span<const double> weights) {
    check_weights(g, weights);
    RateReport r;
    for (int k = 0; k < g.rows(); ++k) {
        const double s = sinr(g, w, noise_w, k);
        const double rate = std::log1p(s) / std::numbers::ln2;
        r.per_user_sinr.push_back(s);
        r.per_user_rate_bits.push_back(rate);
        r.weighted_sum_rate_bits += weights[static_cast<std::size_t>(k)] * rate;
    }
    return r;
}

Precoder enforce_power_equality(const Precoder& w, double power_w) {
    if (!(power_w > 0.0)) throw DomainError("power budget must be positive");
    const double current = precoder_power(w);
    if (!(current > 0.0) || !std::isfinite(current))
        throw NumericalError("cannot scale a zero or non-finite precoder to the power budget");
    return w * std::sqrt(power_w / current);
}

} // namespace pinchbf
