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

#include "pinchbf/baselines.hpp"

#include <cmath>
#include <string>

namespace pinchbf {

SolverResult solve_fixed_antenna(const Scene& scene, const SolverConfig& config) {
    return solve_precoder_only(scene, fixed_channel_matrix(scene), config);
}

Precoder zf_precoder(const ChannelMatrix& g, double power_w) {
    if (!(power_w > 0.0)) throw DomainError("power budget must be positive");
    if (g.rows() > g.cols())
        throw NumericalError("ZF needs K <= M (K = " + std::to_string(g.rows()) + ", M = " +
                             std::to_string(g.cols()) + ")");
    const Eigen::MatrixXcd gram = g * g.adjoint();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram, Eigen::EigenvaluesOnly);
    const double lo = eig.eigenvalues().minCoeff();
    const double hi = eig.eigenvalues().maxCoeff();
    if (!(lo > 0.0) || hi / lo > kZfMaxCondition) throw NumericalError("channel is rank deficient for ZF");

    Precoder w = g.adjoint() * gram.llt().solve(Eigen::MatrixXcd::Identity(g.rows(), g.rows()));
    const double per_user = std::sqrt(power_w / static_cast<double>(g.rows()));
    for (Eigen::Index k = 0; k < w.cols(); ++k) w.col(k) *= per_user / w.col(k).norm();
    return w;
}

Precoder mrt_precoder(const ChannelMatrix& g, double power_w) { return init_precoder_mrt(g, power_w); }

} // namespace pinchbf
