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

#include "pinchbf/fpbcd.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace pinchbf {

void SolverConfig::validate() const {
    if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
    if (grid_points < 2) throw ConfigError("grid_points must be >= 2");
    if (max_outer_iters < 1) throw ConfigError("max_outer_iters must be >= 1");
    if (inner_location_sweeps < 1) throw ConfigError("inner_location_sweeps must be >= 1");
}

PinchLocations init_locations_nearest_neighbor(const Scene& scene) {
    PinchLocations pinch;
    const auto& users = scene.users.positions;
    for (int m = 0; m < scene.num_waveguides(); ++m) {
        const double ym = scene.array.waveguide_y(m);
        std::size_t best = 0;
        double best_gap = std::abs(users[0].y() - ym);
        for (std::size_t k = 1; k < users.size(); ++k) {
            const double gap = std::abs(users[k].y() - ym);
            if (gap < best_gap) {
                best = k;
                best_gap = gap;
            }
        }
        const double len = scene.array.lengths_m[static_cast<std::size_t>(m)];
        pinch.locations_m.push_back(std::clamp(users[best].x(), 0.0, len));
    }
    return pinch;
}

Precoder init_precoder_mrt(const ChannelMatrix& g, double power_w) {
    if (!(power_w > 0.0)) throw DomainError("power budget must be positive");
    const auto k_count = g.rows();
    const double per_user = std::sqrt(power_w / static_cast<double>(k_count));
    Precoder w(g.cols(), k_count);
    for (Eigen::Index k = 0; k < k_count; ++k) {
        const double norm = g.row(k).norm();
        if (!(norm > 0.0)) throw NumericalError("MRT needs a nonzero channel for user " + std::to_string(k));
        w.col(k) = g.row(k).adjoint() * (per_user / norm);
    }
    return w;
}

Eigen::VectorXd update_omega(const ChannelMatrix& g, const Precoder& w, double noise_w, double power_w) {
    Eigen::VectorXd omega(g.rows());
    for (int k = 0; k < g.rows(); ++k) omega(k) = scaled_sinr(g, w, noise_w, power_w, k);
    return omega;
}

QUpdate update_q(const ChannelMatrix& g, const Precoder& w, const Eigen::VectorXd& omega, double noise_w,
                 double power_w) {
    if (omega.size() != g.rows()) throw DimensionError("omega must have one entry per user");
    if (g.cols() != w.rows() || g.rows() != w.cols()) throw DimensionError("channel and precoder shapes differ");
    QUpdate out{Eigen::VectorXcd::Zero(g.rows()), false};
    const double noise_term = noise_w / power_w * precoder_power(w);
    if (!(noise_term > 0.0)) {
        out.degenerate = true;
        return out;
    }
    const Eigen::MatrixXcd gw = g * w;
    for (Eigen::Index k = 0; k < g.rows(); ++k) {
        const double gamma = gw.row(k).squaredNorm() + noise_term;
        out.q(k) = std::sqrt(1.0 + omega(k)) * gw(k, k) / gamma;
    }
    return out;
}

FpWeights make_fp_weights(const Eigen::VectorXd& omega, const Eigen::VectorXcd& q, std::span<const double> weights) {
    if (omega.size() != q.size() || static_cast<Eigen::Index>(weights.size()) != q.size())
        throw DimensionError("omega, q and weights must all have K entries");
    FpWeights fpw;
    fpw.t_diag.resize(q.size());
    fpw.u_diag.resize(q.size());
    for (Eigen::Index k = 0; k < q.size(); ++k) {
        const double lambda = weights[static_cast<std::size_t>(k)];
        fpw.t_diag(k) = lambda * std::sqrt(1.0 + omega(k)) * q(k);
        fpw.u_diag(k) = lambda * std::norm(q(k));
    }
    return fpw;
}

double quadratic_objective(const ChannelMatrix& g, const Precoder& w, const FpWeights& fpw, double noise_w,
                           double power_w) {
    if (g.cols() != w.rows() || g.rows() != w.cols()) throw DimensionError("channel and precoder shapes differ");
    const Eigen::MatrixXcd gw = g * w;
    // T and U are diagonal, so each trace reduces to a weighted sum over users.
    double linear = 0.0;
    double quadratic = 0.0;
    for (Eigen::Index k = 0; k < gw.rows(); ++k) {
        linear += (std::conj(fpw.t_diag(k)) * gw(k, k)).real();
        quadratic += fpw.u_diag(k) * gw.row(k).squaredNorm();
    }
    return 2.0 * linear - quadratic - noise_w * fpw.trace_u() / power_w * precoder_power(w);
}

Precoder update_precoder_rzf(const ChannelMatrix& g, const FpWeights& fpw, double noise_w, double power_w) {
    const double reg = noise_w * fpw.trace_u() / power_w;
    if (!(reg > 0.0))
        throw NumericalError("RZF update is singular (all q_k = 0); re-initialize the precoder");
    const Eigen::Index m_count = g.cols();
    Eigen::MatrixXcd a = g.adjoint() * fpw.u_diag.asDiagonal() * g;
    a.diagonal().array() += reg;
    const Eigen::MatrixXcd rhs = g.adjoint() * fpw.t_diag.asDiagonal();
    Eigen::LLT<Eigen::MatrixXcd> llt(a);
    if (llt.info() != Eigen::Success)
        throw NumericalError("RZF system is not positive definite (M = " + std::to_string(m_count) + ")");
    return llt.solve(rhs);
}

LocationObjective::LocationObjective(const Scene& scene, int m, const ChannelMatrix& g, const Precoder& w,
                                     const FpWeights& fpw)
    : scene_(&scene), m_(m), u_(fpw.u_diag) {
    if (m < 0 || m >= scene.num_waveguides()) throw DomainError("waveguide index out of range");
    const Eigen::Index k_count = g.rows();
    const Eigen::Index m_count = g.cols();
    // a_m: row m of W T^H.
    c_ = (w.row(m).transpose().array() * fpw.t_diag.conjugate().array()).matrix();
    // b_m^T = sum_{m' != m} [W W^H]_{m,m'} g_{m'}^H U.
    const Eigen::RowVectorXcd wwh_row = w.row(m) * w.adjoint();
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(k_count);
    for (Eigen::Index mp = 0; mp < m_count; ++mp) {
        if (mp == m) continue;
        b += wwh_row(mp) * g.col(mp).conjugate();
    }
    b = (b.array() * fpw.u_diag.array()).matrix();
    c_ -= b;
    wwh_mm_ = wwh_row(m).real();
}

double LocationObjective::operator()(double ell) const {
    double linear = 0.0;
    double quadratic = 0.0;
    for (int k = 0; k < c_.size(); ++k) {
        const cplx gk = effective_channel_entry(*scene_, m_, k, ell);
        linear += (c_(k) * gk).real();
        quadratic += u_(k) * std::norm(gk);
    }
    return 2.0 * linear - wwh_mm_ * quadratic;
}

double LocationObjective::cosine_form(double ell) const {
    const auto& rf = scene_->rf;
    double total = 0.0;
    for (int k = 0; k < c_.size(); ++k) {
        const double dist = element_user_distance(*scene_, m_, k, ell);
        const double amp = rf.xi * scene_->shadowing(k, m_) / dist;
        const double phase = std::fmod(rf.wavenumber_k0 * (dist + rf.refractive_index * ell), 2.0 * std::numbers::pi);
        total += amp * (2.0 * std::abs(c_(k)) * std::cos(phase - std::arg(c_(k))) - wwh_mm_ * u_(k) * amp);
    }
    return total;
}

double location_objective_direct(const Scene& scene, int m, double ell, const Precoder& w, const FpWeights& fpw,
                                 const PinchLocations& frozen) {
    const ChannelMatrix g = build_channel_matrix(scene, frozen);
    return LocationObjective(scene, m, g, w, fpw)(ell);
}

double grid_search_location(const LocationObjective& f, double length_m, double incumbent, int grid_points) {
    if (grid_points < 2) throw ConfigError("grid_points must be >= 2");
    double best_ell = incumbent;
    double best_val = f(incumbent);
    const double step = length_m / static_cast<double>(grid_points - 1);
    for (int i = 0; i < grid_points; ++i) {
        const double ell = i + 1 == grid_points ? length_m : step * static_cast<double>(i);
        const double val = f(ell);
        if (val > best_val || (val == best_val && ell < best_ell)) {
            best_val = val;
            best_ell = ell;
        }
    }
    return best_ell;
}

double grid_search_location(const Scene& scene, int m, const Precoder& w, const FpWeights& fpw,
                            const PinchLocations& frozen, int grid_points) {
    const ChannelMatrix g = build_channel_matrix(scene, frozen);
    const LocationObjective f(scene, m, g, w, fpw);
    return grid_search_location(f, scene.array.lengths_m[static_cast<std::size_t>(m)], frozen[m], grid_points);
}

PinchLocations gauss_seidel_location_sweep(const Scene& scene, const Precoder& w, const FpWeights& fpw,
                                           const PinchLocations& pinch, int grid_points, ChannelMatrix* g) {
    PinchLocations out = pinch;
    ChannelMatrix local;
    if (g == nullptr) {
        local = build_channel_matrix(scene, pinch);
        g = &local;
    }
    for (int m = 0; m < scene.num_waveguides(); ++m) {
        const LocationObjective f(scene, m, *g, w, fpw);
        out[m] = grid_search_location(f, scene.array.lengths_m[static_cast<std::size_t>(m)], out[m], grid_points);
        g->col(m) = channel_column(scene, m, out[m]);
    }
    return out;
}

namespace {

SolverResult run_fp_loop(const Scene& scene, const SolverConfig& config, ChannelMatrix g, Precoder w,
                         std::optional<PinchLocations> pinch) {
    config.validate();
    if (g.rows() != scene.num_users() || g.cols() != scene.num_waveguides())
        throw DimensionError("channel shape does not match the scene");
    if (w.rows() != g.cols() || w.cols() != g.rows()) throw DimensionError("initial precoder shape mismatch");

    const std::span<const double> weights(scene.rate_weights);
    const double noise = scene.noise_w;
    const double power = scene.power_w;

    SolverResult result;
    auto& state = result.state;
    double objective = scaled_weighted_sum_rate(g, w, noise, power, weights);
    state.objective_history.push_back(objective);

    for (int it = 1; it <= config.max_outer_iters; ++it) {
        const Eigen::VectorXd omega = update_omega(g, w, noise, power);
        auto qu = update_q(g, w, omega, noise, power);
        if (qu.degenerate) throw NumericalError("precoder collapsed to zero; re-initialize");
        const FpWeights fpw = make_fp_weights(omega, qu.q, weights);
        w = update_precoder_rzf(g, fpw, noise, power);
        if (pinch) {
            for (int s = 0; s < config.inner_location_sweeps; ++s)
                *pinch = gauss_seidel_location_sweep(scene, w, fpw, *pinch, config.grid_points, &g);
        }
        state.aux = AuxiliaryVariables{omega, std::move(qu.q)};
        state.iters = it;

        const double next = scaled_weighted_sum_rate(g, w, noise, power, weights);
        state.objective_history.push_back(next);
        const double gain = next - objective;
        objective = next;
        if (gain < config.epsilon) {
            result.converged = true;
            break;
        }
    }

    state.w = std::move(w);
    if (pinch) state.pinch = std::move(*pinch);
    result.final_precoder = enforce_power_equality(state.w, power);
    result.report = rate_report(g, result.final_precoder, noise, weights);
    result.channel = std::move(g);
    return result;
}

} // namespace

SolverResult solve(const Scene& scene, const SolverConfig& config, const std::optional<SolverInit>& init) {
    scene.validate();
    PinchLocations pinch = init ? init->pinch : init_locations_nearest_neighbor(scene);
    if (!pinch.within(scene)) throw DomainError("initial pinch locations are infeasible");
    ChannelMatrix g = build_channel_matrix(scene, pinch);
    Precoder w = init ? init->w : init_precoder_mrt(g, scene.power_w);
    return run_fp_loop(scene, config, std::move(g), std::move(w), std::move(pinch));
}

SolverResult solve_precoder_only(const Scene& scene, const ChannelMatrix& g, const SolverConfig& config,
                                 const std::optional<Precoder>& init) {
    scene.validate();
    Precoder w = init ? *init : init_precoder_mrt(g, scene.power_w);
    return run_fp_loop(scene, config, g, std::move(w), std::nullopt);
}

} // namespace pinchbf
