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

#include <optional>
#include <span>
#include <vector>

#include "pinchbf/channel.hpp"
#include "pinchbf/geometry.hpp"
#include "pinchbf/metrics.hpp"
#include "pinchbf/types.hpp"

namespace pinchbf {

/// Lagrangian duals omega_k and quadratic-transform auxiliaries q_k.
struct AuxiliaryVariables {
    Eigen::VectorXd omega;
    Eigen::VectorXcd q;
};

/// Diagonals of the weight matrices of the quadratic surrogate:
/// T_kk = lambda_k sqrt(1 + omega_k) q_k and U_kk = lambda_k |q_k|^2.
struct FpWeights {
    Eigen::VectorXcd t_diag;
    Eigen::VectorXd u_diag;

    double trace_u() const { return u_diag.sum(); }
};

struct SolverConfig {
    double epsilon = 1e-3;  // stop once the objective gains less than this (nats)
    int grid_points = 1000;
    int max_outer_iters = 200;
    int inner_location_sweeps = 1;

    /// Throws ConfigError unless every field is positive and grid_points >= 2.
    void validate() const;
};

struct SolverState {
    Precoder w;
    PinchLocations pinch;
    AuxiliaryVariables aux;
    std::vector<double> objective_history;  // scaled weighted sum-rate (nats); entry 0 is the initial point
    int iters = 0;
};

struct SolverResult {
    SolverState state;
    ChannelMatrix channel;      // channel at the returned locations
    Precoder final_precoder;    // state.w scaled to tr(W^H W) = P
    RateReport report;          // rates of final_precoder, in bits
    bool converged = false;
};

struct SolverInit {
    Precoder w;
    PinchLocations pinch;
};

/// Each element starts above the x-coordinate of the user laterally closest to its waveguide.
/// Ties go to the smallest user index.
PinchLocations init_locations_nearest_neighbor(const Scene& scene);

/// w_k = sqrt(P/K) conj(g_k) / |g_k|. Throws NumericalError on a zero channel row.
Precoder init_precoder_mrt(const ChannelMatrix& g, double power_w);

/// omega_k = scaled SINR of user k.
Eigen::VectorXd update_omega(const ChannelMatrix& g, const Precoder& w, double noise_w, double power_w);

struct QUpdate {
    Eigen::VectorXcd q;
    bool degenerate = false;  // W = 0; q is returned as zeros
};

/// q_k = sqrt(1 + omega_k) g_k^T w_k / Gamma_k, where Gamma_k sums the received
/// power of every stream at user k plus (sigma^2 / P) tr(W^H W).
QUpdate update_q(const ChannelMatrix& g, const Precoder& w, const Eigen::VectorXd& omega, double noise_w,
                 double power_w);

FpWeights make_fp_weights(const Eigen::VectorXd& omega, const Eigen::VectorXcd& q, std::span<const double> weights);

/// F(W, l) = 2 Re tr(T^H G W) - tr(G W W^H G^H U) - sigma^2 tr(U) / P tr(W W^H).
double quadratic_objective(const ChannelMatrix& g, const Precoder& w, const FpWeights& fpw, double noise_w,
                           double power_w);

/// Maximizer of F over W: (G^H U G + sigma^2 tr(U)/P I)^{-1} G^H T, via a Cholesky solve.
Precoder update_precoder_rzf(const ChannelMatrix& g, const FpWeights& fpw, double noise_w, double power_w);

/// The part of F that depends on element m's position with every other column of G frozen:
/// f_m(l) = 2 Re{c_m^T g_m(l)} - [W W^H]_{mm} g_m(l)^H U g_m(l), with c_m = a_m - b_m.
class LocationObjective {
  public:
    LocationObjective(const Scene& scene, int m, const ChannelMatrix& g, const Precoder& w, const FpWeights& fpw);

    /// Direct complex evaluation.
    double operator()(double ell) const;

    /// Same value through the magnitude/phase expansion of each user term.
    double cosine_form(double ell) const;

    const Eigen::VectorXcd& c() const { return c_; }
    int waveguide() const { return m_; }

  private:
    const Scene* scene_;
    int m_;
    Eigen::VectorXcd c_;
    Eigen::VectorXd u_;
    double wwh_mm_;
};

double location_objective_direct(const Scene& scene, int m, double ell, const Precoder& w, const FpWeights& fpw,
                                 const PinchLocations& frozen);

/// Best of the inclusive N-point grid over [0, L_m] and the incumbent l_m. Ties go to the smaller position.
double grid_search_location(const Scene& scene, int m, const Precoder& w, const FpWeights& fpw,
                            const PinchLocations& frozen, int grid_points);
double grid_search_location(const LocationObjective& f, double length_m, double incumbent, int grid_points);

/// Updates l_1..l_M in order, each against the latest values of the others.
/// `g` must be the channel at `pinch`; it is kept in sync on return.
PinchLocations gauss_seidel_location_sweep(const Scene& scene, const Precoder& w, const FpWeights& fpw,
                                           const PinchLocations& pinch, int grid_points, ChannelMatrix* g = nullptr);

/// Joint precoder and element-location optimization from MRT / nearest-neighbour start (or `init`).
SolverResult solve(const Scene& scene, const SolverConfig& config, const std::optional<SolverInit>& init = {});

/// Precoder-only loop on a fixed channel (omega, q and RZF updates).
SolverResult solve_precoder_only(const Scene& scene, const ChannelMatrix& g, const SolverConfig& config,
                                 const std::optional<Precoder>& init = {});

} // namespace pinchbf
