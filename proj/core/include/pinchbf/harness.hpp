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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pinchbf/fpbcd.hpp"
#include "pinchbf/geometry.hpp"

namespace pinchbf {

enum class ExperimentKind { sweep_power, sweep_users, sweep_area, convergence, single };

enum class Scheme {
    pas_fpbcd,               // joint precoder + element locations
    fixed_fpbcd,             // half-wavelength array, digital FP loop
    fixed_zf,                // half-wavelength array, zero forcing
    pas_zf_fixed_locations,  // zero forcing on the PAS channel at the nearest-neighbour start
    mrt,                     // matched filter on the PAS channel at the nearest-neighbour start
};

std::string_view scheme_name(Scheme s);
Scheme parse_scheme(std::string_view name);
std::string_view kind_name(ExperimentKind k);

struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::single;
    // Swept quantity per kind: power_dbm, k, side_d_m, m (convergence). Ignored for `single`.
    std::vector<double> sweep_values;
    SceneParams base;
    int trials = 500;
    std::uint64_t seed = 1;
    std::vector<Scheme> schemes{Scheme::pas_fpbcd, Scheme::fixed_fpbcd};
    SolverConfig solver;
    int threads = 0;  // 0: hardware concurrency

    void validate() const;
};

struct SchemeStats {
    Scheme scheme = Scheme::pas_fpbcd;
    double mean_bits = 0.0;
    double std_bits = 0.0;
    int trials = 0;
    int failures = 0;
    std::vector<double> per_trial_bits;  // NaN marks a failed trial
};

struct PointResult {
    double sweep = 0.0;
    std::vector<SchemeStats> schemes;
};

/// Per-iteration mean of the monitored objective (bits). Runs that stopped early
/// hold their final value for the remaining iterations.
struct ConvergenceCurve {
    double sweep = 0.0;
    Scheme scheme = Scheme::pas_fpbcd;
    std::vector<double> mean_objective_bits;
};

struct ExperimentResult {
    ExperimentKind kind = ExperimentKind::single;
    std::vector<PointResult> points;
    std::vector<ConvergenceCurve> curves;

    const SchemeStats& stats(std::size_t point, Scheme s) const;
};

/// Outcome of every requested scheme on one scene.
struct TrialOutcome {
    std::vector<double> wsr_bits;                   // NaN on failure, aligned with the scheme list
    std::vector<std::vector<double>> history_nats;  // empty for schemes without an iterative solver
};

TrialOutcome run_trial(const Scene& scene, const std::vector<Scheme>& schemes, const SolverConfig& solver);

/// Scene parameters of sweep point `point_index`, trial `trial_index`.
SceneParams trial_params(const ExperimentSpec& spec, std::size_t point_index, std::size_t trial_index);

ExperimentResult run_experiment(const ExperimentSpec& spec);

ExperimentResult experiment_fig2a(const std::vector<double>& power_dbm_list, int trials, std::uint64_t seed = 1);
/// One result per side length, each sweeping K.
std::vector<ExperimentResult> experiment_fig2b(const std::vector<double>& user_counts,
                                               const std::vector<double>& side_lengths, int trials,
                                               std::uint64_t seed = 1);
ExperimentResult experiment_fig2c(const std::vector<double>& side_lengths, int trials, std::uint64_t seed = 1);
ExperimentResult experiment_fig3(const std::vector<double>& waveguide_counts, int trials, std::uint64_t seed = 1);

// CSV output. Sweep kinds: `sweep,scheme,mean_bits,std_bits,trials,failures`.
// Convergence: `iter,scheme,mean_objective_bits`, the scheme tagged with its M as `pas_fpbcd@m=4`.
void write_csv(const ExperimentResult& result, std::ostream& out);
void write_csv(const ExperimentResult& result, const std::string& path);

/// One parsed row of a sweep CSV.
struct SweepCsvRow {
    double sweep = 0.0;
    std::string scheme;
    double mean_bits = 0.0;
    double std_bits = 0.0;
    int trials = 0;
    int failures = 0;
};

std::vector<SweepCsvRow> read_sweep_csv(std::istream& in);

} // namespace pinchbf
