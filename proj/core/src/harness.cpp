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

#include "pinchbf/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <istream>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "pinchbf/baselines.hpp"
#include "pinchbf/io.hpp"
#include "pinchbf/rng.hpp"

namespace pinchbf {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct SchemeEntry {
    Scheme scheme;
    std::string_view name;
};

constexpr SchemeEntry kSchemes[] = {
    {Scheme::pas_fpbcd, "pas_fpbcd"},
    {Scheme::fixed_fpbcd, "fixed_fpbcd"},
    {Scheme::fixed_zf, "fixed_zf"},
    {Scheme::pas_zf_fixed_locations, "pas_zf_fixed_locations"},
    {Scheme::mrt, "mrt"},
};

bool has_history(Scheme s) { return s == Scheme::pas_fpbcd || s == Scheme::fixed_fpbcd; }

} // namespace

std::string_view scheme_name(Scheme s) {
    for (const auto& e : kSchemes)
        if (e.scheme == s) return e.name;
    return "unknown";
}

Scheme parse_scheme(std::string_view name) {
    for (const auto& e : kSchemes)
        if (e.name == name) return e.scheme;
    throw ConfigError("unknown scheme '" + std::string(name) + "'");
}

std::string_view kind_name(ExperimentKind k) {
    switch (k) {
    case ExperimentKind::sweep_power: return "sweep_power";
    case ExperimentKind::sweep_users: return "sweep_users";
    case ExperimentKind::sweep_area: return "sweep_area";
    case ExperimentKind::convergence: return "convergence";
    case ExperimentKind::single: return "single";
    }
    return "unknown";
}

void ExperimentSpec::validate() const {
    if (trials < 1) throw ConfigError("trials must be >= 1");
    if (schemes.empty()) throw ConfigError("at least one scheme is required");
    if (kind != ExperimentKind::single) {
        if (sweep_values.empty()) throw ConfigError("sweep values must be non-empty");
        if (!std::is_sorted(sweep_values.begin(), sweep_values.end()))
            throw ConfigError("sweep values must be sorted");
    }
    if (kind == ExperimentKind::sweep_users || kind == ExperimentKind::convergence) {
        for (double v : sweep_values)
            if (v < 1.0 || v != std::floor(v)) throw ConfigError("swept counts must be positive integers");
    }
    solver.validate();
}

const SchemeStats& ExperimentResult::stats(std::size_t point, Scheme s) const {
    for (const auto& st : points.at(point).schemes)
        if (st.scheme == s) return st;
    throw std::out_of_range("scheme not present in result");
}

TrialOutcome run_trial(const Scene& scene, const std::vector<Scheme>& schemes, const SolverConfig& solver) {
    TrialOutcome out;
    out.wsr_bits.assign(schemes.size(), kNaN);
    out.history_nats.resize(schemes.size());
    const std::span<const double> weights(scene.rate_weights);
    for (std::size_t i = 0; i < schemes.size(); ++i) {
        try {
            switch (schemes[i]) {
            case Scheme::pas_fpbcd: {
                auto r = solve(scene, solver);
                out.wsr_bits[i] = r.report.weighted_sum_rate_bits;
                out.history_nats[i] = std::move(r.state.objective_history);
                break;
            }
            case Scheme::fixed_fpbcd: {
                auto r = solve_fixed_antenna(scene, solver);
                out.wsr_bits[i] = r.report.weighted_sum_rate_bits;
                out.history_nats[i] = std::move(r.state.objective_history);
                break;
            }
            case Scheme::fixed_zf: {
                const auto g = fixed_channel_matrix(scene);
                out.wsr_bits[i] = weighted_sum_rate(g, zf_precoder(g, scene.power_w), scene.noise_w, weights);
                break;
            }
            case Scheme::pas_zf_fixed_locations: {
                const auto g = build_channel_matrix(scene, init_locations_nearest_neighbor(scene));
                out.wsr_bits[i] = weighted_sum_rate(g, zf_precoder(g, scene.power_w), scene.noise_w, weights);
                break;
            }
            case Scheme::mrt: {
                const auto g = build_channel_matrix(scene, init_locations_nearest_neighbor(scene));
                out.wsr_bits[i] = weighted_sum_rate(g, mrt_precoder(g, scene.power_w), scene.noise_w, weights);
                break;
            }
            }
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            out.wsr_bits[i] = kNaN;
            out.history_nats[i].clear();
        }
    }
    return out;
}

SceneParams trial_params(const ExperimentSpec& spec, std::size_t point_index, std::size_t trial_index) {
    SceneParams p = spec.base;
    if (spec.kind != ExperimentKind::single) {
        const double v = spec.sweep_values.at(point_index);
        switch (spec.kind) {
        case ExperimentKind::sweep_power: p.power_dbm = v; break;
        case ExperimentKind::sweep_users: p.k = static_cast<int>(v); break;
        case ExperimentKind::sweep_area: p.side_d_m = v; break;
        case ExperimentKind::convergence: p.m = static_cast<int>(v); break;
        case ExperimentKind::single: break;
        }
    }
    p.seed = derive_seed(spec.seed, point_index, trial_index);
    return p;
}

namespace {

void aggregate(SchemeStats& st) {
    st.trials = static_cast<int>(st.per_trial_bits.size());
    double sum = 0.0;
    int n = 0;
    for (double v : st.per_trial_bits) {
        if (std::isnan(v)) continue;
        sum += v;
        ++n;
    }
    st.failures = st.trials - n;
    if (n == 0) {
        st.mean_bits = kNaN;
        st.std_bits = kNaN;
        return;
    }
    st.mean_bits = sum / n;
    double ss = 0.0;
    for (double v : st.per_trial_bits)
        if (!std::isnan(v)) ss += (v - st.mean_bits) * (v - st.mean_bits);
    st.std_bits = n > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
}

std::vector<double> mean_curve(const std::vector<const std::vector<double>*>& runs) {
    std::size_t len = 0;
    for (const auto* r : runs) len = std::max(len, r->size());
    std::vector<double> mean(len, 0.0);
    if (runs.empty()) return mean;
    for (std::size_t i = 0; i < len; ++i) {
        double sum = 0.0;
        for (const auto* r : runs) sum += i < r->size() ? (*r)[i] : r->back();
        mean[i] = sum / static_cast<double>(runs.size()) / std::numbers::ln2;
    }
    return mean;
}

} // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    const std::size_t n_points = spec.kind == ExperimentKind::single ? 1 : spec.sweep_values.size();
    const auto n_trials = static_cast<std::size_t>(spec.trials);
    const std::size_t n_tasks = n_points * n_trials;

    std::vector<TrialOutcome> outcomes(n_tasks);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t t = next++; t < n_tasks; t = next++) {
            try {
                const Scene scene = build_scene(trial_params(spec, t / n_trials, t % n_trials));
                outcomes[t] = run_trial(scene, spec.schemes, spec.solver);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = n_tasks;
            }
        }
    };
    unsigned n_threads = spec.threads > 0 ? static_cast<unsigned>(spec.threads) : std::thread::hardware_concurrency();
    n_threads = std::clamp<unsigned>(n_threads, 1u, static_cast<unsigned>(std::max<std::size_t>(n_tasks, 1)));
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);

    ExperimentResult result;
    result.kind = spec.kind;
    for (std::size_t p = 0; p < n_points; ++p) {
        PointResult point;
        point.sweep = spec.kind == ExperimentKind::single ? spec.base.power_dbm : spec.sweep_values[p];
        for (std::size_t s = 0; s < spec.schemes.size(); ++s) {
            SchemeStats st;
            st.scheme = spec.schemes[s];
            for (std::size_t t = 0; t < n_trials; ++t) st.per_trial_bits.push_back(outcomes[p * n_trials + t].wsr_bits[s]);
            aggregate(st);
            point.schemes.push_back(std::move(st));

            if (spec.kind == ExperimentKind::convergence && has_history(spec.schemes[s])) {
                std::vector<const std::vector<double>*> runs;
                for (std::size_t t = 0; t < n_trials; ++t) {
                    const auto& h = outcomes[p * n_trials + t].history_nats[s];
                    if (!h.empty()) runs.push_back(&h);
                }
                result.curves.push_back({point.sweep, spec.schemes[s], mean_curve(runs)});
            }
        }
        result.points.push_back(std::move(point));
    }
    return result;
}

namespace {

ExperimentSpec preset_spec(ExperimentKind kind, std::vector<double> sweep, int trials, std::uint64_t seed) {
    ExperimentSpec spec;
    spec.kind = kind;
    spec.sweep_values = std::move(sweep);
    spec.trials = trials;
    spec.seed = seed;
    spec.base.m = 4;
    spec.base.k = 4;
    spec.base.side_d_m = 30.0;
    spec.base.power_dbm = 20.0;
    return spec;
}

} // namespace

ExperimentResult experiment_fig2a(const std::vector<double>& power_dbm_list, int trials, std::uint64_t seed) {
    auto spec = preset_spec(ExperimentKind::sweep_power, power_dbm_list, trials, seed);
    spec.schemes = {Scheme::pas_fpbcd, Scheme::fixed_fpbcd, Scheme::fixed_zf};
    return run_experiment(spec);
}

std::vector<ExperimentResult> experiment_fig2b(const std::vector<double>& user_counts,
                                               const std::vector<double>& side_lengths, int trials,
                                               std::uint64_t seed) {
    std::vector<ExperimentResult> out;
    for (double d : side_lengths) {
        auto spec = preset_spec(ExperimentKind::sweep_users, user_counts, trials, seed);
        spec.base.side_d_m = d;
        out.push_back(run_experiment(spec));
    }
    return out;
}

ExperimentResult experiment_fig2c(const std::vector<double>& side_lengths, int trials, std::uint64_t seed) {
    return run_experiment(preset_spec(ExperimentKind::sweep_area, side_lengths, trials, seed));
}

ExperimentResult experiment_fig3(const std::vector<double>& waveguide_counts, int trials, std::uint64_t seed) {
    auto spec = preset_spec(ExperimentKind::convergence, waveguide_counts, trials, seed);
    spec.schemes = {Scheme::pas_fpbcd};
    return run_experiment(spec);
}

void write_csv(const ExperimentResult& result, std::ostream& out) {
    if (result.kind == ExperimentKind::convergence) {
        out << "iter,scheme,mean_objective_bits\n";
        for (const auto& c : result.curves) {
            const std::string tag = std::string(scheme_name(c.scheme)) + "@m=" + format_double(c.sweep);
            for (std::size_t i = 0; i < c.mean_objective_bits.size(); ++i)
                out << i << ',' << tag << ',' << format_double(c.mean_objective_bits[i]) << '\n';
        }
        return;
    }
    out << "sweep,scheme,mean_bits,std_bits,trials,failures\n";
    for (const auto& p : result.points)
        for (const auto& s : p.schemes)
            out << format_double(p.sweep) << ',' << scheme_name(s.scheme) << ',' << format_double(s.mean_bits) << ','
                << format_double(s.std_bits) << ',' << s.trials << ',' << s.failures << '\n';
}

void write_csv(const ExperimentResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_csv(result, out);
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::vector<SweepCsvRow> read_sweep_csv(std::istream& in) {
    std::vector<SweepCsvRow> rows;
    std::string line;
    if (!std::getline(in, line) || line != "sweep,scheme,mean_bits,std_bits,trials,failures")
        throw ConfigError("not a sweep CSV (bad header)");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
        if (f.size() != 6) throw ConfigError("malformed sweep CSV row: " + line);
        rows.push_back({parse_double(f[0]), f[1], parse_double(f[2]), parse_double(f[3]), std::stoi(f[4]),
                        std::stoi(f[5])});
    }
    return rows;
}

} // namespace pinchbf
