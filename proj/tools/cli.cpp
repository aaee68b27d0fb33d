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

#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pinchbf/pinchbf.hpp"

namespace pinchbf::cli {

namespace {

struct Options {
    int m = 4;
    int k = 4;
    double side_d = 30.0;
    double power_dbm = 20.0;
    double noise_dbm = -90.0;
    int trials = 500;
    std::uint64_t seed = 1;
    int grid_points = 1000;
    double epsilon = 1e-3;
    int max_iters = 200;
    int threads = 0;
    std::string schemes;
    std::vector<double> values;
    std::string out;
    std::string config;
};

std::vector<Scheme> parse_scheme_list(const std::string& list) {
    std::vector<Scheme> out;
    std::stringstream ss(list);
    for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty()) out.push_back(parse_scheme(tok));
    if (out.empty()) throw ConfigError("--schemes must name at least one scheme");
    return out;
}

struct Defaults {
    std::vector<double> values;
    std::vector<Scheme> schemes;
};

Defaults defaults_for(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::sweep_power:
        return {{0, 5, 10, 15, 20, 25, 30}, {Scheme::pas_fpbcd, Scheme::fixed_fpbcd, Scheme::fixed_zf}};
    case ExperimentKind::sweep_users:
        return {{2, 3, 4, 5, 6, 7, 8}, {Scheme::pas_fpbcd, Scheme::fixed_fpbcd}};
    case ExperimentKind::sweep_area:
        return {{15, 30, 45, 60, 75, 90}, {Scheme::pas_fpbcd, Scheme::fixed_fpbcd}};
    case ExperimentKind::convergence:
        return {{2, 4, 6, 8}, {Scheme::pas_fpbcd}};
    case ExperimentKind::single:
        return {{}, {Scheme::pas_fpbcd, Scheme::fixed_fpbcd}};
    }
    return {};
}

void write_solve_report(std::ostream& out, const Scene& scene, const std::vector<Scheme>& schemes,
                        const SolverConfig& solver) {
    const std::span<const double> weights(scene.rate_weights);
    std::vector<std::pair<Scheme, SolverResult>> solved;
    out << "# rates\n";
    out << "scheme," << rate_report_csv_header(scene.num_users()) << '\n';
    for (Scheme s : schemes) {
        RateReport report;
        switch (s) {
        case Scheme::pas_fpbcd: solved.emplace_back(s, solve(scene, solver)); break;
        case Scheme::fixed_fpbcd: solved.emplace_back(s, solve_fixed_antenna(scene, solver)); break;
        case Scheme::fixed_zf: {
            const auto g = fixed_channel_matrix(scene);
            report = rate_report(g, zf_precoder(g, scene.power_w), scene.noise_w, weights);
            break;
        }
        case Scheme::pas_zf_fixed_locations: {
            const auto g = build_channel_matrix(scene, init_locations_nearest_neighbor(scene));
            report = rate_report(g, zf_precoder(g, scene.power_w), scene.noise_w, weights);
            break;
        }
        case Scheme::mrt: {
            const auto g = build_channel_matrix(scene, init_locations_nearest_neighbor(scene));
            report = rate_report(g, mrt_precoder(g, scene.power_w), scene.noise_w, weights);
            break;
        }
        }
        if (s == Scheme::pas_fpbcd || s == Scheme::fixed_fpbcd) report = solved.back().second.report;
        out << scheme_name(s) << ',' << rate_report_csv_row(report) << '\n';
    }
    for (const auto& [s, r] : solved) {
        out << "# history " << scheme_name(s) << " converged=" << (r.converged ? 1 : 0) << '\n';
        write_history_csv(out, r.state);
        if (s == Scheme::pas_fpbcd) {
            out << "# locations " << scheme_name(s) << '\n';
            write_locations_csv(out, r.state.pinch);
        }
        out << "# precoder " << scheme_name(s) << " (M rows, re,im per user)\n";
        write_matrix_csv(out, r.final_precoder);
    }
}

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pinching-antenna multiuser downlink beamforming simulator", "pinchbf"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    auto* opt_m = app.add_option("--m", o.m, "Number of waveguides M");
    auto* opt_k = app.add_option("--k", o.k, "Number of users K");
    auto* opt_side = app.add_option("--side-d", o.side_d, "Side length D of the square region [m]");
    auto* opt_power = app.add_option("--power-dbm", o.power_dbm, "Transmit power budget [dBm]");
    auto* opt_noise = app.add_option("--noise-dbm", o.noise_dbm, "Noise variance [dBm]");
    auto* opt_seed = app.add_option("--seed", o.seed, "Master RNG seed");
    app.add_option("--trials", o.trials, "Monte Carlo trials per sweep point")->capture_default_str();
    app.add_option("--grid-points", o.grid_points, "Grid points per location search")->capture_default_str();
    app.add_option("--epsilon", o.epsilon, "Convergence threshold [nats]")->capture_default_str();
    app.add_option("--max-iters", o.max_iters, "Outer iteration cap")->capture_default_str();
    app.add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();
    app.add_option("--schemes", o.schemes,
                   "Comma list of pas_fpbcd,fixed_fpbcd,fixed_zf,pas_zf_fixed_locations,mrt");
    app.add_option("--values", o.values, "Sweep values (comma separated)")->delimiter(',');
    app.add_option("--out", o.out, "Output CSV path (default: stdout)");
    app.add_option("--config", o.config, "Flat key = value scene config; flags override it");

    struct Sub {
        CLI::App* app;
        ExperimentKind kind;
    };
    const std::vector<Sub> subs{
        {app.add_subcommand("solve", "Optimize one random scene and print rates, history and solution"),
         ExperimentKind::single},
        {app.add_subcommand("sweep-power", "Mean weighted sum-rate versus transmit power"),
         ExperimentKind::sweep_power},
        {app.add_subcommand("sweep-users", "Mean weighted sum-rate versus number of users"),
         ExperimentKind::sweep_users},
        {app.add_subcommand("sweep-area", "Mean weighted sum-rate versus side length D"), ExperimentKind::sweep_area},
        {app.add_subcommand("convergence", "Mean objective per iteration for several M"),
         ExperimentKind::convergence},
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }

    ExperimentKind kind = ExperimentKind::single;
    for (const auto& s : subs)
        if (s.app->parsed()) kind = s.kind;

    try {
        SceneParams params;
        if (!o.config.empty()) params = read_scene_config(o.config, params);
        if (opt_m->count()) params.m = o.m;
        if (opt_k->count()) params.k = o.k;
        if (opt_side->count()) params.side_d_m = o.side_d;
        if (opt_power->count()) params.power_dbm = o.power_dbm;
        if (opt_noise->count()) params.overrides.noise_dbm = o.noise_dbm;
        if (opt_seed->count()) params.seed = o.seed;

        SolverConfig solver;
        solver.grid_points = o.grid_points;
        solver.epsilon = o.epsilon;
        solver.max_outer_iters = o.max_iters;
        solver.validate();

        const Defaults def = defaults_for(kind);
        const std::vector<Scheme> schemes = o.schemes.empty() ? def.schemes : parse_scheme_list(o.schemes);

        std::ofstream file;
        std::ostream* sink = &out;
        if (!o.out.empty()) {
            file.open(o.out, std::ios::binary | std::ios::trunc);
            if (!file) throw std::runtime_error("cannot open '" + o.out + "' for writing");
            sink = &file;
        }

        try {
            if (kind == ExperimentKind::single) {
                const Scene scene = build_scene(params);
                write_solve_report(*sink, scene, schemes, solver);
            } else {
                ExperimentSpec spec;
                spec.kind = kind;
                spec.sweep_values = o.values.empty() ? def.values : o.values;
                spec.base = params;
                spec.trials = o.trials;
                spec.seed = params.seed;
                spec.schemes = schemes;
                spec.solver = solver;
                spec.threads = o.threads;
                write_csv(run_experiment(spec), *sink);
            }
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            err << "pinchbf: runtime failure: " << e.what() << '\n';
            return 2;
        }
        sink->flush();
        if (!*sink) {
            err << "pinchbf: failed writing output" << (o.out.empty() ? "" : " to '" + o.out + "'") << '\n';
            return 2;
        }
    } catch (const ConfigError& e) {
        err << "pinchbf: configuration error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "pinchbf: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace pinchbf::cli
