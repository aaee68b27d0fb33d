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

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "pinchbf/baselines.hpp"
#include "pinchbf/harness.hpp"
#include "pinchbf/rng.hpp"

using namespace pinchbf;
using pinchbf::testing::rel_diff;

namespace {

ExperimentSpec quick_spec(ExperimentKind kind, std::vector<double> values, int trials) {
    ExperimentSpec spec;
    spec.kind = kind;
    spec.sweep_values = std::move(values);
    spec.trials = trials;
    spec.seed = 11;
    spec.solver.grid_points = 100;
    spec.threads = 1;
    return spec;
}

bool same_bits(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

} // namespace

TEST_CASE("scheme names") {
    for (Scheme s : {Scheme::pas_fpbcd, Scheme::fixed_fpbcd, Scheme::fixed_zf, Scheme::pas_zf_fixed_locations,
                     Scheme::mrt})
        CHECK(parse_scheme(scheme_name(s)) == s);
    CHECK_THROWS_AS(parse_scheme("pas"), ConfigError);
}

TEST_CASE("specification checks") {
    auto spec = quick_spec(ExperimentKind::sweep_power, {10.0, 0.0}, 1);
    CHECK_THROWS_AS(run_experiment(spec), ConfigError);
    spec.sweep_values.clear();
    CHECK_THROWS_AS(run_experiment(spec), ConfigError);
    spec = quick_spec(ExperimentKind::sweep_users, {2.5}, 1);
    CHECK_THROWS_AS(run_experiment(spec), ConfigError);
    spec = quick_spec(ExperimentKind::sweep_power, {0.0}, 0);
    CHECK_THROWS_AS(run_experiment(spec), ConfigError);
}

TEST_CASE("single trial reproduces a direct solve") {
    auto spec = quick_spec(ExperimentKind::sweep_power, {20.0}, 1);
    spec.schemes = {Scheme::pas_fpbcd, Scheme::fixed_fpbcd};
    const auto r = run_experiment(spec);
    const Scene scene = build_scene(trial_params(spec, 0, 0));
    CHECK(scene.power_w == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(r.stats(0, Scheme::pas_fpbcd).mean_bits == solve(scene, spec.solver).report.weighted_sum_rate_bits);
    CHECK(r.stats(0, Scheme::fixed_fpbcd).mean_bits ==
          solve_fixed_antenna(scene, spec.solver).report.weighted_sum_rate_bits);
    CHECK(r.stats(0, Scheme::pas_fpbcd).std_bits == 0.0);
}

TEST_CASE("reproducibility") {
    auto spec = quick_spec(ExperimentKind::sweep_users, {2.0, 3.0}, 4);
    spec.base.m = 3;
    spec.schemes = {Scheme::pas_fpbcd, Scheme::fixed_zf, Scheme::mrt};
    const auto a = run_experiment(spec);
    const auto b = run_experiment(spec);
    spec.threads = 3;
    const auto c = run_experiment(spec);
    spec.trials = 6;
    const auto d = run_experiment(spec);
    for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t s = 0; s < 3; ++s) {
            const auto& sa = a.points[p].schemes[s].per_trial_bits;
            const auto& sb = b.points[p].schemes[s].per_trial_bits;
            const auto& sc = c.points[p].schemes[s].per_trial_bits;
            const auto& sd = d.points[p].schemes[s].per_trial_bits;
            REQUIRE(sd.size() == 6);
            for (std::size_t t = 0; t < 4; ++t) {
                CHECK(same_bits(sa[t], sb[t]));
                CHECK(same_bits(sa[t], sc[t]));
                CHECK(same_bits(sa[t], sd[t]));
            }
        }
    CHECK(trial_params(spec, 1, 2).seed == derive_seed(11, 1, 2));
    CHECK(trial_params(spec, 1, 2).k == 3);
}

TEST_CASE("aggregation") {
    auto spec = quick_spec(ExperimentKind::sweep_area, {15.0, 40.0}, 7);
    spec.schemes = {Scheme::mrt, Scheme::pas_zf_fixed_locations};
    const auto r = run_experiment(spec);
    for (const auto& point : r.points)
        for (const auto& st : point.schemes) {
            double sum = 0.0;
            int n = 0;
            for (double v : st.per_trial_bits)
                if (!std::isnan(v)) sum += v, ++n;
            CHECK(st.failures == 7 - n);
            if (n == 0) continue;
            const double mean = sum / n;
            double ss = 0.0;
            for (double v : st.per_trial_bits)
                if (!std::isnan(v)) ss += (v - mean) * (v - mean);
            CHECK(rel_diff(st.mean_bits, mean) < 1e-12);
            if (n > 1) CHECK(rel_diff(st.std_bits, std::sqrt(ss / (n - 1))) < 1e-12);
        }
}

TEST_CASE("failed trials are counted, not fatal") {
    // Zero forcing needs K <= M; with five users on two waveguides every trial fails.
    auto spec = quick_spec(ExperimentKind::sweep_users, {5.0}, 3);
    spec.base.m = 2;
    spec.schemes = {Scheme::fixed_zf, Scheme::mrt};
    const auto r = run_experiment(spec);
    CHECK(r.stats(0, Scheme::fixed_zf).failures == 3);
    CHECK(std::isnan(r.stats(0, Scheme::fixed_zf).mean_bits));
    CHECK(r.stats(0, Scheme::mrt).failures == 0);
}

TEST_CASE("sweep CSV") {
    SUBCASE("empty result has only the header") {
        std::ostringstream out;
        write_csv(ExperimentResult{ExperimentKind::sweep_power, {}, {}}, out);
        CHECK(out.str() == "sweep,scheme,mean_bits,std_bits,trials,failures\n");
        std::istringstream in(out.str());
        CHECK(read_sweep_csv(in).empty());
    }
    SUBCASE("round trip") {
        auto spec = quick_spec(ExperimentKind::sweep_power, {0.0, 10.0}, 2);
        spec.schemes = {Scheme::mrt, Scheme::fixed_zf};
        const auto r = run_experiment(spec);
        std::stringstream buf;
        write_csv(r, buf);
        const auto rows = read_sweep_csv(buf);
        REQUIRE(rows.size() == 4);
        std::size_t i = 0;
        for (std::size_t p = 0; p < 2; ++p)
            for (const auto& st : r.points[p].schemes) {
                CHECK(rows[i].sweep == r.points[p].sweep);
                CHECK(rows[i].scheme == scheme_name(st.scheme));
                CHECK(same_bits(rows[i].mean_bits, st.mean_bits));
                CHECK(same_bits(rows[i].std_bits, st.std_bits));
                CHECK(rows[i].trials == 2);
                ++i;
            }
    }
    SUBCASE("malformed input") {
        std::istringstream bad("sweep,scheme,mean_bits,std_bits,trials,failures\n1,pas_fpbcd,2\n");
        CHECK_THROWS(read_sweep_csv(bad));
    }
    SUBCASE("unwritable path names the path") {
        try {
            write_csv(ExperimentResult{}, "/nonexistent-dir/out.csv");
            FAIL("expected an exception");
        } catch (const std::exception& e) {
            CHECK(std::string(e.what()).find("/nonexistent-dir/out.csv") != std::string::npos);
        }
    }
}

TEST_CASE("convergence curves") {
    auto spec = quick_spec(ExperimentKind::convergence, {2.0, 3.0}, 3);
    spec.schemes = {Scheme::pas_fpbcd};
    const auto r = run_experiment(spec);
    REQUIRE(r.curves.size() == 2);
    for (const auto& c : r.curves) {
        REQUIRE(c.mean_objective_bits.size() >= 2);
        for (std::size_t i = 1; i < c.mean_objective_bits.size(); ++i)
            CHECK(c.mean_objective_bits[i] >= c.mean_objective_bits[i - 1] - 1e-9);
    }
    std::ostringstream out;
    write_csv(r, out);
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "iter,scheme,mean_objective_bits");
    std::getline(lines, line);
    CHECK(line.rfind("0,pas_fpbcd@m=2,", 0) == 0);
}

TEST_CASE("figure presets") {
    const auto a = experiment_fig2a({20.0}, 1);
    REQUIRE(a.points.size() == 1);
    CHECK(a.points[0].schemes.size() == 3);
    const auto b = experiment_fig2b({2.0}, {30.0, 60.0}, 1);
    CHECK(b.size() == 2);
}
