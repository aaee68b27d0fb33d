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
#include <numbers>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pinchbf/channel.hpp"

using namespace pinchbf;
using pinchbf::testing::random_pinch;

namespace {

// Waveguide m at y = 10 m (M = 4, D = 30) with users placed by hand.
Scene hand_scene(std::vector<Eigen::Vector3d> users) { return make_scene(4, 30.0, std::move(users), 20.0); }

double wrap(double x) {
    const double two_pi = 2.0 * std::numbers::pi;
    x = std::fmod(x, two_pi);
    if (x > std::numbers::pi) x -= two_pi;
    if (x < -std::numbers::pi) x += two_pi;
    return x;
}

} // namespace

TEST_CASE("element-user distance") {
    const Scene s = hand_scene({{5.0, 10.0, 0.0}, {0.0, 4.0, 0.0}, {3.0, 4.0, 0.0}});
    CHECK(element_user_distance(s, 1, 0, 5.0) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(element_user_distance(s, 0, 1, 0.0) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(element_user_distance(s, 0, 2, 0.0) == doctest::Approx(oracle::kSqrt34).epsilon(1e-15));
    CHECK_THROWS_AS(element_user_distance(s, 0, 0, -0.1), DomainError);
    CHECK_THROWS_AS(element_user_distance(s, 0, 0, 30.01), DomainError);
}

TEST_CASE("pinch phase") {
    const Scene s = build_scene(2, 1, 30.0, 20.0, 1);
    CHECK(pinch_phase(s, 0.0) == 0.0);
    CHECK(pinch_phase(s, s.rf.wavelength_m / 1.44) == doctest::Approx(2 * std::numbers::pi).epsilon(1e-14));
    CHECK(pinch_phase(s, 1.0) == doctest::Approx(oracle::kPhaseOneMetre).epsilon(1e-13));
}

TEST_CASE("effective channel entry") {
    SUBCASE("user below the feed point") {
        const Scene s = hand_scene({{0.0, 0.0, 0.0}});
        const cplx g = effective_channel_entry(s, 0, 0, 0.0);
        const auto ref = std::polar(s.rf.xi / 3.0, -s.rf.wavenumber_k0 * 3.0);
        CHECK(std::abs(g - ref) < 1e-12 * std::abs(ref));
    }
    SUBCASE("magnitude xi/3 directly above the user") {
        const Scene s = hand_scene({{5.0, 0.0, 0.0}});
        CHECK(std::abs(effective_channel_entry(s, 0, 0, 5.0)) == doctest::Approx(oracle::kXiOver3).epsilon(1e-13));
    }
    SUBCASE("agrees with the long double model") {
        CounterRng rng(17);
        for (int trial = 0; trial < 200; ++trial) {
            const Scene s = build_scene(4, 3, 30.0 + 60.0 * rng.uniform(), 20.0, trial);
            const int m = trial % 4;
            const int k = trial % 3;
            const double ell = s.side_d_m * rng.uniform();
            const auto ref = oracle::channel_entry(s, m, k, ell);
            const cplx got = effective_channel_entry(s, m, k, ell);
            CHECK(std::abs(got - cplx(ref)) < 1e-9 * std::abs(cplx(ref)));
        }
    }
}

TEST_CASE("channel matrix layout and consistency") {
    SUBCASE("1 x 1") {
        const Scene s = make_scene(1, 10.0, {{2.0, 5.0, 0.0}}, 20.0);
        const PinchLocations p{{3.0}};
        const auto g = build_channel_matrix(s, p);
        REQUIRE(g.rows() == 1);
        REQUIRE(g.cols() == 1);
        CHECK(g(0, 0) == effective_channel_entry(s, 0, 0, 3.0));
    }
    SUBCASE("every entry equals the scalar call") {
        const Scene s = build_scene(4, 5, 30.0, 20.0, 3);
        CounterRng rng(4);
        const auto p = random_pinch(s, rng);
        const auto g = build_channel_matrix(s, p);
        REQUIRE(g.rows() == 5);
        REQUIRE(g.cols() == 4);
        for (int k = 0; k < 5; ++k)
            for (int m = 0; m < 4; ++m) CHECK(g(k, m) == effective_channel_entry(s, m, k, p[m]));
    }
    SUBCASE("bound violations") {
        const Scene s = build_scene(2, 2, 10.0, 20.0, 3);
        CHECK_THROWS_AS(build_channel_matrix(s, PinchLocations{{1.0, 11.0}}), DomainError);
        CHECK_THROWS_AS(build_channel_matrix(s, PinchLocations{{1.0}}), DimensionError);
        CHECK_FALSE(PinchLocations{{-1.0, 2.0}}.within(s));
        CHECK(PinchLocations{{0.0, 10.0}}.within(s));
    }
}

TEST_CASE("decomposition reproduces the channel rows exactly") {
    SUBCASE("unit shadowing gives xi * ones") {
        const Scene s = build_scene(3, 2, 30.0, 20.0, 8);
        const auto d = decompose_channel(s, PinchLocations{{5.0, 12.0, 29.0}}, 1);
        for (int m = 0; m < 3; ++m) CHECK(d.env_vector_g0(m) == cplx(s.rf.xi, 0.0));
    }
    SUBCASE("M = 1") {
        const Scene s = make_scene(1, 10.0, {{2.0, 5.0, 0.0}}, 20.0);
        const PinchLocations p{{7.0}};
        const auto d = decompose_channel(s, p, 0);
        CHECK(d.location_diag_lk(0) * d.env_vector_g0(0) == build_channel_matrix(s, p)(0, 0));
    }
    SUBCASE("random scenes with shadowing") {
        CounterRng rng(21);
        for (int trial = 0; trial < 50; ++trial) {
            Scene s = build_scene(4, 4, 30.0, 20.0, 100 + trial);
            for (int k = 0; k < 4; ++k)
                for (int m = 0; m < 4; ++m) s.shadowing(k, m) = 0.2 + rng.uniform();
            const auto p = random_pinch(s, rng);
            const auto g = build_channel_matrix(s, p);
            for (int k = 0; k < 4; ++k) {
                const auto d = decompose_channel(s, p, k);
                const Eigen::VectorXcd prod = d.location_diag_lk.asDiagonal() * d.env_vector_g0;
                for (int m = 0; m < 4; ++m) CHECK(prod(m) == g(k, m));
            }
        }
    }
}

TEST_CASE("channel unit laws over random probes") {
    CounterRng rng(2024);
    for (int probe = 0; probe < 2000; ++probe) {
        Scene s = build_scene(3, 2, 10.0 + 80.0 * rng.uniform(), 20.0, 500 + probe);
        const int m = static_cast<int>(rng.next_u64() % 3);
        const int k = static_cast<int>(rng.next_u64() % 2);
        s.shadowing(k, m) = 0.1 + 2.0 * rng.uniform();
        const double ell = s.side_d_m * rng.uniform();
        const cplx g = effective_channel_entry(s, m, k, ell);
        const double dist = element_user_distance(s, m, k, ell);
        REQUIRE(std::abs(std::abs(g) * dist / (s.rf.xi * s.shadowing(k, m)) - 1.0) < 1e-12);
        const double expected = -s.rf.wavenumber_k0 * (dist + s.rf.refractive_index * ell);
        REQUIRE(std::abs(wrap(std::arg(g) - expected)) < 1e-9);
    }
}

TEST_CASE("closest element position maximizes the entry magnitude") {
    const Scene s = build_scene(4, 4, 30.0, 20.0, 6);
    for (int k = 0; k < 4; ++k) {
        const double best = std::clamp(s.users.positions[k].x(), 0.0, 30.0);
        const double peak = std::abs(effective_channel_entry(s, 2, k, best));
        for (int i = 0; i <= 3000; ++i) CHECK(std::abs(effective_channel_entry(s, 2, k, 0.01 * i)) <= peak);
    }
}

TEST_CASE("fixed array channel") {
    SUBCASE("single antenna above the user") {
        const Scene s = make_scene(1, 10.0, {{5.0, 0.0, 0.0}}, 20.0);
        const auto h = fixed_channel_matrix(s);
        const auto ref = std::polar(s.rf.xi / 3.0, -s.rf.wavenumber_k0 * 3.0);
        CHECK(std::abs(h(0, 0) - ref) < 1e-12 * std::abs(ref));
    }
    SUBCASE("magnitudes follow the distance law") {
        const Scene s = build_scene(4, 3, 30.0, 20.0, 12);
        const auto h = fixed_channel_matrix(s);
        const auto pos = fixed_array_positions(s);
        for (int k = 0; k < 3; ++k)
            for (int m = 0; m < 4; ++m) {
                const double dist = (pos[m] - s.users.positions[k]).norm();
                CHECK(std::abs(h(k, m)) * dist == doctest::Approx(s.rf.xi).epsilon(1e-12));
            }
    }
    SUBCASE("users mirrored about x = D/2 see equal magnitudes") {
        const Scene s = make_scene(3, 30.0, {{9.0, 12.0, 0.0}, {21.0, 12.0, 0.0}}, 20.0);
        const auto h = fixed_channel_matrix(s);
        for (int m = 0; m < 3; ++m) {
            const double ref = static_cast<double>(std::abs(oracle::cld(s.rf.xi, 0) /
                                                            std::sqrt(36.0L + std::pow(12.0L - m * oracle::kHalfLambda28, 2) + 9.0L)));
            CHECK(std::abs(h(0, m)) == doctest::Approx(std::abs(h(1, m))).epsilon(1e-14));
            CHECK(std::abs(h(0, m)) == doctest::Approx(ref).epsilon(1e-12));
        }
    }
}
