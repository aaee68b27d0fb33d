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

#include <iosfwd>
#include <string>

#include "pinchbf/fpbcd.hpp"
#include "pinchbf/geometry.hpp"
#include "pinchbf/metrics.hpp"

namespace pinchbf {

/// 17 significant digits, '.' decimal separator, "nan"/"inf" for non-finite values.
std::string format_double(double v);

/// Strict parse of a full token; throws ConfigError on trailing garbage.
double parse_double(const std::string& token);

// Flat `key = value` scene configuration. Recognized keys:
//   m, k, side_d_m, power_dbm, noise_dbm, freq_ghz, refractive_index, height_a_m, seed
// Blank lines and `#` comments are ignored; unknown keys are rejected.
SceneParams parse_scene_config(std::istream& in, SceneParams base = {}, const std::string& source = "<config>");
SceneParams read_scene_config(const std::string& path, SceneParams base = {});
void write_scene_config(std::ostream& out, const SceneParams& params);

/// `sinr_1..K,rate_1..K,wsr`
std::string rate_report_csv_header(int num_users);
std::string rate_report_csv_row(const RateReport& report);

/// `iteration,objective_nats,objective_bits`, one line per history entry.
void write_history_csv(std::ostream& out, const SolverState& state);

/// Row-major, each entry as a `re,im` pair.
void write_matrix_csv(std::ostream& out, const Eigen::MatrixXcd& mat);

/// `m,location_m`
void write_locations_csv(std::ostream& out, const PinchLocations& pinch);

} // namespace pinchbf
