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

#include "pinchbf/io.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <locale>
#include <numbers>
#include <ostream>
#include <sstream>

namespace pinchbf {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(17);
    os << v;
    return os.str();
}

double parse_double(const std::string& token) {
    if (token == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (token == "inf") return std::numeric_limits<double>::infinity();
    if (token == "-inf") return -std::numeric_limits<double>::infinity();
    double v = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || token.empty()) throw ConfigError("not a number: '" + token + "'");
    return v;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long long parse_integer(const std::string& token, const std::string& where) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
        throw ConfigError(where + ": expected an integer, got '" + token + "'");
    return v;
}

} // namespace

SceneParams parse_scene_config(std::istream& in, SceneParams base, const std::string& source) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = source + ":" + std::to_string(lineno);
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        auto real = [&] {
            try {
                return parse_double(value);
            } catch (const ConfigError&) {
                throw ConfigError(where + ": '" + key + "' expects a number, got '" + value + "'");
            }
        };
        if (key == "m")
            base.m = static_cast<int>(parse_integer(value, where));
        else if (key == "k")
            base.k = static_cast<int>(parse_integer(value, where));
        else if (key == "side_d_m")
            base.side_d_m = real();
        else if (key == "power_dbm")
            base.power_dbm = real();
        else if (key == "noise_dbm")
            base.overrides.noise_dbm = real();
        else if (key == "freq_ghz")
            base.overrides.freq_ghz = real();
        else if (key == "refractive_index")
            base.overrides.refractive_index = real();
        else if (key == "height_a_m")
            base.overrides.height_a_m = real();
        else if (key == "seed")
            base.seed = static_cast<std::uint64_t>(parse_integer(value, where));
        else
            throw ConfigError(where + ": unknown key '" + key + "'");
    }
    return base;
}

SceneParams read_scene_config(const std::string& path, SceneParams base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse_scene_config(in, std::move(base), path);
}

void write_scene_config(std::ostream& out, const SceneParams& p) {
    out << "m = " << p.m << '\n'
        << "k = " << p.k << '\n'
        << "side_d_m = " << format_double(p.side_d_m) << '\n'
        << "power_dbm = " << format_double(p.power_dbm) << '\n'
        << "noise_dbm = " << format_double(p.overrides.noise_dbm) << '\n'
        << "freq_ghz = " << format_double(p.overrides.freq_ghz) << '\n'
        << "refractive_index = " << format_double(p.overrides.refractive_index) << '\n'
        << "height_a_m = " << format_double(p.overrides.height_a_m) << '\n'
        << "seed = " << p.seed << '\n';
}

std::string rate_report_csv_header(int num_users) {
    std::string h;
    for (int k = 1; k <= num_users; ++k) h += "sinr_" + std::to_string(k) + ",";
    for (int k = 1; k <= num_users; ++k) h += "rate_" + std::to_string(k) + ",";
    return h + "wsr";
}

std::string rate_report_csv_row(const RateReport& report) {
    std::string row;
    for (double s : report.per_user_sinr) row += format_double(s) + ",";
    for (double r : report.per_user_rate_bits) row += format_double(r) + ",";
    return row + format_double(report.weighted_sum_rate_bits);
}

void write_history_csv(std::ostream& out, const SolverState& state) {
    out << "iteration,objective_nats,objective_bits\n";
    for (std::size_t i = 0; i < state.objective_history.size(); ++i) {
        const double nats = state.objective_history[i];
        out << i << ',' << format_double(nats) << ',' << format_double(nats / std::numbers::ln2) << '\n';
    }
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXcd& mat) {
    for (Eigen::Index r = 0; r < mat.rows(); ++r) {
        for (Eigen::Index c = 0; c < mat.cols(); ++c) {
            if (c > 0) out << ',';
            out << format_double(mat(r, c).real()) << ',' << format_double(mat(r, c).imag());
        }
        out << '\n';
    }
}

void write_locations_csv(std::ostream& out, const PinchLocations& pinch) {
    out << "m,location_m\n";
    for (int m = 0; m < pinch.size(); ++m) out << (m + 1) << ',' << format_double(pinch[m]) << '\n';
}

} // namespace pinchbf
