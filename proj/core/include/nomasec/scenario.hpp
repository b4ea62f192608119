// noma-sec: secure-users oriented downlink MISO-NOMA power allocation
// Copyright (C) 2026 the noma-sec contributors
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
#include <string>
#include <vector>

namespace nomasec
{

/// Converts a dBm figure to watts. All internal math runs on linear scale;
/// the conversion happens exactly once, at config load.
double dbm_to_watt(double dbm);

struct DistanceRange
{
    double min_m = 0.0;
    double max_m = 0.0;
};

/// Full description of one simulated system: array geometry, channel
/// statistics, constraint levels and solver knobs. Power figures are stored
/// in watts; the config file takes them in dBm.
struct ScenarioConfig
{
    int n_antennas = 6;        // N
    int n_clusters = 6;        // G, must equal N (one spatial beam per cluster)
    int users_per_cluster = 3; // K, user 0 of each cluster is the SU

    double tx_power_w = 10.0;      // 40 dBm
    double noise_power_w = 1e-12;  // -90 dBm
    double pathloss_exp = 4.0;     // a
    double eve_distance_m = 200.0; // d_e

    // One range per user slot; slot 0 is the SU. Users draw their distance
    // uniformly from the range of their slot.
    std::vector<DistanceRange> distance_ranges;

    double sop_threshold = 1e-2;    // epsilon, per-SU secrecy outage cap
    std::vector<double> qos_linear; // SINR floor per QU slot (k = 1..K-1), linear scale
    double correlation = 0.9;       // phi: QU generation coupling and scheduling threshold

    double tolerance = 1e-2; // delta, solver convergence tolerance
    int max_iters = 50;
    std::uint64_t rng_seed = 1;

    int n_realizations = 100;
    int sched_retry_cap = 100;    // per-QU redraw budget before the realization is flagged
    bool freeze_distances = false;
    double calib_tol = -1.0; // actual-SOP bisection tolerance; <0 means epsilon/10

    double rho() const { return tx_power_w / noise_power_w; }
    double gamma_e() const;
    double calibration_tol() const { return calib_tol > 0.0 ? calib_tol : sop_threshold / 10.0; }

    /// Throws ValidationError naming the violated invariant.
    void validate() const;

    /// Baseline parameter set used when a config file leaves keys out.
    static ScenarioConfig defaults();
};

/// The canonical distance ladder; the first K rungs serve a K-user cluster.
std::vector<DistanceRange> default_distance_ladder(int users_per_cluster);

/// Parses a flat key=value file ('#' starts a comment). Unknown keys are
/// rejected with a ParseError carrying the line number; missing keys keep
/// their defaults. An empty file yields ScenarioConfig::defaults().
ScenarioConfig parse_config(const std::string &path);

/// Same parser over an in-memory buffer (used by tests and the experiment
/// file reader).
ScenarioConfig parse_config_text(const std::string &text, const std::string &origin = "<memory>");

} // namespace nomasec
