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

#include "nomasec/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "nomasec/errors.hpp"

namespace nomasec
{

double dbm_to_watt(double dbm)
{
    return std::pow(10.0, dbm / 10.0) * 1e-3;
}

double ScenarioConfig::gamma_e() const
{
    return std::pow(eve_distance_m, -pathloss_exp);
}

std::vector<DistanceRange> default_distance_ladder(int users_per_cluster)
{
    static const std::vector<DistanceRange> ladder = {
        {50.0, 100.0}, {100.0, 200.0}, {200.0, 300.0}, {300.0, 400.0}};
    if (users_per_cluster < 1 || users_per_cluster > (int)ladder.size())
        throw ValidationError("no default distance ladder for K = " +
                              std::to_string(users_per_cluster));
    return {ladder.begin(), ladder.begin() + users_per_cluster};
}

ScenarioConfig ScenarioConfig::defaults()
{
    ScenarioConfig cfg;
    cfg.distance_ranges = default_distance_ladder(cfg.users_per_cluster);
    cfg.qos_linear.assign(cfg.users_per_cluster - 1, 2.0);
    return cfg;
}

void ScenarioConfig::validate() const
{
    if (n_antennas < 1)
        throw ValidationError("n_antennas must be positive");
    if (n_clusters < 1)
        throw ValidationError("n_clusters must be positive");
    if (n_clusters != n_antennas)
        throw ValidationError("n_clusters must equal n_antennas (one beam per cluster)");
    if (users_per_cluster < 1)
        throw ValidationError("users_per_cluster must be >= 1");
    if (!(tx_power_w > 0.0))
        throw ValidationError("tx power must be positive");
    if (!(noise_power_w > 0.0))
        throw ValidationError("noise power must be positive");
    if (!(eve_distance_m > 0.0))
        throw ValidationError("eve distance must be positive");
    if ((int)distance_ranges.size() != users_per_cluster)
        throw ValidationError("distance_ranges must have exactly users_per_cluster entries");
    for (const auto &r : distance_ranges)
    {
        if (!(r.min_m > 0.0) || !(r.min_m < r.max_m))
            throw ValidationError("each distance range needs 0 < min < max");
    }
    if (!(sop_threshold > 0.0) || !(sop_threshold < 1.0))
        throw ValidationError("sop_threshold must lie in (0,1)");
    if ((int)qos_linear.size() != users_per_cluster - 1)
        throw ValidationError("qos thresholds must have users_per_cluster-1 entries");
    for (double r : qos_linear)
        if (!(r > 0.0))
            throw ValidationError("qos thresholds must be positive");
    if (correlation < 0.0 || correlation > 1.0)
        throw ValidationError("correlation must lie in [0,1]");
    if (!(tolerance > 0.0))
        throw ValidationError("tolerance must be positive");
    if (max_iters < 1)
        throw ValidationError("max_iters must be positive");
    if (n_realizations < 1)
        throw ValidationError("n_realizations must be >= 1");
    if (sched_retry_cap < 1)
        throw ValidationError("sched_retry_cap must be >= 1");
    if (!std::isfinite(pathloss_exp) || pathloss_exp <= 0.0)
        throw ValidationError("pathloss exponent must be positive");
}

namespace
{

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s)
    {
        if (c == sep)
        {
            out.push_back(cur);
            cur.clear();
        }
        else
            cur += c;
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string &s)
{
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string &v, int line)
{
    try
    {
        size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size())
            throw std::invalid_argument("trailing characters");
        return d;
    }
    catch (const std::exception &)
    {
        throw ParseError("line " + std::to_string(line) + ": bad numeric value '" + v + "'");
    }
}

long long parse_int(const std::string &v, int line)
{
    try
    {
        size_t pos = 0;
        long long d = std::stoll(v, &pos);
        if (pos != v.size())
            throw std::invalid_argument("trailing characters");
        return d;
    }
    catch (const std::exception &)
    {
        throw ParseError("line " + std::to_string(line) + ": bad integer value '" + v + "'");
    }
}

std::vector<DistanceRange> parse_ranges(const std::string &v, int line)
{
    // Format: "50:100,100:200,200:300"
    std::vector<DistanceRange> out;
    for (const auto &item : split(v, ','))
    {
        auto parts = split(trim(item), ':');
        if (parts.size() != 2)
            throw ParseError("line " + std::to_string(line) +
                             ": distance range must look like min:max, got '" + item + "'");
        out.push_back({parse_double(trim(parts[0]), line), parse_double(trim(parts[1]), line)});
    }
    return out;
}

} // namespace

ScenarioConfig parse_config_text(const std::string &text, const std::string &origin)
{
    ScenarioConfig cfg = ScenarioConfig::defaults();
    bool ranges_given = false;
    bool qos_given = false;
    double qos_scalar = 2.0;
    bool qos_scalar_given = false;
    std::vector<double> qos_list;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw))
    {
        ++line;
        std::string s = raw;
        size_t hash = s.find('#');
        if (hash != std::string::npos)
            s = s.substr(0, hash);
        s = trim(s);
        if (s.empty())
            continue;
        size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ParseError(origin + ": line " + std::to_string(line) + ": expected key=value");
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ParseError(origin + ": line " + std::to_string(line) + ": empty key or value");

        if (key == "N" || key == "n_antennas")
            cfg.n_antennas = (int)parse_int(val, line);
        else if (key == "G" || key == "n_clusters")
            cfg.n_clusters = (int)parse_int(val, line);
        else if (key == "K" || key == "users_per_cluster")
            cfg.users_per_cluster = (int)parse_int(val, line);
        else if (key == "P_dBm")
            cfg.tx_power_w = dbm_to_watt(parse_double(val, line));
        else if (key == "noise_dBm")
            cfg.noise_power_w = dbm_to_watt(parse_double(val, line));
        else if (key == "pathloss_exp" || key == "a")
            cfg.pathloss_exp = parse_double(val, line);
        else if (key == "d_e")
            cfg.eve_distance_m = parse_double(val, line);
        else if (key == "distance_ranges")
        {
            cfg.distance_ranges = parse_ranges(val, line);
            ranges_given = true;
        }
        else if (key == "epsilon")
            cfg.sop_threshold = parse_double(val, line);
        else if (key == "r")
        {
            auto items = split(val, ',');
            if (items.size() == 1)
            {
                qos_scalar = parse_double(trim(items[0]), line);
                qos_scalar_given = true;
            }
            else
            {
                qos_list.clear();
                for (const auto &it : items)
                    qos_list.push_back(parse_double(trim(it), line));
                qos_given = true;
            }
        }
        else if (key == "phi" || key == "correlation")
            cfg.correlation = parse_double(val, line);
        else if (key == "delta" || key == "tolerance")
            cfg.tolerance = parse_double(val, line);
        else if (key == "max_iters")
            cfg.max_iters = (int)parse_int(val, line);
        else if (key == "seed")
            cfg.rng_seed = (std::uint64_t)parse_int(val, line);
        else if (key == "realizations" || key == "n_realizations")
            cfg.n_realizations = (int)parse_int(val, line);
        else if (key == "sched_retry_cap")
            cfg.sched_retry_cap = (int)parse_int(val, line);
        else if (key == "freeze_distances")
            cfg.freeze_distances = parse_int(val, line) != 0;
        else if (key == "calib_tol")
            cfg.calib_tol = parse_double(val, line);
        else
            throw ParseError(origin + ": line " + std::to_string(line) + ": unknown key '" + key +
                             "'");
    }

    if (!ranges_given)
        cfg.distance_ranges = default_distance_ladder(cfg.users_per_cluster);
    if (qos_given)
        cfg.qos_linear = qos_list;
    else
        cfg.qos_linear.assign(std::max(0, cfg.users_per_cluster - 1),
                              qos_scalar_given ? qos_scalar : 2.0);

    cfg.validate();
    return cfg;
}

ScenarioConfig parse_config(const std::string &path)
{
    std::ifstream f(path);
    if (!f)
        throw ParseError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str(), path);
}

} // namespace nomasec
