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

#include "nomasec/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "nomasec/errors.hpp"
#include "nomasec/mmsr.hpp"
#include "nomasec/mssr.hpp"

namespace nomasec
{

const char *to_string(CaseKind k)
{
    switch (k)
    {
    case CaseKind::Lower:
        return "lower";
    case CaseKind::Upper:
        return "upper";
    case CaseKind::Oma:
        return "oma";
    }
    return "?";
}

const char *to_string(SweepVar v)
{
    switch (v)
    {
    case SweepVar::TxPower:
        return "tx_power";
    case SweepVar::SopThreshold:
        return "sop_threshold";
    case SweepVar::Correlation:
        return "correlation";
    case SweepVar::QosThreshold:
        return "qos_threshold";
    case SweepVar::UsersPerCluster:
        return "users_per_cluster";
    case SweepVar::Epsilon0:
        return "epsilon0";
    }
    return "?";
}

namespace
{

struct SolveAttempt
{
    bool feasible = false;
    SolveResult result;
    double worst_sop = 0.0;
};

// One solve at a fixed sigma. Surrogate infeasibility is a per-sigma
// verdict; empty QoS is permanent and propagates.
SolveAttempt solve_at_sigma(const Instance &inst, CaseKind kind, Metric metric, double sigma)
{
    SolveAttempt att;
    try
    {
        SolveResult res;
        if (kind == CaseKind::Lower)
        {
            res = metric == Metric::MaxMin ? mmsr_lower(inst, sigma) : mssr_lower(inst, sigma);
        }
        else if (kind == CaseKind::Upper)
        {
            PowerAllocation a0 = init_power(inst, sigma);
            res = metric == Metric::MaxMin ? mmsr_upper(inst, sigma, a0)
                                           : mssr_upper(inst, sigma, a0);
        }
        else
        {
            // Orthogonal baseline wiretapped by the non-detecting
            // eavesdropper; the SU slot carries all concurrent SU beams.
            OmaResult oma = oma_baseline(inst, EveCase::Upper, metric, sigma);
            res = oma.slot;
            res.objective_bits = oma.objective_bits;
            res.per_su_rate = oma.per_su_rate;
        }
        att.feasible = true;
        att.result = std::move(res);
        att.worst_sop =
            att.result.per_su_actual_sop.size() ? att.result.per_su_actual_sop.maxCoeff() : 0.0;
    }
    catch (const InfeasibleError &e)
    {
        if (e.kind == InfeasibleKind::QosEmpty)
            throw;
        att.feasible = false; // surrogate too tight at this sigma
    }
    catch (const NumericalError &)
    {
        att.feasible = false;
    }
    return att;
}

} // namespace

CalibratedSolve solve_calibrated_kind(const Instance &inst, CaseKind kind, Metric metric)
{
    std::map<double, SolveAttempt> cache;
    auto closure = [&](double eps0) -> CalibrationProbe {
        double sigma = std::log(1.0 / eps0);
        SolveAttempt att = solve_at_sigma(inst, kind, metric, sigma);
        CalibrationProbe probe;
        probe.feasible = att.feasible;
        probe.actual_sop = att.worst_sop;
        cache[eps0] = std::move(att);
        return probe;
    };

    CalibratedSolve out;
    out.calibration = calibrate_epsilon0(closure, inst.cfg.sop_threshold,
                                         inst.cfg.calibration_tol());
    auto it = cache.find(out.calibration.params.epsilon0);
    if (it == cache.end() || !it->second.feasible)
        throw NumericalError("calibration returned an unprobed epsilon0");
    out.result = std::move(it->second.result);
    return out;
}

CalibratedSolve solve_calibrated(const Instance &inst, EveCase ecase, Metric metric)
{
    return solve_calibrated_kind(
        inst, ecase == EveCase::Lower ? CaseKind::Lower : CaseKind::Upper, metric);
}

RealizationOutcome solve_realization(const Instance &inst, CaseKind kind, Metric metric,
                                     std::optional<double> fixed_eps0)
{
    RealizationOutcome out;
    out.scheduling_ok = inst.scheduling_ok;
    out.sched_retries = inst.retries;
    if (!inst.scheduling_ok)
        return out; // zero-rate, status Infeasible

    try
    {
        if (fixed_eps0)
        {
            double sigma = std::log(1.0 / *fixed_eps0);
            SolveAttempt att = solve_at_sigma(inst, kind, metric, sigma);
            if (!att.feasible)
                return out;
            out.status = att.result.status;
            out.rate_raw = att.result.objective_bits;
            out.iterations = att.result.iterations;
            out.actual_sop = att.worst_sop;
            out.epsilon0 = *fixed_eps0;
        }
        else
        {
            CalibratedSolve cs = solve_calibrated_kind(inst, kind, metric);
            out.status = cs.result.status;
            out.rate_raw = cs.result.objective_bits;
            out.iterations = cs.result.iterations;
            out.actual_sop = cs.calibration.actual_sop;
            out.epsilon0 = cs.calibration.params.epsilon0;
            out.calib_probes = cs.calibration.probes;
        }
        out.rate_clamped = std::max(0.0, out.rate_raw);
    }
    catch (const InfeasibleError &)
    {
        out.status = SolveStatus::Infeasible;
        out.rate_raw = 0.0;
        out.rate_clamped = 0.0;
        out.actual_sop = 0.0;
    }
    return out;
}

ScenarioConfig apply_sweep_value(const ScenarioConfig &base, SweepVar var, double value)
{
    ScenarioConfig cfg = base;
    switch (var)
    {
    case SweepVar::TxPower:
        cfg.tx_power_w = dbm_to_watt(value);
        break;
    case SweepVar::SopThreshold:
        cfg.sop_threshold = value;
        break;
    case SweepVar::Correlation:
        cfg.correlation = value;
        break;
    case SweepVar::QosThreshold:
        cfg.qos_linear.assign(std::max(0, cfg.users_per_cluster - 1), value);
        break;
    case SweepVar::UsersPerCluster:
    {
        int k = (int)std::lround(value);
        double r = cfg.qos_linear.empty() ? 2.0 : cfg.qos_linear[0];
        cfg.users_per_cluster = k;
        cfg.distance_ranges = default_distance_ladder(k);
        cfg.qos_linear.assign(std::max(0, k - 1), r);
        break;
    }
    case SweepVar::Epsilon0:
        break; // rides through solve_realization
    }
    cfg.validate();
    return cfg;
}

ExperimentSpec experiment_from_name(const std::string &name, const ScenarioConfig &base)
{
    ExperimentSpec spec;
    spec.base = base;
    if (name == "epsilon0_sweep")
    {
        spec.sweep_variable = SweepVar::Epsilon0;
        spec.sweep_values = {0.01, 0.1, 0.5, 1.0};
        spec.cases = {CaseKind::Lower, CaseKind::Upper};
    }
    else if (name == "power_sweep")
    {
        spec.sweep_variable = SweepVar::TxPower;
        spec.sweep_values = {20, 25, 30, 35, 40};
    }
    else if (name == "sop_sweep")
    {
        spec.sweep_variable = SweepVar::SopThreshold;
        spec.sweep_values = {1e-3, 1e-2, 1e-1};
    }
    else if (name == "correlation_sweep")
    {
        spec.sweep_variable = SweepVar::Correlation;
        spec.sweep_values = {0.5, 0.7, 0.9};
    }
    else if (name == "qos_sweep")
    {
        spec.sweep_variable = SweepVar::QosThreshold;
        spec.sweep_values = {1, 2, 4};
    }
    else if (name == "cluster_size_sweep")
    {
        spec.sweep_variable = SweepVar::UsersPerCluster;
        spec.sweep_values = {2, 3, 4};
    }
    else
    {
        throw ValidationError("unknown experiment '" + name + "'");
    }
    return spec;
}

namespace
{

std::vector<std::string> split_csl(const std::string &s)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s)
    {
        if (c == ',')
        {
            out.push_back(cur);
            cur.clear();
        }
        else if (!isspace((unsigned char)c))
            cur += c;
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

SweepVar sweep_var_from_string(const std::string &s)
{
    if (s == "tx_power")
        return SweepVar::TxPower;
    if (s == "sop_threshold")
        return SweepVar::SopThreshold;
    if (s == "correlation")
        return SweepVar::Correlation;
    if (s == "qos_threshold")
        return SweepVar::QosThreshold;
    if (s == "users_per_cluster")
        return SweepVar::UsersPerCluster;
    if (s == "epsilon0")
        return SweepVar::Epsilon0;
    throw ParseError("unknown sweep variable '" + s + "'");
}

CaseKind case_from_string(const std::string &s)
{
    if (s == "lower")
        return CaseKind::Lower;
    if (s == "upper")
        return CaseKind::Upper;
    if (s == "oma")
        return CaseKind::Oma;
    throw ParseError("unknown case '" + s + "'");
}

Metric metric_from_string(const std::string &s)
{
    if (s == "mmsr")
        return Metric::MaxMin;
    if (s == "mssr")
        return Metric::MaxSum;
    throw ParseError("unknown metric '" + s + "'");
}

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

} // namespace

ExperimentSpec experiment_from_file(const std::string &path, const ScenarioConfig &base)
{
    std::ifstream f(path);
    if (!f)
        throw ParseError("cannot open experiment file '" + path + "'");
    ExperimentSpec spec;
    spec.base = base;
    bool have_var = false, have_values = false;

    std::string raw;
    int line = 0;
    while (std::getline(f, raw))
    {
        ++line;
        std::string s = raw;
        size_t hash = s.find('#');
        if (hash != std::string::npos)
            s = s.substr(0, hash);
        auto is_blank = s.find_first_not_of(" \t\r\n") == std::string::npos;
        if (is_blank)
            continue;
        size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ParseError(path + ": line " + std::to_string(line) + ": expected key=value");
        std::string key = s.substr(0, eq);
        std::string val = s.substr(eq + 1);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t\r\n") + 1);
        val.erase(0, val.find_first_not_of(" \t"));
        val.erase(val.find_last_not_of(" \t\r\n") + 1);

        if (key == "sweep_variable")
        {
            spec.sweep_variable = sweep_var_from_string(val);
            have_var = true;
        }
        else if (key == "sweep_values")
        {
            spec.sweep_values.clear();
            for (const auto &v : split_csl(val))
                spec.sweep_values.push_back(std::stod(v));
            have_values = true;
        }
        else if (key == "cases")
        {
            spec.cases.clear();
            for (const auto &v : split_csl(val))
                spec.cases.push_back(case_from_string(v));
        }
        else if (key == "metrics")
        {
            spec.metrics.clear();
            for (const auto &v : split_csl(val))
                spec.metrics.push_back(metric_from_string(v));
        }
        else if (key == "realizations" || key == "n_realizations")
        {
            spec.n_realizations = std::stoi(val);
        }
        else
        {
            throw ParseError(path + ": line " + std::to_string(line) + ": unknown key '" + key +
                             "'");
        }
    }
    if (!have_var || !have_values || spec.sweep_values.empty())
        throw ParseError(path + ": experiment needs sweep_variable and nonempty sweep_values");
    return spec;
}

ExperimentResult run_experiment(const ExperimentSpec &spec)
{
    if (spec.sweep_values.empty())
        throw ValidationError("experiment: sweep_values must be nonempty");
    if (spec.cases.empty() || spec.metrics.empty())
        throw ValidationError("experiment: cases and metrics must be nonempty");
    const int n_real = spec.n_realizations > 0 ? spec.n_realizations : spec.base.n_realizations;
    if (n_real < 1)
        throw ValidationError("experiment: n_realizations must be >= 1");

    const size_t n_vals = spec.sweep_values.size();
    const size_t n_cases = spec.cases.size();
    const size_t n_metrics = spec.metrics.size();

    // Per-value configs (validated up front so errors surface before work).
    std::vector<ScenarioConfig> cfgs;
    for (double v : spec.sweep_values)
        cfgs.push_back(apply_sweep_value(spec.base, spec.sweep_variable, v));

    ExperimentResult result;
    result.detail.assign(
        n_vals, std::vector<std::vector<std::vector<RealizationOutcome>>>(
                    n_cases, std::vector<std::vector<RealizationOutcome>>(
                                 n_metrics, std::vector<RealizationOutcome>(n_real))));

    // Work queue: one task per (value, realization); the assembled channels
    // are shared across the case/metric grid of that task.
    struct Task
    {
        size_t vi;
        int ri;
    };
    std::vector<Task> tasks;
    for (size_t vi = 0; vi < n_vals; ++vi)
        for (int ri = 0; ri < n_real; ++ri)
            tasks.push_back({vi, ri});

    std::atomic<size_t> cursor{0};
    auto worker = [&]() {
        while (true)
        {
            size_t t = cursor.fetch_add(1);
            if (t >= tasks.size())
                return;
            const Task &task = tasks[t];
            const ScenarioConfig &cfg = cfgs[task.vi];
            std::uint64_t seed = spec.master_seed + (std::uint64_t)task.ri;
            Instance inst = assemble_realization(cfg, seed);
            std::optional<double> eps0;
            if (spec.sweep_variable == SweepVar::Epsilon0)
                eps0 = spec.sweep_values[task.vi];
            for (size_t ci = 0; ci < n_cases; ++ci)
                for (size_t mi = 0; mi < n_metrics; ++mi)
                    result.detail[task.vi][ci][mi][task.ri] =
                        solve_realization(inst, spec.cases[ci], spec.metrics[mi], eps0);
        }
    };

    int n_threads = spec.threads > 0 ? spec.threads
                                     : (int)std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min<int>(n_threads, (int)tasks.size());
    std::vector<std::thread> pool;
    for (int i = 1; i < n_threads; ++i)
        pool.emplace_back(worker);
    worker();
    for (auto &th : pool)
        th.join();

    // Canonical aggregation order: value, case, metric.
    for (size_t vi = 0; vi < n_vals; ++vi)
        for (size_t ci = 0; ci < n_cases; ++ci)
            for (size_t mi = 0; mi < n_metrics; ++mi)
            {
                const auto &cells = result.detail[vi][ci][mi];
                SummaryRow row;
                row.var = spec.sweep_variable;
                row.value = spec.sweep_values[vi];
                row.kind = spec.cases[ci];
                row.metric = spec.metrics[mi];
                row.n_realizations = n_real;
                row.master_seed = spec.master_seed;
                double iters = 0.0;
                int n_feasible = 0;
                for (const auto &c : cells)
                {
                    row.mean_rate += c.rate_clamped;
                    row.mean_actual_sop += c.actual_sop;
                    if (c.status == SolveStatus::Infeasible)
                        row.infeasible_frac += 1.0;
                    else
                    {
                        iters += c.iterations;
                        ++n_feasible;
                    }
                }
                row.mean_rate /= n_real;
                row.mean_actual_sop /= n_real;
                row.infeasible_frac /= n_real;
                row.mean_iters = n_feasible > 0 ? iters / n_feasible : 0.0;
                result.rows.push_back(row);
            }

    // Summary CSV (schema is part of the interface contract).
    if (!spec.out_path.empty())
    {
        std::ofstream out(spec.out_path);
        if (!out)
            throw Error("cannot open output file '" + spec.out_path + "'");
        out << "sweep_var,sweep_value,case,metric,mean_rate_bps_hz,mean_actual_sop,"
               "infeasible_frac,mean_iters,n_realizations,master_seed\n";
        for (const auto &r : result.rows)
        {
            out << to_string(r.var) << ',' << fmt(r.value) << ',' << to_string(r.kind) << ','
                << to_string(r.metric) << ',' << fmt(r.mean_rate) << ','
                << fmt(r.mean_actual_sop) << ',' << fmt(r.infeasible_frac) << ','
                << fmt(r.mean_iters) << ',' << r.n_realizations << ',' << r.master_seed << '\n';
        }

        if (spec.detail)
        {
            std::string dpath = spec.out_path;
            std::string suffix = ".csv";
            if (dpath.size() > suffix.size() &&
                dpath.compare(dpath.size() - suffix.size(), suffix.size(), suffix) == 0)
                dpath = dpath.substr(0, dpath.size() - suffix.size());
            dpath += ".detail.csv";
            std::ofstream dout(dpath);
            if (!dout)
                throw Error("cannot open detail file '" + dpath + "'");
            dout << "sweep_var,sweep_value,case,metric,realization,seed,status,"
                    "rate_raw_bps_hz,rate_clamped_bps_hz,actual_sop,iterations,epsilon0,"
                    "sched_retries\n";
            for (size_t vi = 0; vi < n_vals; ++vi)
                for (size_t ci = 0; ci < n_cases; ++ci)
                    for (size_t mi = 0; mi < n_metrics; ++mi)
                        for (int ri = 0; ri < n_real; ++ri)
                        {
                            const auto &c = result.detail[vi][ci][mi][ri];
                            dout << to_string(spec.sweep_variable) << ','
                                 << fmt(spec.sweep_values[vi]) << ','
                                 << to_string(spec.cases[ci]) << ','
                                 << to_string(spec.metrics[mi]) << ',' << ri << ','
                                 << spec.master_seed + (std::uint64_t)ri << ','
                                 << to_string(c.status) << ',' << fmt(c.rate_raw) << ','
                                 << fmt(c.rate_clamped) << ',' << fmt(c.actual_sop) << ','
                                 << c.iterations << ',' << fmt(c.epsilon0) << ','
                                 << c.sched_retries << '\n';
                        }
        }
    }
    return result;
}

} // namespace nomasec
