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

#include <optional>
#include <string>
#include <vector>

#include "nomasec/oma.hpp"
#include "nomasec/sop.hpp"

namespace nomasec
{

enum class CaseKind
{
    Lower,
    Upper,
    Oma
};

const char *to_string(CaseKind k);

/// Outcome of one (realization, case, metric) cell.
struct RealizationOutcome
{
    SolveStatus status = SolveStatus::Infeasible;
    double rate_raw = 0.0;     // solver objective, bits/s/Hz, unclamped
    double rate_clamped = 0.0; // max(rate_raw, 0)
    double actual_sop = 0.0;   // worst per-SU exact SOP (0 when infeasible)
    int iterations = 0;
    double epsilon0 = 0.0; // calibrated or swept outage parameter
    int calib_probes = 0;
    bool scheduling_ok = true;
    int sched_retries = 0;
};

/// Solves one realization for one case/metric. With fixed_eps0 set the
/// outage parameter is used directly (sigma = ln(1/eps0)); otherwise the
/// epsilon0 calibration bisection drives the worst per-SU exact SOP to the
/// configured target. Infeasible realizations come back as zero-rate
/// outcomes, never as exceptions.
RealizationOutcome solve_realization(const Instance &inst, CaseKind kind, Metric metric,
                                     std::optional<double> fixed_eps0 = std::nullopt);

/// Calibrated solve exposing the full SolveResult (used by tests and the
/// acceptance suite). Throws InfeasibleError(QosEmpty) when the QoS/power
/// polytope is empty.
struct CalibratedSolve
{
    SolveResult result;
    CalibrationResult calibration;
};
CalibratedSolve solve_calibrated(const Instance &inst, EveCase ecase, Metric metric);

/// Same, but over the harness-level case set (includes the orthogonal
/// baseline; its result carries the 1/K pre-log already applied).
CalibratedSolve solve_calibrated_kind(const Instance &inst, CaseKind kind, Metric metric);

enum class SweepVar
{
    TxPower,
    SopThreshold,
    Correlation,
    QosThreshold,
    UsersPerCluster,
    Epsilon0
};

const char *to_string(SweepVar v);

struct ExperimentSpec
{
    SweepVar sweep_variable = SweepVar::TxPower;
    std::vector<double> sweep_values;
    std::vector<CaseKind> cases = {CaseKind::Lower, CaseKind::Upper, CaseKind::Oma};
    std::vector<Metric> metrics = {Metric::MaxMin, Metric::MaxSum};
    int n_realizations = 0; // 0: take the base config's count
    ScenarioConfig base;
    std::string out_path = "results.csv";
    bool detail = false;
    int threads = 0; // 0: hardware concurrency
    std::uint64_t master_seed = 1;
};

/// Built-in sweeps: epsilon0_sweep, power_sweep, sop_sweep,
/// correlation_sweep, qos_sweep, cluster_size_sweep.
ExperimentSpec experiment_from_name(const std::string &name, const ScenarioConfig &base);

/// Flat key=value experiment file (sweep_variable, sweep_values, cases,
/// metrics, realizations).
ExperimentSpec experiment_from_file(const std::string &path, const ScenarioConfig &base);

/// Applies one sweep value to a config copy (Epsilon0 leaves it unchanged;
/// the value rides through solve_realization instead).
ScenarioConfig apply_sweep_value(const ScenarioConfig &base, SweepVar var, double value);

struct SummaryRow
{
    SweepVar var;
    double value = 0.0;
    CaseKind kind = CaseKind::Lower;
    Metric metric = Metric::MaxMin;
    double mean_rate = 0.0;
    double mean_actual_sop = 0.0;
    double infeasible_frac = 0.0;
    double mean_iters = 0.0;
    int n_realizations = 0;
    std::uint64_t master_seed = 0;
};

struct ExperimentResult
{
    std::vector<SummaryRow> rows;
    // detail[value_idx][case_idx][metric_idx][realization]
    std::vector<std::vector<std::vector<std::vector<RealizationOutcome>>>> detail;
};

/// Runs the full sweep on a worker pool (realizations are independent) and
/// writes the summary CSV, plus a sibling <out>.detail.csv when requested.
/// Byte-identical output for identical (spec, master_seed).
ExperimentResult run_experiment(const ExperimentSpec &spec);

} // namespace nomasec
