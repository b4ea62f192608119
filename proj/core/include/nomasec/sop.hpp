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
#include <functional>

#include "nomasec/rates.hpp"

namespace nomasec
{

/// Outage parameter pair: sigma = ln(1/epsilon0). epsilon0 is the outage
/// level the deterministic surrogate bound is driven at; the calibration
/// loop retunes it until the exact SOP matches the target.
struct BernsteinParams
{
    double sigma = 0.0;
    double epsilon0 = 1.0;

    static BernsteinParams from_epsilon0(double eps0);
    static BernsteinParams from_sigma(double sigma);
};

/// Deterministic tail threshold for a Hermitian Gaussian quadratic form:
///   Tr(Q) + sqrt(2 sigma) ||Q||_F + sigma * max(lambda_max(Q), 0)
/// Any z at or above this value certifies Pr{h^H Q h > z} <= exp(-sigma).
double bernstein_threshold(const HermitianForm &q, double sigma);

/// Exact tail probability Pr{h^H Q h > z} for z >= 0 via the partial
/// fraction expansion over the positive eigenvalues. Eigenvalues closer
/// than a relative 1e-9 are jittered multiplicatively (deterministic
/// alternating signs); if they still coincide a DegenerateSpectrumError is
/// thrown so the caller can perturb. Products are accumulated in
/// log-magnitude + sign form.
double exact_sop(const HermitianForm &q, double z);

struct McResult
{
    double estimate = 0.0;
    double std_error = 0.0;
};

/// Monte Carlo frequency of h^H Q h > z over i.i.d. standard circular
/// complex Gaussian draws, with the binomial standard error. Seeded and
/// deterministic; blocks of samples use sub-seeds so the estimator can be
/// sharded without changing its law.
McResult mc_sop(const HermitianForm &q, double z, std::int64_t n_samples, std::uint64_t seed);

/// What a calibration probe reports back: whether the inner problem was
/// solvable at this epsilon0 and, if so, the worst per-SU exact SOP of the
/// returned solution.
struct CalibrationProbe
{
    bool feasible = false;
    double actual_sop = 0.0;
};

struct CalibrationResult
{
    BernsteinParams params;
    double actual_sop = 0.0; // at the returned epsilon0
    int probes = 0;
    bool saturated = false;   // epsilon0 = 1 with actual SOP still below target
    bool monotone_ok = true;  // probe ordering consistent with the monotonicity premise
};

/// Bisection on epsilon0 in [epsilon, 1] until the achieved exact SOP lands
/// within tol of the target epsilon. Infeasible probes (the surrogate bound
/// cannot be met at that sigma) count as over-conservative and push the
/// bracket up. Returns a saturated result when even epsilon0 = 1 stays
/// below target. Propagates InfeasibleError only when no epsilon0 helps
/// (empty QoS region surfaces as an infeasible probe at epsilon0 = 1).
CalibrationResult calibrate_epsilon0(const std::function<CalibrationProbe(double)> &solve_at,
                                     double epsilon, double tol, int max_probes = 40);

} // namespace nomasec
