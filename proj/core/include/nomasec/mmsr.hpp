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

#include "nomasec/solve_types.hpp"

namespace nomasec
{

/// Max-min secrecy rate, detecting eavesdropper. Dinkelbach iteration over
/// linear programs; globally optimal. The lambda trace is recorded in
/// SolveResult::trace and is nondecreasing; the returned objective is
/// log2(lambda_final).
///
/// Throws InfeasibleError(QosEmpty) when the QoS/power polytope is empty.
SolveResult mmsr_lower(const Instance &inst, double sigma);

/// Max-min secrecy rate, non-detecting eavesdropper. Alternating
/// optimization: per-cluster minimal slack against the surrogate outage
/// threshold, then a power step solved by bisection on the target rate with
/// second-order-cone feasibility probes. Objective trace is nondecreasing;
/// status is Stationary on convergence.
///
/// Throws InfeasibleError: QosEmpty when no power allocation meets QoS,
/// Surrogate when the conservative outage bound cannot be met at this
/// sigma (the calibration loop treats that as an over-tight probe).
SolveResult mmsr_upper(const Instance &inst, double sigma, const PowerAllocation &a_init);

/// Feasible starting allocation for the upper-bound solvers: maximizes the
/// worst SU numerator under the (tighter, rank-1) detecting-eavesdropper
/// constraint set, one LP.
PowerAllocation init_power(const Instance &inst, double sigma);

} // namespace nomasec
