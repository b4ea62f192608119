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

/// Result of projecting a point u onto the upper boundary of the feasible
/// ratio set: the scaling lambda with Phi(u) = lambda * u, plus the
/// allocation achieving it.
struct ProjectionResult
{
    double lambda = 0.0;
    Eigen::VectorXd phi; // lambda * u
    PowerAllocation alloc;
    SlackVector slack;
    int iterations = 0;
};

/// Boundary projection via the weighted max-min fractional program
/// max min_g (1 + S_g a_{g,0}) / (u_g (1 + z_g)), solved by the Dinkelbach
/// iteration. Requires u >= 1 componentwise.
ProjectionResult project(const Instance &inst, double sigma, const Eigen::VectorXd &u,
                         double tol);

/// Max-sum secrecy rate, detecting eavesdropper: outer polyblock
/// approximation over the per-cluster ratio space. Globally optimal up to
/// the relative projection-distance tolerance; on the iteration cap the
/// best feasible point found is returned with status IterationCap.
/// SolveResult::trace holds the incumbent value per iteration and
/// bound_trace the polyblock bound.
SolveResult mssr_lower(const Instance &inst, double sigma);

/// Max-sum secrecy rate, non-detecting eavesdropper: alternating
/// optimization; the power step maximizes the sum of SU log-numerators over
/// the second-order-cone feasible set by an interior-point pass.
SolveResult mssr_upper(const Instance &inst, double sigma, const PowerAllocation &a_init);

} // namespace nomasec
