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

// Internal machinery shared by the max-min and max-sum solvers. Not
// installed.

#pragma once

#include <vector>

#include "nomasec/cone.hpp"
#include "nomasec/instance.hpp"
#include "nomasec/linprog.hpp"
#include "nomasec/solve_types.hpp"

namespace nomasec::detail
{

/// Column layout of the fractional-programming LPs:
/// [ alpha(g,k) row-major | z(g) | tau ].
struct LpLayout
{
    int G = 0;
    int K = 0;
    int n() const { return G * K + G + 1; }
    int ai(int g, int k) const { return g * K + k; }
    int zi(int g) const { return G * K + g; }
    int ti() const { return G * K + G; }
};

/// QoS rows, linearized: S_{g,k} >= r_k (I1 + I2 + 1).
void add_qos_rows(LinearProgram &lp, const Instance &inst, const LpLayout &L);

/// Total power row: sum alpha <= 1.
void add_power_row(LinearProgram &lp, const Instance &inst, const LpLayout &L);

/// Surrogate outage rows for the detecting eavesdropper: the rank-1 form
/// makes trace, Frobenius norm and top eigenvalue coincide, so the bound is
/// one linear row per cluster: (1 + sqrt(2 sigma) + sigma) * gamma_rho *
/// alpha_{g,0} <= z_g.
void add_sop_lower_rows(LinearProgram &lp, const Instance &inst, const LpLayout &L, double sigma);

struct FractionalSolve
{
    double lambda = 0.0; // achieved min-ratio at the final point
    PowerAllocation alloc;
    SlackVector slack;
    int iterations = 0;
    std::vector<double> lambda_trace;
};

/// Dinkelbach iteration for max min_g (1 + S_g a_{g,0}) / (u_g (1 + z_g))
/// over the lower-bound feasible set. weights = all-ones gives the plain
/// max-min secrecy problem; general weights implement the polyblock
/// projection. tol applies to the inner LP optimum (the algorithm's
/// comparison value).
FractionalSolve dinkelbach_maxmin(const Instance &inst, double sigma,
                                  const Eigen::VectorXd &weights, double tol, int cap);

/// Conservative threshold for the non-detecting eavesdropper with the
/// Frobenius surrogate for the top-eigenvalue term:
///   Tr(Q) + (sqrt(2 sigma) + sigma) ||Q||_F,  Q = Sigma_u(alpha, z).
/// Using it uniformly keeps the alternating steps mutually feasible; the
/// epsilon0 calibration absorbs the extra slack.
double upper_soc_threshold(const Instance &inst, double sigma, const PowerAllocation &alloc,
                           int g, double z);

/// Per-cluster minimal z radius meeting the surrogate threshold.
/// Throws InfeasibleError(Surrogate) when no finite z works.
SlackVector upper_z_step(const Instance &inst, double sigma, const PowerAllocation &alloc);

/// Adds the per-cluster surrogate outage SOC constraints (z fixed) to an
/// alpha-only cone program. Layout: variables are alpha(g,k) row-major.
void add_upper_socs(ConeProgram &prog, const Instance &inst, double sigma,
                    const SlackVector &slack);

/// Adds QoS / power / nonnegativity rows to an alpha-only cone program.
void add_alpha_polytope(ConeProgram &prog, const Instance &inst);

/// min_g secrecy rate and the sum, at a point.
double min_rate_bits(const Instance &inst, const PowerAllocation &a, const SlackVector &z);
double sum_rate_bits(const Instance &inst, const PowerAllocation &a, const SlackVector &z);

} // namespace nomasec::detail
