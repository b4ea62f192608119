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

#include "nomasec/mmsr.hpp"

#include <cmath>

#include "nomasec/errors.hpp"
#include "solvers_common.hpp"

namespace nomasec
{

using namespace detail;

SolveResult mmsr_lower(const Instance &inst, double sigma)
{
    const int G = inst.clusters();
    FractionalSolve fs = dinkelbach_maxmin(inst, sigma, Eigen::VectorXd::Ones(G),
                                           inst.cfg.tolerance, inst.cfg.max_iters);
    SolveResult res;
    res.status = fs.iterations >= inst.cfg.max_iters ? SolveStatus::IterationCap
                                                     : SolveStatus::Optimal;
    res.alloc = fs.alloc;
    res.slack = fs.slack;
    res.objective_bits = std::log2(fs.lambda);
    res.trace = fs.lambda_trace;
    res.iterations = fs.iterations;
    finalize_result(inst, EveCase::Lower, res);
    return res;
}

PowerAllocation init_power(const Instance &inst, double sigma)
{
    const LpLayout L{inst.clusters(), inst.users()};
    LinearProgram lp = LinearProgram::make(L.n());
    for (int g = 0; g < L.G; ++g)
        for (int k = 0; k < L.K; ++k)
        {
            lp.lower(L.ai(g, k)) = 0.0;
            lp.upper(L.ai(g, k)) = 1.0;
        }
    for (int g = 0; g < L.G; ++g)
        lp.lower(L.zi(g)) = 0.0;
    add_qos_rows(lp, inst, L);
    add_power_row(lp, inst, L);
    add_sop_lower_rows(lp, inst, L, sigma);
    // Numerator-only objective: max tau with 1 + S_g a_{g,0} >= tau.
    for (int g = 0; g < L.G; ++g)
    {
        Eigen::VectorXd row = Eigen::VectorXd::Zero(L.n());
        row(L.ai(g, 0)) = -inst.su_gain(g);
        row(L.ti()) = 1.0;
        lp.add_row(row, 1.0);
    }
    lp.c = Eigen::VectorXd::Zero(L.n());
    lp.c(L.ti()) = 1.0;
    lp.maximize = true;

    LpSolution sol = solve_lp(lp);
    if (sol.status == LpStatus::Infeasible)
        throw InfeasibleError("init_power: QoS/power polytope is empty",
                              InfeasibleKind::QosEmpty);
    if (sol.status != LpStatus::Optimal)
        throw NumericalError("init_power: LP unbounded");

    PowerAllocation a(L.G, L.K);
    for (int g = 0; g < L.G; ++g)
        for (int k = 0; k < L.K; ++k)
            a.a(g, k) = std::max(0.0, sol.x(L.ai(g, k)));
    return a;
}

namespace
{

// Power step of the max-min AO: bisection on the target rate tau (bits);
// each probe is a second-order-cone feasibility problem in alpha alone.
// Returns the best allocation found, or the incumbent when no probe beats
// it. lo must be an achieved (feasible) objective.
PowerAllocation maxmin_power_step(const Instance &inst, double sigma, const SlackVector &z,
                                  const PowerAllocation &incumbent, double lo_bits)
{
    const int G = inst.clusters();
    const int K = inst.users();
    const int n = G * K;

    double hi_bits = kInf;
    for (int g = 0; g < G; ++g)
        hi_bits = std::min(hi_bits,
                           std::log2((1.0 + inst.su_gain(g)) / (1.0 + z.z(g))));
    if (!(hi_bits > lo_bits))
        return incumbent;

    PowerAllocation best = incumbent;
    double lo = lo_bits, hi = hi_bits;
    const double tol = std::max(1e-6, inst.cfg.tolerance / 10.0);

    // Row-major alpha layout for the cone program.
    Eigen::VectorXd warm_rm(n);
    for (int g = 0; g < G; ++g)
        for (int k = 0; k < K; ++k)
            warm_rm(g * K + k) = incumbent.a(g, k);

    while (hi - lo > tol)
    {
        double mid = 0.5 * (lo + hi);
        ConeProgram prog = ConeProgram::make(n);
        add_alpha_polytope(prog, inst);
        add_upper_socs(prog, inst, sigma, z);
        for (int g = 0; g < G; ++g)
        {
            // 1 + S_g a_{g,0} >= 2^mid (1 + z_g)
            Eigen::VectorXd row = Eigen::VectorXd::Zero(n);
            row(g * K + 0) = -inst.su_gain(g);
            prog.add_row(row, 1.0 - std::pow(2.0, mid) * (1.0 + z.z(g)));
        }
        ConeSolution sol = solve_soc_feasibility(prog, &warm_rm);
        if (sol.feasible)
        {
            lo = mid;
            for (int g = 0; g < G; ++g)
                for (int k = 0; k < K; ++k)
                    best.a(g, k) = std::max(0.0, sol.x(g * K + k));
            warm_rm = sol.x;
        }
        else
            hi = mid;
    }
    return best;
}

} // namespace

SolveResult mmsr_upper(const Instance &inst, double sigma, const PowerAllocation &a_init)
{
    const double delta = inst.cfg.tolerance;

    PowerAllocation a = a_init;
    SlackVector z = upper_z_step(inst, sigma, a); // throws Surrogate when unattainable

    double obj = min_rate_bits(inst, a, z);
    SolveResult res;
    res.trace.push_back(obj);

    bool converged = false;
    int it = 0;
    for (it = 1; it <= inst.cfg.max_iters; ++it)
    {
        PowerAllocation a2 = maxmin_power_step(inst, sigma, z, a, obj);
        SlackVector z2 = upper_z_step(inst, sigma, a2);
        double obj2 = min_rate_bits(inst, a2, z2);
        if (obj2 < obj)
        {
            // Bisection slack can leave the candidate a hair short; keep the
            // incumbent and stop.
            converged = true;
            break;
        }
        a = a2;
        z = z2;
        res.trace.push_back(obj2);
        if (obj2 - obj <= delta)
        {
            obj = obj2;
            converged = true;
            break;
        }
        obj = obj2;
    }

    res.status = converged ? SolveStatus::Stationary : SolveStatus::IterationCap;
    res.alloc = a;
    res.slack = z;
    res.objective_bits = obj;
    res.iterations = it;
    finalize_result(inst, EveCase::Upper, res);
    return res;
}

} // namespace nomasec
