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

#include "solvers_common.hpp"

#include <cmath>

#include "nomasec/errors.hpp"
#include "nomasec/sop.hpp"

namespace nomasec
{

const char *to_string(SolveStatus s)
{
    switch (s)
    {
    case SolveStatus::Optimal:
        return "optimal";
    case SolveStatus::Stationary:
        return "stationary";
    case SolveStatus::Infeasible:
        return "infeasible";
    case SolveStatus::IterationCap:
        return "iteration_cap";
    }
    return "?";
}

const char *to_string(EveCase c)
{
    return c == EveCase::Lower ? "lower" : "upper";
}

const char *to_string(Metric m)
{
    return m == Metric::MaxMin ? "mmsr" : "mssr";
}

void finalize_result(const Instance &inst, EveCase ecase, SolveResult &res)
{
    const int G = inst.clusters();
    res.per_su_rate = Eigen::VectorXd(G);
    res.per_su_actual_sop = Eigen::VectorXd(G);
    for (int g = 0; g < G; ++g)
    {
        res.per_su_rate(g) = secrecy_rate(g, inst.channels, inst.beams, res.alloc, res.slack);
        HermitianForm q =
            ecase == EveCase::Lower
                ? eve_form_lower(g, inst.beams, inst.channels.rho, inst.channels.gamma_e,
                                 res.alloc)
                : eve_form_upper(g, inst.beams, inst.channels.rho, inst.channels.gamma_e,
                                 res.alloc, res.slack.z(g));
        double sop;
        try
        {
            sop = exact_sop(q, res.slack.z(g));
        }
        catch (const DegenerateSpectrumError &)
        {
            // Structured allocations can collide eigenvalues; a deterministic
            // graded perturbation separates them.
            const int N = q.dim();
            CMatrix qm = q.matrix();
            double s = qm.norm();
            for (int i = 0; i < N; ++i)
                qm(i, i) += s * 1e-9 * (double)(i - N / 2) / (double)N;
            sop = exact_sop(HermitianForm(qm), res.slack.z(g));
        }
        res.per_su_actual_sop(g) = sop;
    }
}

namespace detail
{

void add_qos_rows(LinearProgram &lp, const Instance &inst, const LpLayout &L)
{
    const int G = L.G, K = L.K;
    for (int g = 0; g < G; ++g)
        for (int k = 1; k < K; ++k)
        {
            double r = inst.cfg.qos_linear[k - 1];
            Eigen::VectorXd row = Eigen::VectorXd::Zero(lp.vars());
            // - S_{g,k} + r * (I1 + I2) <= -r
            row(L.ai(g, k)) -= inst.eff[g](k, g);
            for (int j = 0; j < k; ++j)
                row(L.ai(g, j)) += r * inst.eff[g](k, g);
            for (int i = 0; i < G; ++i)
            {
                if (i == g)
                    continue;
                for (int j = 0; j < K; ++j)
                    row(L.ai(i, j)) += r * inst.eff[g](k, i);
            }
            lp.add_row(row, -r);
        }
}

void add_power_row(LinearProgram &lp, const Instance &inst, const LpLayout &L)
{
    (void)inst;
    Eigen::VectorXd row = Eigen::VectorXd::Zero(lp.vars());
    for (int g = 0; g < L.G; ++g)
        for (int k = 0; k < L.K; ++k)
            row(L.ai(g, k)) = 1.0;
    lp.add_row(row, 1.0);
}

void add_sop_lower_rows(LinearProgram &lp, const Instance &inst, const LpLayout &L, double sigma)
{
    double c = inst.gamma_rho * (1.0 + std::sqrt(2.0 * sigma) + sigma);
    for (int g = 0; g < L.G; ++g)
    {
        Eigen::VectorXd row = Eigen::VectorXd::Zero(lp.vars());
        row(L.ai(g, 0)) = c;
        row(L.zi(g)) = -1.0;
        lp.add_row(row, 0.0);
    }
}

namespace
{

LinearProgram base_lp(const Instance &inst, const LpLayout &L, double sigma)
{
    LinearProgram lp = LinearProgram::make(L.n());
    for (int g = 0; g < L.G; ++g)
        for (int k = 0; k < L.K; ++k)
        {
            lp.lower(L.ai(g, k)) = 0.0;
            lp.upper(L.ai(g, k)) = 1.0;
        }
    for (int g = 0; g < L.G; ++g)
        lp.lower(L.zi(g)) = 0.0;
    // tau stays free
    add_qos_rows(lp, inst, L);
    add_power_row(lp, inst, L);
    add_sop_lower_rows(lp, inst, L, sigma);
    lp.c = Eigen::VectorXd::Zero(L.n());
    lp.c(L.ti()) = 1.0;
    lp.maximize = true;
    return lp;
}

} // namespace

FractionalSolve dinkelbach_maxmin(const Instance &inst, double sigma,
                                  const Eigen::VectorXd &weights, double tol, int cap)
{
    const LpLayout L{inst.clusters(), inst.users()};
    const int G = L.G;
    LinearProgram lp = base_lp(inst, L, sigma);
    const int base_rows = lp.rows();

    FractionalSolve out;
    double lambda = 0.0;
    for (int n = 1; n <= cap; ++n)
    {
        // Refresh the fractional rows:
        //   1 + S_g a_{g,0} - lambda u_g (1 + z_g) >= tau
        lp.A.conservativeResize(base_rows + G, Eigen::NoChange);
        lp.b.conservativeResize(base_rows + G);
        for (int g = 0; g < G; ++g)
        {
            Eigen::VectorXd row = Eigen::VectorXd::Zero(L.n());
            row(L.ai(g, 0)) = -inst.su_gain(g);
            row(L.zi(g)) = lambda * weights(g);
            row(L.ti()) = 1.0;
            lp.A.row(base_rows + g) = row.transpose();
            lp.b(base_rows + g) = 1.0 - lambda * weights(g);
        }

        LpSolution sol = solve_lp(lp);
        if (sol.status == LpStatus::Infeasible)
            throw InfeasibleError("fractional program: QoS/power polytope is empty",
                                  InfeasibleKind::QosEmpty);
        if (sol.status != LpStatus::Optimal)
            throw NumericalError("fractional program: inner LP came back unbounded");

        PowerAllocation a(G, L.K);
        for (int g = 0; g < G; ++g)
            for (int k = 0; k < L.K; ++k)
                a.a(g, k) = std::max(0.0, sol.x(L.ai(g, k)));
        SlackVector z(G);
        for (int g = 0; g < G; ++g)
            z.z(g) = std::max(0.0, sol.x(L.zi(g)));

        double ratio = kInf;
        for (int g = 0; g < G; ++g)
            ratio = std::min(ratio,
                             (1.0 + inst.su_gain(g) * a.a(g, 0)) / (weights(g) * (1.0 + z.z(g))));

        out.alloc = a;
        out.slack = z;
        out.lambda = ratio;
        out.iterations = n;
        out.lambda_trace.push_back(ratio);

        if (sol.value <= tol) // the algorithm's comparison value
            return out;
        lambda = ratio;
    }
    return out; // iteration cap; caller records the status
}

double upper_soc_threshold(const Instance &inst, double sigma, const PowerAllocation &alloc,
                           int g, double z)
{
    HermitianForm q =
        eve_form_upper(g, inst.beams, inst.channels.rho, inst.channels.gamma_e, alloc, z);
    return q.trace() + (std::sqrt(2.0 * sigma) + sigma) * q.frobenius();
}

SlackVector upper_z_step(const Instance &inst, double sigma, const PowerAllocation &alloc)
{
    const int G = inst.clusters();
    SlackVector z(G);
    const double cap = 1e12;
    for (int g = 0; g < G; ++g)
    {
        auto f = [&](double zz) { return upper_soc_threshold(inst, sigma, alloc, g, zz); };
        auto hi = feasible_scalar_bracket(f, 0.0, cap);
        if (!hi)
            throw InfeasibleError("surrogate outage bound unattainable for cluster " +
                                      std::to_string(g),
                                  InfeasibleKind::Surrogate);
        z.z(g) = min_feasible_scalar(f, 0.0, *hi, 1e-11);
    }
    return z;
}

void add_upper_socs(ConeProgram &prog, const Instance &inst, double sigma,
                    const SlackVector &slack)
{
    const int G = inst.clusters();
    const int K = inst.users();
    const double coeff = std::sqrt(2.0 * sigma) + sigma;
    const Eigen::MatrixXd Lt = inst.beam_overlap_chol.transpose();

    for (int g = 0; g < G; ++g)
    {
        // beta(alpha): per-beam weight of the eavesdropper form
        Eigen::MatrixXd B = Eigen::MatrixXd::Zero(G, G * K);
        B(g, g * K + 0) = inst.gamma_rho;
        for (int k = 1; k < K; ++k)
            B(g, g * K + k) = -inst.gamma_rho * slack.z(g);
        for (int i = 0; i < G; ++i)
        {
            if (i == g)
                continue;
            for (int k = 0; k < K; ++k)
                B(i, i * K + k) = -inst.gamma_rho * slack.z(g);
        }

        SocConstraint soc;
        soc.F = coeff * (Lt * B);
        soc.f0 = Eigen::VectorXd::Zero(G);
        soc.g = -(B.colwise().sum()).transpose(); // z - Tr = z - 1^T B a
        soc.h = slack.z(g);
        prog.socs.push_back(std::move(soc));
    }
}

void add_alpha_polytope(ConeProgram &prog, const Instance &inst)
{
    const int G = inst.clusters();
    const int K = inst.users();
    const int n = G * K;

    // QoS rows
    for (int g = 0; g < G; ++g)
        for (int k = 1; k < K; ++k)
        {
            double r = inst.cfg.qos_linear[k - 1];
            Eigen::VectorXd row = Eigen::VectorXd::Zero(n);
            row(g * K + k) -= inst.eff[g](k, g);
            for (int j = 0; j < k; ++j)
                row(g * K + j) += r * inst.eff[g](k, g);
            for (int i = 0; i < G; ++i)
            {
                if (i == g)
                    continue;
                for (int j = 0; j < K; ++j)
                    row(i * K + j) += r * inst.eff[g](k, i);
            }
            prog.add_row(row, -r);
        }
    // power
    prog.add_row(Eigen::VectorXd::Ones(n), 1.0);
    // nonnegativity
    for (int j = 0; j < n; ++j)
    {
        Eigen::VectorXd row = Eigen::VectorXd::Zero(n);
        row(j) = -1.0;
        prog.add_row(row, 0.0);
    }
}

double min_rate_bits(const Instance &inst, const PowerAllocation &a, const SlackVector &z)
{
    double m = kInf;
    for (int g = 0; g < inst.clusters(); ++g)
        m = std::min(m, secrecy_rate(g, inst.channels, inst.beams, a, z));
    return m;
}

double sum_rate_bits(const Instance &inst, const PowerAllocation &a, const SlackVector &z)
{
    double s = 0.0;
    for (int g = 0; g < inst.clusters(); ++g)
        s += secrecy_rate(g, inst.channels, inst.beams, a, z);
    return s;
}

} // namespace detail

} // namespace nomasec
