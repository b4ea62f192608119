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

#include "nomasec/mssr.hpp"

#include <algorithm>
#include <cmath>
#include <list>

#include "nomasec/errors.hpp"
#include "solvers_common.hpp"

namespace nomasec
{

using namespace detail;

ProjectionResult project(const Instance &inst, double sigma, const Eigen::VectorXd &u, double tol)
{
    if ((u.array() < 1.0 - 1e-12).any())
        throw ValidationError("project: u must be >= 1 componentwise");
    FractionalSolve fs = dinkelbach_maxmin(inst, sigma, u, tol, inst.cfg.max_iters);
    ProjectionResult pr;
    pr.lambda = fs.lambda;
    pr.phi = fs.lambda * u;
    pr.alloc = fs.alloc;
    pr.slack = fs.slack;
    pr.iterations = fs.iterations;
    return pr;
}

namespace
{

struct Vertex
{
    Eigen::VectorXd u;
    ProjectionResult proj;
    double selection_value = 0.0; // sum log2 phi_g, the vertex choice metric
    double bound_value = 0.0;     // sum log2 u_g
};

// A projection point (a, z) is feasible; clusters whose ratio dips below 1
// are switched off (zero SU power, zero slack), which is itself feasible
// under the detecting-eavesdropper constraints and lifts their ratio to
// exactly 1. Returns the clamped sum value in bits.
double incumbent_from_point(const Instance &inst, PowerAllocation &a, SlackVector &z)
{
    double sum = 0.0;
    for (int g = 0; g < inst.clusters(); ++g)
    {
        double rate = secrecy_rate(g, inst.channels, inst.beams, a, z);
        if (rate < 0.0)
        {
            a.a(g, 0) = 0.0;
            z.z(g) = 0.0;
            rate = 0.0;
        }
        sum += rate;
    }
    return sum;
}

} // namespace

SolveResult mssr_lower(const Instance &inst, double sigma)
{
    const int G = inst.clusters();
    const double delta = inst.cfg.tolerance;
    const double proj_tol = delta / 10.0; // inner Dinkelbach tighter than the outer loop

    SolveResult res;

    // Incumbent seed: the max-min point (projection along the all-ones
    // direction) is feasible for the sum problem and anchors the incumbent
    // at >= G * MSR.
    {
        ProjectionResult p0 = project(inst, sigma, Eigen::VectorXd::Ones(G), proj_tol);
        PowerAllocation a = p0.alloc;
        SlackVector z = p0.slack;
        double v = incumbent_from_point(inst, a, z);
        res.alloc = a;
        res.slack = z;
        res.objective_bits = v;
    }

    auto make_vertex = [&](Eigen::VectorXd u) {
        Vertex v;
        v.proj = project(inst, sigma, u, proj_tol);
        v.u = std::move(u);
        v.selection_value = 0.0;
        v.bound_value = 0.0;
        for (int g = 0; g < G; ++g)
        {
            v.selection_value += std::log2(std::max(v.proj.phi(g), 1e-300));
            v.bound_value += std::log2(v.u(g));
        }
        PowerAllocation a = v.proj.alloc;
        SlackVector z = v.proj.slack;
        double val = incumbent_from_point(inst, a, z);
        if (val > res.objective_bits)
        {
            res.objective_bits = val;
            res.alloc = a;
            res.slack = z;
        }
        return v;
    };

    // Initial vertex: per-cluster numerator bound at full power, unit slack.
    Eigen::VectorXd u1(G);
    for (int g = 0; g < G; ++g)
        u1(g) = 1.0 + inst.su_gain(g);

    std::vector<Vertex> verts;
    verts.push_back(make_vertex(u1));

    bool converged = false;
    int it = 0;
    for (it = 1; it <= inst.cfg.max_iters; ++it)
    {
        // Select by the best projected objective.
        size_t sel = 0;
        for (size_t i = 1; i < verts.size(); ++i)
            if (verts[i].selection_value > verts[sel].selection_value)
                sel = i;
        Vertex cur = verts[sel];

        double bound = 0.0;
        for (const auto &v : verts)
            bound = std::max(bound, v.bound_value);
        res.bound_trace.push_back(bound);
        res.trace.push_back(res.objective_bits);

        double gap = (cur.u - cur.proj.phi).norm() / cur.u.norm();
        if (gap <= delta)
        {
            converged = true;
            break;
        }

        // Replace the selected vertex with its children; children whose box
        // falls below the u >= 1 floor cannot contain feasible points.
        verts.erase(verts.begin() + (long)sel);
        for (int g = 0; g < G; ++g)
        {
            Eigen::VectorXd child = cur.u;
            child(g) = cur.proj.phi(g);
            if (child(g) < 1.0)
                continue;
            verts.push_back(make_vertex(std::move(child)));
        }
        if (verts.empty())
            break; // ratio region exhausted; incumbent is the answer

        // Prune improper vertices (dominated componentwise).
        std::vector<Vertex> proper;
        for (size_t i = 0; i < verts.size(); ++i)
        {
            bool dominated = false;
            for (size_t j = 0; j < verts.size() && !dominated; ++j)
            {
                if (i == j)
                    continue;
                bool ge = (verts[j].u.array() >= verts[i].u.array() - 1e-12).all();
                bool strict = (verts[j].u.array() > verts[i].u.array() + 1e-12).any();
                if (ge && (strict || j < i))
                    dominated = true;
            }
            if (!dominated)
                proper.push_back(verts[i]);
        }
        verts = std::move(proper);
    }

    res.status = converged ? SolveStatus::Optimal : SolveStatus::IterationCap;
    res.iterations = it;
    finalize_result(inst, EveCase::Lower, res);
    return res;
}

SolveResult mssr_upper(const Instance &inst, double sigma, const PowerAllocation &a_init)
{
    const int G = inst.clusters();
    const int K = inst.users();
    const int n = G * K;
    const double delta = inst.cfg.tolerance;

    PowerAllocation a = a_init;
    SlackVector z = upper_z_step(inst, sigma, a);
    double obj = sum_rate_bits(inst, a, z);

    SolveResult res;
    res.trace.push_back(obj);

    bool converged = false;
    int it = 0;
    for (it = 1; it <= inst.cfg.max_iters; ++it)
    {
        // Power step: maximize sum log2(1 + S_g a_{g,0}) over the
        // cone-feasible set at fixed z.
        ConeProgram prog = ConeProgram::make(n);
        add_alpha_polytope(prog, inst);
        add_upper_socs(prog, inst, sigma, z);
        for (int g = 0; g < G; ++g)
        {
            LogTerm lt;
            lt.weight = 1.0 / std::log(2.0);
            lt.p = Eigen::VectorXd::Zero(n);
            lt.p(g * K + 0) = inst.su_gain(g);
            lt.q = 1.0;
            prog.logs.push_back(std::move(lt));
        }
        Eigen::VectorXd warm(n);
        for (int g = 0; g < G; ++g)
            for (int k = 0; k < K; ++k)
                warm(g * K + k) = a.a(g, k);

        ConeSolution sol = solve_cone(prog, &warm);
        PowerAllocation a2 = a;
        if (sol.feasible)
            for (int g = 0; g < G; ++g)
                for (int k = 0; k < K; ++k)
                    a2.a(g, k) = std::max(0.0, sol.x(g * K + k));

        SlackVector z2 = upper_z_step(inst, sigma, a2);
        double obj2 = sum_rate_bits(inst, a2, z2);
        if (obj2 < obj)
        {
            converged = true;
            break; // keep incumbent; interior-point slack cannot improve it
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
