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

#include "nomasec/cone.hpp"

#include <cmath>

#include "nomasec/errors.hpp"

namespace nomasec
{

ConeProgram ConeProgram::make(int n)
{
    ConeProgram p;
    p.n = n;
    p.c = Eigen::VectorXd::Zero(n);
    p.A = Eigen::MatrixXd::Zero(0, n);
    p.b = Eigen::VectorXd::Zero(0);
    return p;
}

void ConeProgram::add_row(const Eigen::VectorXd &a, double rhs)
{
    if (a.size() != n)
        throw ValidationError("ConeProgram::add_row: dimension mismatch");
    A.conservativeResize(A.rows() + 1, Eigen::NoChange);
    A.row(A.rows() - 1) = a.transpose();
    b.conservativeResize(b.size() + 1);
    b(b.size() - 1) = rhs;
}

namespace
{

// Barrier machinery. psi_t(x) = -t*(c.x + sum w ln(p.x+q))
//                               - sum ln(b_i - a_i.x)
//                               - sum ln((g.x+h)^2 - ||Fx+f||^2)
struct Barrier
{
    const ConeProgram &prog;
    double t;

    bool in_domain(const Eigen::VectorXd &x) const
    {
        for (int i = 0; i < prog.b.size(); ++i)
            if (!(prog.b(i) - prog.A.row(i).dot(x) > 0.0))
                return false;
        for (const auto &s : prog.socs)
        {
            double v = s.g.dot(x) + s.h;
            if (!(v > 0.0))
                return false;
            double u2 = (s.F * x + s.f0).squaredNorm();
            if (!(v * v - u2 > 0.0))
                return false;
        }
        for (const auto &lt : prog.logs)
            if (!(lt.p.dot(x) + lt.q > 0.0))
                return false;
        return true;
    }

    double value(const Eigen::VectorXd &x) const
    {
        double val = -t * prog.c.dot(x);
        for (const auto &lt : prog.logs)
            val -= t * lt.weight * std::log(lt.p.dot(x) + lt.q);
        for (int i = 0; i < prog.b.size(); ++i)
            val -= std::log(prog.b(i) - prog.A.row(i).dot(x));
        for (const auto &s : prog.socs)
        {
            double v = s.g.dot(x) + s.h;
            double u2 = (s.F * x + s.f0).squaredNorm();
            val -= std::log(v * v - u2);
        }
        return val;
    }

    void derivatives(const Eigen::VectorXd &x, Eigen::VectorXd &grad, Eigen::MatrixXd &hess) const
    {
        const int n = prog.n;
        grad = -t * prog.c;
        hess = Eigen::MatrixXd::Zero(n, n);
        for (const auto &lt : prog.logs)
        {
            double v = lt.p.dot(x) + lt.q;
            grad -= (t * lt.weight / v) * lt.p;
            hess += (t * lt.weight / (v * v)) * (lt.p * lt.p.transpose());
        }
        for (int i = 0; i < prog.b.size(); ++i)
        {
            double d = prog.b(i) - prog.A.row(i).dot(x);
            Eigen::VectorXd a = prog.A.row(i).transpose();
            grad += a / d;
            hess += (a * a.transpose()) / (d * d);
        }
        for (const auto &s : prog.socs)
        {
            double v = s.g.dot(x) + s.h;
            Eigen::VectorXd u = s.F * x + s.f0;
            double D = v * v - u.squaredNorm();
            Eigen::VectorXd dD = 2.0 * v * s.g - 2.0 * s.F.transpose() * u;
            grad -= dD / D;
            hess += (dD * dD.transpose()) / (D * D);
            hess -= (2.0 * (s.g * s.g.transpose()) - 2.0 * s.F.transpose() * s.F) / D;
        }
    }
};

// Newton centering with backtracking; optional early-exit predicate checked
// after every accepted step (used by phase-I to bail once the slack is
// safely negative).
bool center(const Barrier &bar, Eigen::VectorXd &x,
            const std::function<bool(const Eigen::VectorXd &)> &done)
{
    const int n = (int)x.size();
    Eigen::VectorXd grad(n);
    Eigen::MatrixXd hess(n, n);
    for (int iter = 0; iter < 60; ++iter)
    {
        bar.derivatives(x, grad, hess);
        Eigen::VectorXd step;
        double ridge = 0.0;
        for (int attempt = 0; attempt < 6; ++attempt)
        {
            Eigen::LDLT<Eigen::MatrixXd> ldlt(
                hess + ridge * Eigen::MatrixXd::Identity(n, n));
            if (ldlt.info() == Eigen::Success)
            {
                step = ldlt.solve(-grad);
                if (step.allFinite() && grad.dot(step) < 0.0)
                    break;
            }
            ridge = ridge == 0.0 ? 1e-10 * std::max(1.0, hess.diagonal().maxCoeff()) : ridge * 100;
            step.setZero();
        }
        if (step.isZero())
            return false;

        double decrement2 = -grad.dot(step);
        if (decrement2 * 0.5 < 1e-10)
            return true; // centered

        double f0 = bar.value(x);
        double alpha = 1.0;
        bool moved = false;
        for (int ls = 0; ls < 80; ++ls)
        {
            Eigen::VectorXd cand = x + alpha * step;
            if (bar.in_domain(cand) && bar.value(cand) <= f0 - 0.25 * alpha * decrement2)
            {
                x = cand;
                moved = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!moved)
            return true; // stalled at numerical precision
        if (done && done(x))
            return true;
    }
    return true;
}

double barrier_parameter_count(const ConeProgram &prog)
{
    return (double)prog.b.size() + 2.0 * (double)prog.socs.size();
}

// Path-following maximization from a strictly interior point.
Eigen::VectorXd follow_path(const ConeProgram &prog, Eigen::VectorXd x,
                            const std::function<bool(const Eigen::VectorXd &)> &done)
{
    double m = std::max(1.0, barrier_parameter_count(prog));
    double t = 1.0;
    const double mu = 20.0;
    while (true)
    {
        Barrier bar{prog, t};
        center(bar, x, done);
        if (done && done(x))
            return x;
        if (m / t < 1e-9)
            return x;
        t *= mu;
    }
}

} // namespace

ConeSolution solve_soc_feasibility(const ConeProgram &prog, const Eigen::VectorXd *warm)
{
    // Augment with a shared slack: minimize s with every constraint relaxed
    // by s. The start (x0, s0) is strictly interior by construction.
    ConeProgram aug = ConeProgram::make(prog.n + 1);
    const int n = prog.n;
    aug.c = Eigen::VectorXd::Zero(n + 1);
    aug.c(n) = -1.0; // maximize -s
    if (prog.A.rows() > 0)
    {
        aug.A = Eigen::MatrixXd::Zero(prog.A.rows(), n + 1);
        aug.A.leftCols(n) = prog.A;
        aug.A.col(n).setConstant(-1.0);
        aug.b = prog.b;
    }
    for (const auto &s : prog.socs)
    {
        SocConstraint sa;
        sa.F = Eigen::MatrixXd::Zero(s.F.rows(), n + 1);
        sa.F.leftCols(n) = s.F;
        sa.f0 = s.f0;
        sa.g = Eigen::VectorXd::Zero(n + 1);
        sa.g.head(n) = s.g;
        sa.g(n) = 1.0;
        sa.h = s.h;
        aug.socs.push_back(std::move(sa));
    }

    Eigen::VectorXd x0 = warm ? *warm : Eigen::VectorXd::Zero(n);
    double viol = 0.0;
    for (int i = 0; i < prog.b.size(); ++i)
        viol = std::max(viol, prog.A.row(i).dot(x0) - prog.b(i));
    for (const auto &s : prog.socs)
        viol = std::max(viol, (s.F * x0 + s.f0).norm() - (s.g.dot(x0) + s.h));

    Eigen::VectorXd xs(n + 1);
    xs.head(n) = x0;
    xs(n) = viol + 1.0;

    auto good = [&](const Eigen::VectorXd &v) { return v(n) < -1e-7; };
    xs = follow_path(aug, xs, good);

    ConeSolution sol;
    sol.x = xs.head(n);
    sol.feasible = xs(n) <= 0.0;
    sol.objective = 0.0;
    return sol;
}

ConeSolution solve_cone(const ConeProgram &prog, const Eigen::VectorXd *warm)
{
    ConeSolution ph1 = solve_soc_feasibility(prog, warm);
    if (!ph1.feasible)
        return ph1;

    Eigen::VectorXd x = ph1.x;
    Barrier probe{prog, 1.0};
    if (!probe.in_domain(x))
    {
        // Interior w.r.t. the relaxed system but sitting on a boundary (or a
        // log-term domain edge): nudge via a second phase-I pass demanding
        // the log domains as explicit rows.
        ConeProgram strict = prog;
        for (const auto &lt : prog.logs)
            strict.add_row(-lt.p, lt.q - 1e-12);
        ConeSolution ph1b = solve_soc_feasibility(strict, &x);
        if (!ph1b.feasible || !probe.in_domain(ph1b.x))
        {
            ConeSolution bad;
            bad.feasible = false;
            return bad;
        }
        x = ph1b.x;
    }

    x = follow_path(prog, x, nullptr);

    ConeSolution sol;
    sol.feasible = true;
    sol.x = x;
    sol.objective = prog.c.dot(x);
    for (const auto &lt : prog.logs)
        sol.objective += lt.weight * std::log(lt.p.dot(x) + lt.q);
    return sol;
}

double min_feasible_scalar(const std::function<double(double)> &f, double lo, double hi,
                           double tol)
{
    if (!(tol > 0.0))
        throw ValidationError("min_feasible_scalar: tol must be positive");
    auto g = [&](double z) { return z - f(z); };
    if (g(hi) < 0.0)
        throw InfeasibleError("min_feasible_scalar: residual negative at hi",
                              InfeasibleKind::Surrogate);
    if (g(lo) >= 0.0)
        return lo;
    double a = lo, b = hi;
    while (b - a > tol)
    {
        double m = 0.5 * (a + b);
        if (g(m) >= 0.0)
            b = m;
        else
            a = m;
    }
    return b;
}

std::optional<double> feasible_scalar_bracket(const std::function<double(double)> &f, double lo,
                                              double cap)
{
    auto g = [&](double z) { return z - f(z); };
    if (g(lo) >= 0.0)
        return lo;
    if (g(cap) >= 0.0)
        return cap;
    double a = lo, b = cap;
    for (int iter = 0; iter < 200; ++iter)
    {
        double m1 = a + (b - a) / 3.0;
        double m2 = b - (b - a) / 3.0;
        double g1 = g(m1), g2 = g(m2);
        if (g1 >= 0.0)
            return m1;
        if (g2 >= 0.0)
            return m2;
        if (g1 < g2)
            a = m1;
        else
            b = m2;
    }
    double mid = 0.5 * (a + b);
    if (g(mid) >= 0.0)
        return mid;
    return std::nullopt;
}

} // namespace nomasec
