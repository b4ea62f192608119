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

#include "nomasec/linprog.hpp"

#include <cmath>
#include <vector>

#include "nomasec/errors.hpp"

namespace nomasec
{

LinearProgram LinearProgram::make(int n, int m_hint)
{
    (void)m_hint;
    LinearProgram lp;
    lp.c = Eigen::VectorXd::Zero(n);
    lp.A = Eigen::MatrixXd::Zero(0, n);
    lp.b = Eigen::VectorXd::Zero(0);
    lp.lower = Eigen::VectorXd::Constant(n, -kInf);
    lp.upper = Eigen::VectorXd::Constant(n, kInf);
    return lp;
}

void LinearProgram::add_row(const Eigen::VectorXd &a, double rhs)
{
    if (a.size() != c.size())
        throw ValidationError("LinearProgram::add_row: dimension mismatch");
    A.conservativeResize(A.rows() + 1, Eigen::NoChange);
    A.row(A.rows() - 1) = a.transpose();
    b.conservativeResize(b.size() + 1);
    b(b.size() - 1) = rhs;
}

namespace
{

constexpr double kCostTol = 1e-9;
constexpr double kPivotTol = 1e-10;
constexpr int kBlandAfter = 400;
constexpr int kIterCap = 20000;

struct Tableau
{
    // Rows 0..m-1: constraints with the rhs in the last column.
    // Row m: reduced-cost row (we minimize its objective form).
    Eigen::MatrixXd t;
    std::vector<int> basis;
    int m = 0;
    int n = 0; // structural + slack (+ artificial) columns

    double &rhs(int i) { return t(i, n); }
    double cost(int j) const { return t(m, j); }

    void pivot(int row, int col)
    {
        double p = t(row, col);
        t.row(row) /= p;
        for (int i = 0; i <= m; ++i)
        {
            if (i == row)
                continue;
            double f = t(i, col);
            if (f != 0.0)
                t.row(i) -= f * t.row(row);
        }
        basis[row] = col;
    }

    // Returns false when optimal, throws on iteration blowup.
    bool step(int iter, int limit_col)
    {
        int enter = -1;
        if (iter < kBlandAfter)
        {
            double best = -kCostTol;
            for (int j = 0; j < limit_col; ++j)
                if (cost(j) < best)
                {
                    best = cost(j);
                    enter = j;
                }
        }
        else
        {
            for (int j = 0; j < limit_col; ++j)
                if (cost(j) < -kCostTol)
                {
                    enter = j;
                    break;
                }
        }
        if (enter < 0)
            return false;

        int leave = -1;
        double best_ratio = kInf;
        for (int i = 0; i < m; ++i)
        {
            double a = t(i, enter);
            if (a > kPivotTol)
            {
                double ratio = rhs(i) / a;
                if (ratio < best_ratio - 1e-12 ||
                    (ratio < best_ratio + 1e-12 && (leave < 0 || basis[i] < basis[leave])))
                {
                    best_ratio = ratio;
                    leave = i;
                }
            }
        }
        if (leave < 0)
            throw NumericalError("simplex: unbounded direction"); // caught by caller
        pivot(leave, enter);
        return true;
    }
};

struct StdForm
{
    // maximize cs.y, As y <= bs, y >= 0, after bound shifting / splitting
    Eigen::MatrixXd A;
    Eigen::VectorXd b;
    Eigen::VectorXd c;
    double c0 = 0.0; // objective constant from shifts
    // mapping back: x_j = base_j + sum of signed y columns
    struct VarMap
    {
        int col_pos = -1;
        int col_neg = -1;
        double base = 0.0;
        double sign = 1.0;
    };
    std::vector<VarMap> map;
};

StdForm to_standard(const LinearProgram &lp)
{
    const int n = lp.vars();
    const int m0 = lp.rows();
    double sgn = lp.maximize ? 1.0 : -1.0;

    StdForm sf;
    sf.map.resize(n);
    std::vector<Eigen::VectorXd> cols;
    std::vector<double> costs;

    Eigen::VectorXd shift = Eigen::VectorXd::Zero(n);
    std::vector<std::pair<int, double>> ubound_rows; // (column, bound) rows added later

    for (int j = 0; j < n; ++j)
    {
        double lo = lp.lower(j), hi = lp.upper(j);
        if (!std::isfinite(lo) && !std::isfinite(hi))
        {
            sf.map[j] = {(int)cols.size(), (int)cols.size() + 1, 0.0, 1.0};
            cols.push_back(lp.A.col(j));
            costs.push_back(sgn * lp.c(j));
            cols.push_back(-lp.A.col(j));
            costs.push_back(-sgn * lp.c(j));
        }
        else if (std::isfinite(lo))
        {
            sf.map[j] = {(int)cols.size(), -1, lo, 1.0};
            shift(j) = lo;
            cols.push_back(lp.A.col(j));
            costs.push_back(sgn * lp.c(j));
            sf.c0 += sgn * lp.c(j) * lo;
            if (std::isfinite(hi))
                ubound_rows.push_back({(int)cols.size() - 1, hi - lo});
        }
        else
        {
            // upper bound only: x = hi - y
            sf.map[j] = {(int)cols.size(), -1, hi, -1.0};
            shift(j) = hi;
            cols.push_back(-lp.A.col(j));
            costs.push_back(-sgn * lp.c(j));
            sf.c0 += sgn * lp.c(j) * hi;
        }
    }

    const int nv = (int)cols.size();
    const int m = m0 + (int)ubound_rows.size();
    sf.A = Eigen::MatrixXd::Zero(m, nv);
    sf.b = Eigen::VectorXd::Zero(m);
    sf.c = Eigen::VectorXd::Zero(nv);
    for (int j = 0; j < nv; ++j)
    {
        sf.A.col(j).head(m0) = cols[j];
        sf.c(j) = costs[j];
    }
    sf.b.head(m0) = lp.b - lp.A * shift;
    for (size_t r = 0; r < ubound_rows.size(); ++r)
    {
        sf.A(m0 + (int)r, ubound_rows[r].first) = 1.0;
        sf.b(m0 + (int)r) = ubound_rows[r].second;
    }
    return sf;
}

} // namespace

LpSolution solve_lp(const LinearProgram &lp)
{
    if (lp.A.cols() != lp.c.size() || lp.A.rows() != lp.b.size())
        throw ValidationError("solve_lp: inconsistent dimensions");
    if (!lp.A.allFinite() || !lp.b.allFinite() || !lp.c.allFinite())
        throw ValidationError("solve_lp: non-finite coefficients");

    StdForm sf = to_standard(lp);
    const int m = (int)sf.A.rows();
    const int nv = (int)sf.A.cols();

    // Row equilibration keeps pivot tolerances meaningful across the large
    // dynamic range of the SINR coefficients.
    Eigen::VectorXd rs(m);
    for (int i = 0; i < m; ++i)
    {
        double s = std::max(sf.A.row(i).cwiseAbs().maxCoeff(), std::abs(sf.b(i)));
        rs(i) = s > 0.0 ? 1.0 / s : 1.0;
    }
    Eigen::MatrixXd As = rs.asDiagonal() * sf.A;
    Eigen::VectorXd bs = rs.asDiagonal() * sf.b;

    // Flip rows with negative rhs; their slack gets coefficient -1 and an
    // artificial variable provides the starting basis.
    std::vector<int> art_rows;
    for (int i = 0; i < m; ++i)
    {
        if (bs(i) < 0.0)
        {
            As.row(i) = -As.row(i);
            bs(i) = -bs(i);
            art_rows.push_back(i);
        }
    }
    std::vector<double> slack_sign(m, 1.0);
    for (int i : art_rows)
        slack_sign[i] = -1.0;

    const int n_all = nv + m + (int)art_rows.size();
    Tableau tb;
    tb.m = m;
    tb.n = n_all;
    tb.t = Eigen::MatrixXd::Zero(m + 1, n_all + 1);
    tb.basis.assign(m, -1);
    tb.t.block(0, 0, m, nv) = As;
    for (int i = 0; i < m; ++i)
        tb.t(i, nv + i) = slack_sign[i];
    {
        int a = 0;
        for (int i : art_rows)
            tb.t(i, nv + m + a++) = 1.0;
    }
    for (int i = 0; i < m; ++i)
        tb.rhs(i) = bs(i);

    // Initial basis: slacks where possible, artificials elsewhere.
    {
        int a = 0;
        for (int i = 0; i < m; ++i)
            tb.basis[i] = slack_sign[i] > 0.0 ? nv + i : nv + m + a++;
    }

    LpSolution sol;

    // Phase 1: minimize the artificial sum.
    if (!art_rows.empty())
    {
        // cost row: +1 per artificial column, then eliminate the basic ones.
        tb.t.row(m).setZero();
        for (int a = 0; a < (int)art_rows.size(); ++a)
            tb.t(m, nv + m + a) = 1.0;
        for (int i = 0; i < m; ++i)
        {
            int bj = tb.basis[i];
            if (tb.t(m, bj) != 0.0)
                tb.t.row(m) -= tb.t(m, bj) * tb.t.row(i);
        }
        try
        {
            int iter = 0;
            while (tb.step(iter, n_all))
            {
                if (++iter > kIterCap)
                    throw NumericalError("simplex: phase-1 iteration cap");
            }
        }
        catch (const NumericalError &)
        {
            throw; // phase-1 cannot be unbounded; real breakdown
        }
        double art_sum = -tb.t(m, n_all);
        if (art_sum > 1e-7)
        {
            sol.status = LpStatus::Infeasible;
            return sol;
        }
        // Pivot leftover artificials out of the basis where possible.
        for (int i = 0; i < m; ++i)
        {
            if (tb.basis[i] >= nv + m)
            {
                int piv = -1;
                for (int j = 0; j < nv + m; ++j)
                    if (std::abs(tb.t(i, j)) > 1e-8)
                    {
                        piv = j;
                        break;
                    }
                if (piv >= 0)
                    tb.pivot(i, piv);
                // else: redundant row, harmless to leave (rhs ~ 0).
            }
        }
    }

    // Phase 2 objective: maximize sf.c  ==  minimize -sf.c.
    tb.t.row(m).setZero();
    for (int j = 0; j < nv; ++j)
        tb.t(m, j) = -sf.c(j);
    for (int i = 0; i < m; ++i)
    {
        int bj = tb.basis[i];
        if (bj < n_all && tb.t(m, bj) != 0.0)
            tb.t.row(m) -= tb.t(m, bj) * tb.t.row(i);
    }

    const int limit = nv + m; // artificials stay out in phase 2
    try
    {
        int iter = 0;
        while (tb.step(iter, limit))
        {
            if (++iter > kIterCap)
                throw NumericalError("simplex: phase-2 iteration cap");
        }
    }
    catch (const NumericalError &e)
    {
        if (std::string(e.what()).find("unbounded") != std::string::npos)
        {
            sol.status = LpStatus::Unbounded;
            return sol;
        }
        throw;
    }

    // Extract the structural solution.
    Eigen::VectorXd y = Eigen::VectorXd::Zero(n_all);
    for (int i = 0; i < m; ++i)
        if (tb.basis[i] < n_all)
            y(tb.basis[i]) = tb.rhs(i);

    const int n = lp.vars();
    sol.x = Eigen::VectorXd::Zero(n);
    for (int j = 0; j < n; ++j)
    {
        const auto &vm = sf.map[j];
        double v = vm.base + vm.sign * y(vm.col_pos);
        if (vm.col_neg >= 0)
            v -= y(vm.col_neg);
        sol.x(j) = v;
    }
    sol.value = lp.c.dot(sol.x);
    sol.status = LpStatus::Optimal;

    // Belt-and-braces: the returned point must satisfy the raw system.
    for (int i = 0; i < lp.rows(); ++i)
    {
        double lhs = lp.A.row(i).dot(sol.x);
        double scale = std::max({1.0, std::abs(lp.b(i)), lp.A.row(i).cwiseAbs().maxCoeff()});
        if (lhs - lp.b(i) > 1e-6 * scale)
            throw NumericalError("solve_lp: solution violates row " + std::to_string(i));
    }
    for (int j = 0; j < n; ++j)
    {
        double scale = std::max(1.0, std::abs(sol.x(j)));
        if (std::isfinite(lp.lower(j)) && lp.lower(j) - sol.x(j) > 1e-7 * scale)
            throw NumericalError("solve_lp: lower bound violated");
        if (std::isfinite(lp.upper(j)) && sol.x(j) - lp.upper(j) > 1e-7 * scale)
            throw NumericalError("solve_lp: upper bound violated");
    }
    return sol;
}

} // namespace nomasec
