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

#include <limits>

#include <Eigen/Dense>

namespace nomasec
{

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Dense inequality-form linear program:
///   optimize c.x  s.t.  A x <= b,  lower <= x <= upper.
/// Bounds may be +-infinity. Every solver in this project fits in a few
/// dozen variables, so everything is dense and deterministic.
struct LinearProgram
{
    Eigen::VectorXd c;
    bool maximize = true;
    Eigen::MatrixXd A;
    Eigen::VectorXd b;
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;

    int vars() const { return (int)c.size(); }
    int rows() const { return (int)A.rows(); }

    static LinearProgram make(int n, int m_hint = 0);
    /// Appends one row a.x <= rhs.
    void add_row(const Eigen::VectorXd &a, double rhs);
};

enum class LpStatus
{
    Optimal,
    Infeasible,
    Unbounded
};

struct LpSolution
{
    LpStatus status = LpStatus::Infeasible;
    Eigen::VectorXd x;
    double value = 0.0;
};

/// Two-phase dense simplex. Dantzig pricing with a deterministic switch to
/// Bland's rule, so the method terminates on degenerate bases and identical
/// inputs always give identical outputs. Optimal points are re-verified
/// against the raw constraints before being returned.
LpSolution solve_lp(const LinearProgram &lp);

} // namespace nomasec
