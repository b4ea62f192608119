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

#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace nomasec
{

/// ||F x + f0||_2 <= g.x + h
struct SocConstraint
{
    Eigen::MatrixXd F;
    Eigen::VectorXd f0;
    Eigen::VectorXd g;
    double h = 0.0;
};

/// weight * ln(p.x + q), a concave objective term.
struct LogTerm
{
    double weight = 1.0;
    Eigen::VectorXd p;
    double q = 0.0;
};

/// maximize c.x + sum_j w_j ln(p_j.x + q_j)
///   s.t.   A x <= b,  ||F_m x + f_m|| <= g_m.x + h_m
/// The feasible region must be bounded (ours always are: power simplex plus
/// nonnegativity).
struct ConeProgram
{
    int n = 0;
    Eigen::VectorXd c;
    std::vector<LogTerm> logs;
    Eigen::MatrixXd A;
    Eigen::VectorXd b;
    std::vector<SocConstraint> socs;

    static ConeProgram make(int n);
    void add_row(const Eigen::VectorXd &a, double rhs);
};

struct ConeSolution
{
    bool feasible = false;
    Eigen::VectorXd x;
    double objective = 0.0;
};

/// Phase-I log-barrier: minimizes the common slack s over the relaxed
/// system. Returns a point satisfying every constraint (strictly when the
/// region has interior) or reports infeasibility. The objective of `prog`
/// is ignored. `warm` optionally centers the relaxation around a point.
ConeSolution solve_soc_feasibility(const ConeProgram &prog,
                                   const Eigen::VectorXd *warm = nullptr);

/// Full solve: phase-I for a strictly interior start, then path-following
/// barrier maximization of the concave objective.
ConeSolution solve_cone(const ConeProgram &prog, const Eigen::VectorXd *warm = nullptr);

/// Smallest z in [lo, hi] with z - f(z) >= 0, for convex f (so z - f(z) is
/// concave and the feasible set is an interval reaching hi). Bisection to
/// within tol. Throws InfeasibleError when hi - f(hi) < 0.
double min_feasible_scalar(const std::function<double(double)> &f, double lo, double hi,
                           double tol);

/// Searches [lo, cap] for any point where z - f(z) >= 0 by ternary search
/// on the concave residual; nullopt when the maximum stays negative.
std::optional<double> feasible_scalar_bracket(const std::function<double(double)> &f, double lo,
                                              double cap);

} // namespace nomasec
