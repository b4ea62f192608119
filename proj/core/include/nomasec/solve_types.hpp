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

#include <vector>

#include "nomasec/instance.hpp"
#include "nomasec/rates.hpp"

namespace nomasec
{

/// Eavesdropper capability: Lower = perfect multiuser detection
/// (interference-free wiretap SNR, pessimistic for secrecy), Upper = no
/// multiuser detection (full-interference wiretap SINR, optimistic).
enum class EveCase
{
    Lower,
    Upper
};

enum class Metric
{
    MaxMin, // MMSR
    MaxSum  // MSSR
};

enum class SolveStatus
{
    Optimal,      // globally optimal path (Dinkelbach / polyblock, lower case)
    Stationary,   // AO fixed point (upper case)
    Infeasible,
    IterationCap
};

struct SolveResult
{
    SolveStatus status = SolveStatus::Infeasible;
    double objective_bits = 0.0; // MSR or SSR depending on the solver
    PowerAllocation alloc;
    SlackVector slack;
    Eigen::VectorXd per_su_rate;       // unclamped, bits/s/Hz
    Eigen::VectorXd per_su_actual_sop; // exact SOP at the returned point
    std::vector<double> trace;         // solver objective per outer iteration
    std::vector<double> bound_trace;   // polyblock upper bound per iteration (else empty)
    int iterations = 0;
};

const char *to_string(SolveStatus s);
const char *to_string(EveCase c);
const char *to_string(Metric m);

/// Fills per_su_rate / per_su_actual_sop of a result from its (alloc, slack)
/// via the rates and sop modules, so every reported number is re-derived
/// from the same formulas the tests check.
void finalize_result(const Instance &inst, EveCase ecase, SolveResult &res);

} // namespace nomasec
