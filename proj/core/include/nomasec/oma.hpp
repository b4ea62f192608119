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

/// Orthogonal baseline: each cluster time-shares its zero-forcing beam
/// equally among its K users. The SU slot runs the K = 1 restriction of the
/// requested solver at full slot power; reported secrecy rates carry the
/// 1/K pre-log. QUs get dedicated orthogonal slots, so their QoS reduces to
/// an interference-free power check which is recorded in qu_qos_ok (the SU
/// slot is unaffected either way -- the slots are orthogonal).
struct OmaResult
{
    SolveResult slot;      // K = 1 solve, full-slot-power scale
    double objective_bits = 0.0; // pre-log applied
    Eigen::VectorXd per_su_rate; // pre-log applied, unclamped
    bool qu_qos_ok = true;
};

OmaResult oma_baseline(const Instance &inst, EveCase ecase, Metric metric, double sigma);

} // namespace nomasec
