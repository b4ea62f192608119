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

#include "nomasec/beamforming.hpp"
#include "nomasec/channel.hpp"
#include "nomasec/scheduling.hpp"

namespace nomasec
{

/// One solvable realization: channels conditioned on the scheduling rule,
/// beams, decoding order already applied (user k of ChannelSet is the k-th
/// user in SIC order), plus the gain tables every solver needs.
struct Instance
{
    ScenarioConfig cfg;
    ChannelSet channels; // users stored in decoding order
    BeamMatrix beams;
    ClusterAssignment assign;

    bool scheduling_ok = true;
    int retries = 0; // QU redraws consumed while conditioning the draw

    // eff[g](k, i) = |h_{g,k}^H w_i|^2 * rho
    std::vector<Eigen::MatrixXd> eff;
    // su_gain[g] = eff[g](0, g): coefficient of alpha_{g,0} in the SU SINR
    Eigen::VectorXd su_gain;
    // lower-triangular factor of the beam overlap matrix M_{ij} = |w_i^H w_j|^2,
    // used to express Frobenius norms of beam-projector combinations
    Eigen::MatrixXd beam_overlap_chol;
    double gamma_rho = 0.0; // gamma_e * rho

    int clusters() const { return cfg.n_clusters; }
    int users() const { return cfg.users_per_cluster; }
};

/// Draws channels until the scheduling conditions hold: every QU passes the
/// correlation test against its SU (on the small-scale vectors) and the SU
/// keeps the strictly largest effective gain in its cluster. Each QU gets
/// up to cfg.sched_retry_cap redraws; running out flags the realization as
/// scheduling-infeasible instead of failing. Deterministic in (cfg, seed).
Instance assemble_realization(const ScenarioConfig &cfg, std::uint64_t seed);

/// Rebuilds the derived tables (eff, su_gain, overlap factor) after the
/// channels/beams of an Instance were modified, e.g. by tests.
void refresh_instance_tables(Instance &inst);

/// SU-only view of a realization: same SU channels and beams, K = 1, no QoS
/// constraints. This is the per-slot problem of the orthogonal baseline.
Instance su_only_view(const Instance &inst);

} // namespace nomasec
