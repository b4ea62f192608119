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

#include "nomasec/channel.hpp"

namespace nomasec
{

/// Zero-forcing beams over the G secure users. Each beam has unit norm and
/// nulls all other clusters' SU channels; `leakage(gp, g)` records the
/// residual |h_{gp,0}^H w_g|^2 so the nulling quality is auditable.
struct BeamMatrix
{
    std::vector<CVector> w;  // unit-norm beam per cluster
    Eigen::MatrixXd leakage; // G x G, |h_{gp,0}^H w_g|^2

    int clusters() const { return (int)w.size(); }
};

/// Builds the zero-forcing beams from the SU channels by solving the G x G
/// Gram system directly (one refinement pass keeps the nulling residual at
/// machine level). Each beam is phase-rotated so its own SU sees a real,
/// positive effective gain.
///
/// Throws SingularChannelError when the Gram matrix's condition number
/// exceeds 1e12 -- the caller should resample the draw.
BeamMatrix zf_beams(const ChannelSet &channels);

} // namespace nomasec
