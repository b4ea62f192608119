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

#include "nomasec/beamforming.hpp"
#include "nomasec/channel.hpp"

namespace nomasec
{

/// Per-cluster SIC decoding order. Position 0 is always the SU; QUs follow
/// in strictly decreasing effective-gain order. `su_not_strongest` flags
/// draws where some QU beats the SU's effective gain (the realization is
/// then resampled upstream, the flag makes the frequency observable).
struct ClusterAssignment
{
    std::vector<std::vector<int>> order;      // [g] -> permutation of user slots
    std::vector<std::vector<double>> gains;   // [g] -> |h^H w_g|^2 in decoding order
    std::vector<bool> su_not_strongest;       // [g]
};

/// Scheduling admission test: Re(h_qu^H h_su) / (h_su^H h_su) > threshold.
/// The statistic concentrates on the positive real axis under the
/// correlated generative model, so the real part is the meaningful
/// projection. Throws ZeroVectorError on a zero SU channel.
bool check_correlation(const CVector &h_qu, const CVector &h_su, double threshold);

struct ClusterOrder
{
    std::vector<int> order;
    std::vector<double> gains;
    bool su_not_strongest = false;
};

/// Sorts the QUs of cluster g by descending effective gain |h^H w_g|^2,
/// keeping the SU at position 0. Ties (measure zero under continuous
/// fading) break toward the lower original index, so the result is
/// deterministic.
ClusterOrder order_cluster(const ChannelSet &channels, const BeamMatrix &beams, int g);

} // namespace nomasec
