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

#include "nomasec/scheduling.hpp"

#include <algorithm>
#include <numeric>

#include "nomasec/errors.hpp"

namespace nomasec
{

bool check_correlation(const CVector &h_qu, const CVector &h_su, double threshold)
{
    if (h_qu.size() != h_su.size())
        throw ValidationError("check_correlation: vector length mismatch");
    double denom = h_su.squaredNorm();
    if (!(denom > 0.0))
        throw ZeroVectorError("check_correlation: zero SU channel");
    std::complex<double> inner = h_su.adjoint() * h_qu; // h_qu^H h_su conjugated; Re is shared
    return inner.real() / denom > threshold;
}

ClusterOrder order_cluster(const ChannelSet &channels, const BeamMatrix &beams, int g)
{
    const int K = channels.users();
    ClusterOrder out;
    std::vector<double> gain(K);
    for (int k = 0; k < K; ++k)
        gain[k] = std::norm(std::complex<double>(channels.h[g][k].adjoint() * beams.w[g]));

    std::vector<int> qus(std::max(0, K - 1));
    std::iota(qus.begin(), qus.end(), 1);
    std::stable_sort(qus.begin(), qus.end(),
                     [&](int a, int b) { return gain[a] > gain[b]; });

    out.order.push_back(0);
    out.gains.push_back(gain[0]);
    for (int k : qus)
    {
        out.order.push_back(k);
        out.gains.push_back(gain[k]);
        if (gain[k] >= gain[0])
            out.su_not_strongest = true;
    }
    return out;
}

} // namespace nomasec
