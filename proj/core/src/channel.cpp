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

#include "nomasec/channel.hpp"

#include <cmath>

#include "nomasec/errors.hpp"

namespace nomasec
{

CVector correlated_draw(const CVector &su_smallscale, double phi, Rng &rng)
{
    CVector innovation = rng.cgauss_vector((int)su_smallscale.size());
    return std::sqrt(phi) * su_smallscale + std::sqrt(1.0 - phi) * innovation;
}

CVector apply_pathloss(const CVector &smallscale, double distance_m, double pathloss_exp)
{
    return smallscale * std::pow(distance_m, -pathloss_exp / 2.0);
}

ChannelSet gen_channels(const ScenarioConfig &cfg, std::uint64_t seed)
{
    cfg.validate();
    const int G = cfg.n_clusters;
    const int K = cfg.users_per_cluster;
    const int N = cfg.n_antennas;

    Rng rng(seed);
    ChannelSet cs;
    cs.gamma_e = cfg.gamma_e();
    cs.rho = cfg.rho();
    cs.h.resize(G);
    cs.smallscale.resize(G);
    cs.distance_m.resize(G);

    for (int g = 0; g < G; ++g)
    {
        cs.h[g].resize(K);
        cs.smallscale[g].resize(K);
        cs.distance_m[g].resize(K);

        cs.smallscale[g][0] = rng.cgauss_vector(N);
        for (int k = 1; k < K; ++k)
            cs.smallscale[g][k] = correlated_draw(cs.smallscale[g][0], cfg.correlation, rng);
        for (int k = 0; k < K; ++k)
            cs.distance_m[g][k] =
                rng.uniform(cfg.distance_ranges[k].min_m, cfg.distance_ranges[k].max_m);
        for (int k = 0; k < K; ++k)
            cs.h[g][k] = apply_pathloss(cs.smallscale[g][k], cs.distance_m[g][k], cfg.pathloss_exp);
    }
    return cs;
}

} // namespace nomasec
