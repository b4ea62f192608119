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

#include <doctest.h>

#include <algorithm>

#include "nomasec/errors.hpp"
#include "nomasec/instance.hpp"
#include "test_util.hpp"

using namespace nomasec;

TEST_CASE("correlation check accepts identical vectors at high thresholds")
{
    Rng rng(4);
    CVector h = rng.cgauss_vector(6);
    CHECK(check_correlation(h, h, 0.9));
}

TEST_CASE("correlation check rejects orthogonal vectors")
{
    CVector a = CVector::Zero(4), b = CVector::Zero(4);
    a(0) = 1.0;
    b(1) = 1.0;
    CHECK_FALSE(check_correlation(a, b, 0.5));
}

TEST_CASE("zero SU channel raises ZeroVectorError")
{
    CVector a = CVector::Ones(4), z = CVector::Zero(4);
    CHECK_THROWS_AS(check_correlation(a, z, 0.5), ZeroVectorError);
}

TEST_CASE("acceptance rate of the correlation test matches direct Monte Carlo")
{
    // The generative model feeds the admission test; its acceptance rate
    // must match a Monte Carlo evaluation of Pr{ratio > threshold} computed
    // directly from the same formula.
    const double phi = 0.9;
    const int n = 6;
    const int n_draws = 10000;
    Rng rng_a(100), rng_b(200);

    int accept_impl = 0;
    for (int i = 0; i < n_draws; ++i)
    {
        CVector su = rng_a.cgauss_vector(n);
        CVector qu = correlated_draw(su, phi, rng_a);
        if (check_correlation(qu, su, phi))
            ++accept_impl;
    }
    int accept_mc = 0;
    for (int i = 0; i < n_draws; ++i)
    {
        CVector su = rng_b.cgauss_vector(n);
        CVector qu = correlated_draw(su, phi, rng_b);
        double ratio = std::complex<double>(su.adjoint() * qu).real() / su.squaredNorm();
        if (ratio > phi)
            ++accept_mc;
    }
    double p1 = (double)accept_impl / n_draws;
    double p2 = (double)accept_mc / n_draws;
    double se = std::sqrt((p1 * (1 - p1) + p2 * (1 - p2)) / n_draws);
    CHECK(std::abs(p1 - p2) <= 3.0 * std::max(se, 1e-4));
}

TEST_CASE("singleton cluster orders trivially")
{
    ScenarioConfig cfg = testutil::small_config(3, 1);
    ChannelSet cs = gen_channels(cfg, 8);
    BeamMatrix bm = zf_beams(cs);
    ClusterOrder co = order_cluster(cs, bm, 0);
    CHECK(co.order == std::vector<int>{0});
    CHECK_FALSE(co.su_not_strongest);
}

TEST_CASE("ordering sorts QUs by descending effective gain, SU pinned first")
{
    // Construct gains (SU: 5, QUs: 3, 4) through scaled copies of the SU
    // channel so the effective gains are exactly proportional.
    ScenarioConfig cfg = testutil::small_config(2, 3);
    ChannelSet cs = gen_channels(cfg, 13);
    BeamMatrix bm = zf_beams(cs);
    for (int g = 0; g < 2; ++g)
    {
        cs.h[g][1] = cs.h[g][0] * std::sqrt(3.0 / 5.0);
        cs.h[g][2] = cs.h[g][0] * std::sqrt(4.0 / 5.0);
    }
    ClusterOrder co = order_cluster(cs, bm, 0);
    CHECK(co.order == std::vector<int>{0, 2, 1});
    CHECK(co.gains[0] > co.gains[1]);
    CHECK(co.gains[1] > co.gains[2]);
    CHECK_FALSE(co.su_not_strongest);
}

TEST_CASE("ordering agrees with exhaustive pairwise comparison")
{
    ScenarioConfig cfg = testutil::default_config();
    cfg.correlation = 0.9;
    ChannelSet cs = gen_channels(cfg, 31);
    BeamMatrix bm = zf_beams(cs);
    for (int g = 0; g < cfg.n_clusters; ++g)
    {
        ClusterOrder co = order_cluster(cs, bm, g);
        // brute-force pairwise oracle over the returned ordering
        for (size_t a = 1; a + 1 < co.order.size(); ++a)
            for (size_t b = a + 1; b < co.order.size(); ++b)
            {
                double ga = std::norm(std::complex<double>(cs.h[g][co.order[a]].adjoint() * bm.w[g]));
                double gb = std::norm(std::complex<double>(cs.h[g][co.order[b]].adjoint() * bm.w[g]));
                CHECK(ga >= gb);
            }
        // permutation property
        std::vector<int> sorted = co.order;
        std::sort(sorted.begin(), sorted.end());
        for (int k = 0; k < cfg.users_per_cluster; ++k)
            CHECK(sorted[k] == k);
    }
}

TEST_CASE("assembled realizations satisfy the scheduling conditions")
{
    ScenarioConfig cfg = testutil::default_config();
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
    {
        Instance inst = assemble_realization(cfg, seed);
        REQUIRE(inst.scheduling_ok);
        for (int g = 0; g < cfg.n_clusters; ++g)
        {
            for (int k = 1; k < cfg.users_per_cluster; ++k)
            {
                CHECK(check_correlation(inst.channels.smallscale[g][k],
                                        inst.channels.smallscale[g][0], cfg.correlation));
                // SU keeps the strictly largest effective gain.
                CHECK(inst.assign.gains[g][0] > inst.assign.gains[g][k]);
            }
            // decoding order is descending
            for (int k = 1; k + 1 < cfg.users_per_cluster; ++k)
                CHECK(inst.assign.gains[g][k] >= inst.assign.gains[g][k + 1]);
        }
    }
}

TEST_CASE("assembly is deterministic and frozen distances repeat")
{
    ScenarioConfig cfg = testutil::default_config();
    Instance a = assemble_realization(cfg, 5);
    Instance b = assemble_realization(cfg, 5);
    for (int g = 0; g < cfg.n_clusters; ++g)
        for (int k = 0; k < cfg.users_per_cluster; ++k)
            CHECK((a.channels.h[g][k] - b.channels.h[g][k]).norm() == 0.0);

    cfg.freeze_distances = true;
    Instance c = assemble_realization(cfg, 5);
    Instance d = assemble_realization(cfg, 99);
    for (int g = 0; g < cfg.n_clusters; ++g)
        CHECK(c.channels.distance_m[g][0] == d.channels.distance_m[g][0]);
}
