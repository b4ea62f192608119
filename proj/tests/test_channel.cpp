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

#include <cmath>

#include "nomasec/channel.hpp"
#include "test_util.hpp"

using namespace nomasec;

TEST_CASE("full correlation collapses QU fading onto the SU vector")
{
    ScenarioConfig cfg = testutil::small_config(4, 3);
    cfg.correlation = 1.0;
    ChannelSet cs = gen_channels(cfg, 7);
    for (int g = 0; g < cfg.n_clusters; ++g)
        for (int k = 1; k < cfg.users_per_cluster; ++k)
            CHECK((cs.smallscale[g][k] - cs.smallscale[g][0]).norm() ==
                  doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("zero correlation gives statistically independent QU fading")
{
    // Monte Carlo oracle for E[g_qu^H g_su] / N over fresh draws.
    ScenarioConfig cfg = testutil::small_config(4, 2);
    cfg.correlation = 0.0;
    const int n_draws = 100000;
    Rng rng(11);
    double acc = 0.0;
    for (int i = 0; i < n_draws; ++i)
    {
        CVector su = rng.cgauss_vector(cfg.n_antennas);
        CVector qu = correlated_draw(su, cfg.correlation, rng);
        acc += std::complex<double>(su.adjoint() * qu).real() / cfg.n_antennas;
    }
    double mean = acc / n_draws;
    // Var of one term ~ 1/(2N); 3 standard errors.
    double se = std::sqrt(1.0 / (2.0 * cfg.n_antennas) / n_draws);
    CHECK(std::abs(mean) < 3.0 * se);
}

TEST_CASE("eve covariance scale is exactly d_e^-a")
{
    ScenarioConfig cfg = testutil::default_config();
    cfg.eve_distance_m = 200.0;
    cfg.pathloss_exp = 4.0;
    ChannelSet cs = gen_channels(cfg, 1);
    CHECK(cs.gamma_e == doctest::Approx(6.25e-10).epsilon(1e-15));
}

TEST_CASE("normalized inner product concentrates on sqrt(phi)")
{
    const double phi = 0.9;
    const int n = 6;
    const int n_draws = 100000;
    Rng rng(23);
    double acc = 0.0, acc2 = 0.0;
    for (int i = 0; i < n_draws; ++i)
    {
        CVector su = rng.cgauss_vector(n);
        CVector qu = correlated_draw(su, phi, rng);
        double v = std::complex<double>(su.adjoint() * qu).real() / su.squaredNorm();
        acc += v;
        acc2 += v * v;
    }
    double mean = acc / n_draws;
    double var = acc2 / n_draws - mean * mean;
    double se = std::sqrt(var / n_draws);
    CHECK(std::abs(mean - std::sqrt(phi)) < 3.0 * se);
}

TEST_CASE("identical (cfg, seed) reproduces the channel set bit for bit")
{
    ScenarioConfig cfg = testutil::default_config();
    ChannelSet a = gen_channels(cfg, 42);
    ChannelSet b = gen_channels(cfg, 42);
    for (int g = 0; g < cfg.n_clusters; ++g)
        for (int k = 0; k < cfg.users_per_cluster; ++k)
        {
            CHECK(a.distance_m[g][k] == b.distance_m[g][k]);
            for (int i = 0; i < cfg.n_antennas; ++i)
                CHECK(a.h[g][k](i) == b.h[g][k](i));
        }
    ChannelSet c = gen_channels(cfg, 43);
    CHECK((a.h[0][0] - c.h[0][0]).norm() > 0.0);
}

TEST_CASE("SU fading entries have unit empirical variance")
{
    const int n_draws = 100000;
    Rng rng(5);
    double acc = 0.0;
    for (int i = 0; i < n_draws; ++i)
    {
        std::complex<double> x = rng.cgauss();
        acc += std::norm(x);
    }
    double var = acc / n_draws; // E|x|^2, target 1
    // |x|^2 ~ Exp(1): sd 1, so 5 standard errors of the mean:
    CHECK(std::abs(var - 1.0) < 5.0 / std::sqrt((double)n_draws));
}

TEST_CASE("path loss scales channel norms by (d1/d2)^(-a/2) exactly")
{
    Rng rng(3);
    CVector g = rng.cgauss_vector(6);
    double a = 4.0;
    CVector h1 = apply_pathloss(g, 70.0, a);
    CVector h2 = apply_pathloss(g, 210.0, a);
    double ratio = h1.norm() / h2.norm();
    CHECK(ratio == doctest::Approx(std::pow(70.0 / 210.0, -a / 2.0)).epsilon(1e-12));
}

TEST_CASE("distance draws stay inside the configured per-slot ranges")
{
    ScenarioConfig cfg = testutil::default_config();
    ChannelSet cs = gen_channels(cfg, 9);
    for (int g = 0; g < cfg.n_clusters; ++g)
        for (int k = 0; k < cfg.users_per_cluster; ++k)
        {
            CHECK(cs.distance_m[g][k] >= cfg.distance_ranges[k].min_m);
            CHECK(cs.distance_m[g][k] <= cfg.distance_ranges[k].max_m);
        }
}
