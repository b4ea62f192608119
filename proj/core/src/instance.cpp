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

#include "nomasec/instance.hpp"

#include <Eigen/Cholesky>

#include "nomasec/errors.hpp"

namespace nomasec
{

namespace
{

double effective_gain(const CVector &h, const CVector &w)
{
    return std::norm(std::complex<double>(h.adjoint() * w));
}

} // namespace

void refresh_instance_tables(Instance &inst)
{
    const int G = inst.cfg.n_clusters;
    const int K = inst.cfg.users_per_cluster;
    const double rho = inst.channels.rho;

    inst.eff.assign(G, Eigen::MatrixXd(K, G));
    inst.su_gain = Eigen::VectorXd(G);
    for (int g = 0; g < G; ++g)
    {
        for (int k = 0; k < K; ++k)
            for (int i = 0; i < G; ++i)
                inst.eff[g](k, i) = effective_gain(inst.channels.h[g][k], inst.beams.w[i]) * rho;
        inst.su_gain(g) = inst.eff[g](0, g);
    }

    Eigen::MatrixXd overlap(G, G);
    for (int i = 0; i < G; ++i)
        for (int j = 0; j < G; ++j)
            overlap(i, j) = std::norm(std::complex<double>(inst.beams.w[i].adjoint() * inst.beams.w[j]));
    overlap = 0.5 * (overlap + overlap.transpose()).eval();
    Eigen::LLT<Eigen::MatrixXd> llt(overlap + 1e-14 * Eigen::MatrixXd::Identity(G, G));
    if (llt.info() != Eigen::Success)
        throw NumericalError("beam overlap matrix not positive definite");
    inst.beam_overlap_chol = llt.matrixL();

    inst.gamma_rho = inst.channels.gamma_e * rho;
}

Instance assemble_realization(const ScenarioConfig &cfg, std::uint64_t seed)
{
    cfg.validate();
    const int G = cfg.n_clusters;
    const int K = cfg.users_per_cluster;
    const int N = cfg.n_antennas;

    Rng rng(seed);

    // Frozen distances come from their own stream seeded by the config seed,
    // so they repeat across realizations while the fading stays fresh.
    std::vector<std::vector<double>> frozen_d;
    if (cfg.freeze_distances)
    {
        Rng drng(cfg.rng_seed ^ 0x9e3779b97f4a7c15ull);
        frozen_d.assign(G, std::vector<double>(K));
        for (int g = 0; g < G; ++g)
            for (int k = 0; k < K; ++k)
                frozen_d[g][k] =
                    drng.uniform(cfg.distance_ranges[k].min_m, cfg.distance_ranges[k].max_m);
    }

    Instance inst;
    inst.cfg = cfg;
    ChannelSet &cs = inst.channels;
    cs.gamma_e = cfg.gamma_e();
    cs.rho = cfg.rho();
    cs.h.assign(G, std::vector<CVector>(K));
    cs.smallscale.assign(G, std::vector<CVector>(K));
    cs.distance_m.assign(G, std::vector<double>(K, 0.0));

    // SU draws first; a singular Gram across the SUs (measure zero) just
    // redraws the SU set.
    const int singular_cap = 64;
    int singular_tries = 0;
    while (true)
    {
        for (int g = 0; g < G; ++g)
        {
            cs.smallscale[g][0] = rng.cgauss_vector(N);
            cs.distance_m[g][0] =
                cfg.freeze_distances
                    ? frozen_d[g][0]
                    : rng.uniform(cfg.distance_ranges[0].min_m, cfg.distance_ranges[0].max_m);
            cs.h[g][0] = apply_pathloss(cs.smallscale[g][0], cs.distance_m[g][0], cfg.pathloss_exp);
        }
        try
        {
            inst.beams = zf_beams(cs);
            break;
        }
        catch (const SingularChannelError &)
        {
            if (++singular_tries >= singular_cap)
                throw;
        }
    }

    // QU draws conditioned on the scheduling rule. Acceptance factorizes per
    // QU given the SU and beams, so each QU rejects independently.
    inst.scheduling_ok = true;
    for (int g = 0; g < G; ++g)
    {
        double su_gain = std::norm(std::complex<double>(cs.h[g][0].adjoint() * inst.beams.w[g]));
        for (int k = 1; k < K; ++k)
        {
            bool accepted = false;
            for (int attempt = 0; attempt < cfg.sched_retry_cap; ++attempt)
            {
                CVector small = correlated_draw(cs.smallscale[g][0], cfg.correlation, rng);
                double d = cfg.freeze_distances
                               ? frozen_d[g][k]
                               : rng.uniform(cfg.distance_ranges[k].min_m,
                                             cfg.distance_ranges[k].max_m);
                CVector h = apply_pathloss(small, d, cfg.pathloss_exp);
                double gain = std::norm(std::complex<double>(h.adjoint() * inst.beams.w[g]));

                bool ok = check_correlation(small, cs.smallscale[g][0], cfg.correlation) &&
                          gain < su_gain;
                cs.smallscale[g][k] = small;
                cs.distance_m[g][k] = d;
                cs.h[g][k] = h;
                if (ok)
                {
                    accepted = true;
                    inst.retries += attempt;
                    break;
                }
            }
            if (!accepted)
            {
                inst.scheduling_ok = false;
                inst.retries += cfg.sched_retry_cap;
            }
        }
    }

    // Fix the SIC order: relabel users so slot k is the k-th strongest.
    inst.assign.order.resize(G);
    inst.assign.gains.resize(G);
    inst.assign.su_not_strongest.resize(G);
    for (int g = 0; g < G; ++g)
    {
        ClusterOrder co = order_cluster(cs, inst.beams, g);
        inst.assign.order[g] = co.order;
        inst.assign.gains[g] = co.gains;
        inst.assign.su_not_strongest[g] = co.su_not_strongest;

        std::vector<CVector> h2(K), s2(K);
        std::vector<double> d2(K);
        for (int pos = 0; pos < K; ++pos)
        {
            int src = co.order[pos];
            h2[pos] = cs.h[g][src];
            s2[pos] = cs.smallscale[g][src];
            d2[pos] = cs.distance_m[g][src];
        }
        cs.h[g] = std::move(h2);
        cs.smallscale[g] = std::move(s2);
        cs.distance_m[g] = std::move(d2);
    }

    refresh_instance_tables(inst);
    return inst;
}

Instance su_only_view(const Instance &inst)
{
    Instance out;
    out.cfg = inst.cfg;
    out.cfg.users_per_cluster = 1;
    out.cfg.distance_ranges = {inst.cfg.distance_ranges[0]};
    out.cfg.qos_linear.clear();

    const int G = inst.cfg.n_clusters;
    out.channels.gamma_e = inst.channels.gamma_e;
    out.channels.rho = inst.channels.rho;
    out.channels.h.assign(G, {});
    out.channels.smallscale.assign(G, {});
    out.channels.distance_m.assign(G, {});
    for (int g = 0; g < G; ++g)
    {
        out.channels.h[g] = {inst.channels.h[g][0]};
        out.channels.smallscale[g] = {inst.channels.smallscale[g][0]};
        out.channels.distance_m[g] = {inst.channels.distance_m[g][0]};
    }
    out.beams = inst.beams;
    out.assign.order.assign(G, {0});
    out.assign.gains.resize(G);
    out.assign.su_not_strongest.assign(G, false);
    for (int g = 0; g < G; ++g)
        out.assign.gains[g] = {inst.assign.gains[g][0]};
    out.scheduling_ok = inst.scheduling_ok;
    refresh_instance_tables(out);
    return out;
}

} // namespace nomasec
