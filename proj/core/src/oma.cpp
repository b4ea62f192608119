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

#include "nomasec/oma.hpp"

#include "nomasec/errors.hpp"
#include "nomasec/mmsr.hpp"
#include "nomasec/mssr.hpp"

namespace nomasec
{

OmaResult oma_baseline(const Instance &inst, EveCase ecase, Metric metric, double sigma)
{
    const int G = inst.clusters();
    const int K = inst.users();

    Instance slot = su_only_view(inst);

    OmaResult out;
    if (ecase == EveCase::Lower)
    {
        out.slot = metric == Metric::MaxMin ? mmsr_lower(slot, sigma) : mssr_lower(slot, sigma);
    }
    else
    {
        PowerAllocation a0 = init_power(slot, sigma);
        out.slot = metric == Metric::MaxMin ? mmsr_upper(slot, sigma, a0)
                                            : mssr_upper(slot, sigma, a0);
    }

    double prelog = 1.0 / (double)K;
    out.objective_bits = prelog * out.slot.objective_bits;
    out.per_su_rate = prelog * out.slot.per_su_rate;

    // Dedicated QU slots: user k of every cluster shares one slot without
    // inter-cluster reuse, so meeting r_k needs sum_g r_k / gain_{g,k} of
    // the slot budget.
    out.qu_qos_ok = true;
    for (int k = 1; k < K; ++k)
    {
        double need = 0.0;
        for (int g = 0; g < G; ++g)
        {
            double gain = inst.eff[g](k, g);
            if (!(gain > 0.0))
            {
                out.qu_qos_ok = false;
                break;
            }
            need += inst.cfg.qos_linear[k - 1] / gain;
        }
        if (need > 1.0)
            out.qu_qos_ok = false;
    }
    return out;
}

} // namespace nomasec
