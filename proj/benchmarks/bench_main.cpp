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

#include <benchmark/benchmark.h>

#include "nomasec/experiment.hpp"
#include "nomasec/mmsr.hpp"
#include "nomasec/mssr.hpp"
#include "nomasec/sop.hpp"

using namespace nomasec;

namespace
{

Instance make_instance(std::uint64_t seed)
{
    ScenarioConfig cfg = ScenarioConfig::defaults();
    return assemble_realization(cfg, seed);
}

void BM_AssembleRealization(benchmark::State &state)
{
    ScenarioConfig cfg = ScenarioConfig::defaults();
    std::uint64_t seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(assemble_realization(cfg, seed++));
}
BENCHMARK(BM_AssembleRealization);

void BM_ZfBeams(benchmark::State &state)
{
    ScenarioConfig cfg = ScenarioConfig::defaults();
    ChannelSet cs = gen_channels(cfg, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(zf_beams(cs));
}
BENCHMARK(BM_ZfBeams);

void BM_ExactSop(benchmark::State &state)
{
    Instance inst = make_instance(3);
    PowerAllocation a(inst.clusters(), inst.users());
    a.a.setConstant(1.0 / (inst.clusters() * inst.users()));
    HermitianForm q = eve_form_upper(0, inst.beams, inst.channels.rho, inst.channels.gamma_e,
                                     a, 2.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_sop(q, 2.0));
}
BENCHMARK(BM_ExactSop);

void BM_MmsrLower(benchmark::State &state)
{
    Instance inst = make_instance(5);
    double sigma = std::log(100.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(mmsr_lower(inst, sigma));
}
BENCHMARK(BM_MmsrLower);

void BM_MmsrUpper(benchmark::State &state)
{
    Instance inst = make_instance(5);
    double sigma = std::log(2.0);
    PowerAllocation a0 = init_power(inst, sigma);
    for (auto _ : state)
        benchmark::DoNotOptimize(mmsr_upper(inst, sigma, a0));
}
BENCHMARK(BM_MmsrUpper);

void BM_MssrLower(benchmark::State &state)
{
    Instance inst = make_instance(5);
    double sigma = std::log(100.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(mssr_lower(inst, sigma));
}
BENCHMARK(BM_MssrLower);

void BM_CalibratedMmsrLower(benchmark::State &state)
{
    Instance inst = make_instance(5);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_calibrated(inst, EveCase::Lower, Metric::MaxMin));
}
BENCHMARK(BM_CalibratedMmsrLower);

} // namespace

BENCHMARK_MAIN();
