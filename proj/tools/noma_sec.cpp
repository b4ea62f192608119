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

#include <cstdio>
#include <filesystem>
#include <string>

#include <CLI11.hpp>

#include "nomasec/errors.hpp"
#include "nomasec/experiment.hpp"

namespace
{

nomasec::CaseKind parse_case(const std::string &s)
{
    if (s == "lower")
        return nomasec::CaseKind::Lower;
    if (s == "upper")
        return nomasec::CaseKind::Upper;
    if (s == "oma")
        return nomasec::CaseKind::Oma;
    throw nomasec::ValidationError("unknown case '" + s + "' (expected lower|upper|oma)");
}

nomasec::Metric parse_metric(const std::string &s)
{
    if (s == "mmsr")
        return nomasec::Metric::MaxMin;
    if (s == "mssr")
        return nomasec::Metric::MaxSum;
    throw nomasec::ValidationError("unknown metric '" + s + "' (expected mmsr|mssr)");
}

std::vector<std::string> split_list(const std::string &s)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s)
    {
        if (c == ',')
        {
            if (!cur.empty())
                out.push_back(cur);
            cur.clear();
        }
        else
            cur += c;
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"secure downlink MISO-NOMA power allocation simulator"};
    app.require_subcommand(1);

    auto *run = app.add_subcommand("run", "run a Monte Carlo sweep and write a CSV");

    std::string config_path;
    std::string experiment = "power_sweep";
    std::string out_path = "results.csv";
    std::string cases_csl, metrics_csl;
    std::uint64_t seed = 0;
    bool have_seed = false;
    bool detail = false;
    int threads = 0;
    int realizations = 0;

    run->add_option("--config", config_path, "scenario config file (key=value)");
    run->add_option("--experiment", experiment,
                    "built-in sweep name or path to an experiment file");
    run->add_option("--seed", seed, "master seed (realization i uses seed + i)")
        ->each([&](const std::string &) { have_seed = true; });
    run->add_option("--out", out_path, "summary CSV path");
    run->add_flag("--detail", detail, "also write <out>.detail.csv with per-realization rows");
    run->add_option("--cases", cases_csl, "subset of lower,upper,oma");
    run->add_option("--metrics", metrics_csl, "subset of mmsr,mssr");
    run->add_option("--threads", threads, "worker threads (default: hardware)");
    run->add_option("--realizations", realizations, "override realization count");

    CLI11_PARSE(app, argc, argv);

    try
    {
        nomasec::ScenarioConfig cfg = config_path.empty()
                                          ? nomasec::ScenarioConfig::defaults()
                                          : nomasec::parse_config(config_path);

        nomasec::ExperimentSpec spec =
            std::filesystem::exists(experiment)
                ? nomasec::experiment_from_file(experiment, cfg)
                : nomasec::experiment_from_name(experiment, cfg);

        if (!cases_csl.empty())
        {
            spec.cases.clear();
            for (const auto &s : split_list(cases_csl))
                spec.cases.push_back(parse_case(s));
        }
        if (!metrics_csl.empty())
        {
            spec.metrics.clear();
            for (const auto &s : split_list(metrics_csl))
                spec.metrics.push_back(parse_metric(s));
        }
        if (realizations > 0)
            spec.n_realizations = realizations;
        spec.out_path = out_path;
        spec.detail = detail;
        spec.threads = threads;
        spec.master_seed = have_seed ? seed : cfg.rng_seed;

        nomasec::ExperimentResult res = nomasec::run_experiment(spec);
        std::printf("wrote %zu summary rows to %s\n", res.rows.size(), out_path.c_str());
        return 0;
    }
    catch (const std::exception &e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
