// SPDX-License-Identifier: Apache-2.0
//
// risfade: Doppler and multipath fading simulator for RIS-assisted mobile links
// Copyright (C) 2026 The risfade authors
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

#include "risfade/errors.hpp"
#include "risfade/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace
{
    enum ExitCode
    {
        exit_ok = 0,
        exit_io = 1,
        exit_usage = 2,
        exit_resource = 3,
        exit_contract = 4,
    };

    std::string join(const std::vector<std::string> &items)
    {
        std::string out;
        for (const auto &s : items)
            out += (out.empty() ? "" : ", ") + s;
        return out;
    }

    struct RunArgs
    {
        std::string preset;
        std::string scenario_file;
        std::string strategy;
        std::optional<std::uint64_t> seed;
        std::optional<std::size_t> fft;
        std::string out = "out";
        std::optional<double> u_hz;
        std::optional<std::size_t> hold_q;
        std::optional<double> hold_tr_us;
        bool realistic_ris = false;
        std::size_t permutation_cap = 1'000'000;
    };

    struct UsageError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    risfade::RunConfig build_config(const RunArgs &a)
    {
        using namespace risfade;
        RunConfig cfg;
        cfg.output_dir = a.out;
        cfg.permutation_cap = a.permutation_cap;

        if (!a.preset.empty())
        {
            const Preset *p = find_preset(a.preset);
            if (!p)
                throw UsageError("unknown preset '" + a.preset + "'; valid presets: " + join(preset_names()));
            cfg.source = "preset:" + p->name;
            cfg.cases = p->cases;
        }
        else
        {
            std::ifstream f(a.scenario_file);
            if (!f)
                throw UsageError("cannot open scenario file '" + a.scenario_file + "'");
            nlohmann::json doc;
            try
            {
                doc = nlohmann::json::parse(f);
            }
            catch (const nlohmann::json::exception &e)
            {
                throw UsageError("scenario file is not valid JSON: " + std::string(e.what()));
            }
            cfg.source = "scenario:" + a.scenario_file;
            cfg.seed = doc.value("seed", cfg.seed);
            cfg.cases.push_back(case_from_document(doc));
        }
        if (a.seed)
            cfg.seed = *a.seed;

        for (auto &c : cfg.cases)
        {
            if (!a.strategy.empty())
                c.strategy = a.strategy;
            if (a.fft)
                c.grid.fft_size = *a.fft;
            if (a.u_hz)
                c.imperfections.doppler_error = DopplerErrorModel{*a.u_hz, cfg.seed};
            if (a.hold_q)
                c.imperfections.hold = HoldModel::samples(*a.hold_q);
            if (a.hold_tr_us)
                c.imperfections.hold = HoldModel::interval(*a.hold_tr_us * 1e-6);
            if (a.realistic_ris)
                c.imperfections.hardware = RealisticRisModel{};

            try
            {
                (void)strategy_from_string(c.strategy, cfg.seed);
            }
            catch (const ContractError &)
            {
                throw UsageError("unknown strategy '" + c.strategy + "'; valid strategies: " +
                                 join(strategy_names()));
            }
        }
        return cfg;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Doppler and multipath fading simulator for RIS-assisted mobile links"};
    app.set_version_flag("--version", std::string(risfade::version_string));
    app.require_subcommand(1);

    RunArgs args;
    auto *run = app.add_subcommand("run", "simulate a preset or a scenario file and write CSV/JSON outputs");
    auto *src = run->add_option_group("source");
    src->add_option("--preset", args.preset, "figure preset name (see list-presets)");
    src->add_option("--scenario", args.scenario_file, "scenario JSON file")->check(CLI::ExistingFile);
    src->require_option(1);
    run->add_option("--strategy", args.strategy, "phase strategy, overrides the preset/scenario choice");
    run->add_option("--seed", args.seed, "seed for random placement, random phases and Doppler errors");
    run->add_option("--fft", args.fft, "FFT length (>= sample count)")->check(CLI::PositiveNumber);
    run->add_option("--out", args.out, "output directory")->capture_default_str();
    run->add_option("--u-hz", args.u_hz, "Doppler estimation error bound U in Hz")->check(CLI::NonNegativeNumber);
    auto *hq = run->add_option("--hold-q", args.hold_q, "hold RIS phases for Q samples")->check(CLI::PositiveNumber);
    auto *ht = run->add_option("--hold-tr-us", args.hold_tr_us, "hold RIS phases for t_r microseconds")
                   ->check(CLI::PositiveNumber);
    hq->excludes(ht);
    run->add_flag("--realistic-ris", args.realistic_ris, "apply the -1 dB, [-150, 140] deg RIS hardware model");
    run->add_option("--perm-cap", args.permutation_cap, "maximum permutations evaluated per sample")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    auto *list = app.add_subcommand("list-presets", "print every preset with its parameters");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (list->parsed())
    {
        std::cout << risfade::list_presets();
        return exit_ok;
    }

    try
    {
        const risfade::RunConfig cfg = build_config(args);
        const auto manifest = risfade::run(cfg);
        for (const auto &w : manifest.warnings)
            std::cerr << "warning: " << w << "\n";
        std::cout << "wrote " << manifest.files.size() << " files to " << cfg.output_dir.string() << "\n";
        return exit_ok;
    }
    catch (const UsageError &e)
    {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const risfade::ResourceError &e)
    {
        std::cerr << "resource error: " << e.what() << "\n";
        return exit_resource;
    }
    catch (const risfade::ContractError &e)
    {
        std::cerr << "contract violation: " << e.what() << "\n";
        return exit_contract;
    }
    catch (const risfade::DomainError &e)
    {
        std::cerr << "contract violation: " << e.what() << "\n";
        return exit_contract;
    }
    catch (const nlohmann::json::exception &e)
    {
        std::cerr << "contract violation: malformed scenario: " << e.what() << "\n";
        return exit_contract;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    }
}
