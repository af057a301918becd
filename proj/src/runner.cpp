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

#include "risfade/runner.hpp"
#include "risfade/errors.hpp"
#include "risfade/scenario_json.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

using nlohmann::json;
namespace fs = std::filesystem;

namespace risfade
{
    Imperfections imperfections_from_json(const json &doc)
    {
        Imperfections imp;
        if (doc.is_null())
            return imp;
        if (!doc.is_object())
            throw ContractError("imperfections must be a JSON object");

        if (doc.contains("realistic_ris"))
        {
            const auto &r = doc["realistic_ris"];
            if (r.is_boolean())
            {
                if (r.get<bool>())
                    imp.hardware = RealisticRisModel{};
            }
            else
            {
                RealisticRisModel m;
                m.amplitude_db = r.value("amplitude_db", m.amplitude_db);
                m.phase_min = r.value("phase_min_rad", m.phase_min);
                m.phase_max = r.value("phase_max_rad", m.phase_max);
                m.validate();
                imp.hardware = m;
            }
        }
        if (doc.contains("doppler_error"))
        {
            const auto &d = doc["doppler_error"];
            DopplerErrorModel m;
            m.bound_u = d.at("u_hz").get<double>();
            m.seed = d.value("seed", std::uint64_t{0});
            if (!(m.bound_u >= 0.0))
                throw DomainError("doppler_error.u_hz must be non-negative");
            imp.doppler_error = m;
        }
        if (doc.contains("hold"))
        {
            const auto &h = doc["hold"];
            if (h.contains("q") == h.contains("t_r_s"))
                throw ContractError("hold needs exactly one of 'q' or 't_r_s'");
            imp.hold = h.contains("q") ? HoldModel::samples(h["q"].get<std::size_t>())
                                       : HoldModel::interval(h["t_r_s"].get<double>());
        }
        return imp;
    }

    json imperfections_to_json(const Imperfections &imp)
    {
        json doc = json::object();
        if (imp.hardware)
            doc["realistic_ris"] = {{"amplitude_db", imp.hardware->amplitude_db},
                                    {"phase_min_rad", imp.hardware->phase_min},
                                    {"phase_max_rad", imp.hardware->phase_max}};
        if (imp.doppler_error)
            doc["doppler_error"] = {{"u_hz", imp.doppler_error->bound_u}, {"seed", imp.doppler_error->seed}};
        if (imp.hold)
        {
            if (imp.hold->hold_samples)
                doc["hold"] = {{"q", *imp.hold->hold_samples}};
            else
                doc["hold"] = {{"t_r_s", *imp.hold->hold_interval}};
        }
        return doc;
    }

    SamplingGrid grid_from_json(const json &doc)
    {
        SamplingGrid g;
        g.sample_count = doc.at("sample_count").get<std::size_t>();
        g.sample_interval = doc.at("sample_interval_s").get<double>();
        g.fft_size = doc.at("fft_size").get<std::size_t>();
        g.validate();
        return g;
    }

    json grid_to_json(const SamplingGrid &grid)
    {
        return {{"sample_count", grid.sample_count},
                {"sample_interval_s", grid.sample_interval},
                {"fft_size", grid.fft_size}};
    }

    RunCase case_from_document(const json &doc)
    {
        RunCase c;
        c.scenario = doc;
        if (doc.contains("grid"))
            c.grid = grid_from_json(doc["grid"]);
        else
        {
            // Six wavelengths of travel sampled every lambda/32
            const double f_c = doc.at("carrier_hz").get<double>();
            const CarrierConfig carrier = doc.contains("wavelength_m")
                                              ? CarrierConfig::pinned(f_c, doc["wavelength_m"].get<double>())
                                              : CarrierConfig::from_frequency(f_c);
            c.grid = route_grid(carrier, MobileConfig::make(doc.at("speed_mps").get<double>(), carrier), 6.0, 32.0, 256);
        }
        c.strategy = doc.value("strategy", std::string("none"));
        if (doc.contains("imperfections"))
            c.imperfections = imperfections_from_json(doc["imperfections"]);
        c.surface_theta_points = doc.value("surface_theta_points", std::size_t{0});
        return c;
    }

    std::vector<std::vector<double>> magnitude_surface_db(const Scenario &scenario, const SamplingGrid &grid,
                                                          std::size_t theta_points)
    {
        if (scenario.ris_count() != 1)
            throw ContractError("magnitude surface needs exactly one RIS");
        if (theta_points < 1)
            throw ContractError("magnitude surface needs at least one phase point");
        std::vector<std::vector<double>> out(grid.sample_count, std::vector<double>(theta_points));
        const double amp[1] = {1.0};
        for (std::size_t k = 0; k < grid.sample_count; ++k)
            for (std::size_t j = 0; j < theta_points; ++j)
            {
                const double theta[1] = {two_pi * static_cast<double>(j) / static_cast<double>(theta_points)};
                out[k][j] = magnitude_db(std::abs(envelope_sample(scenario, theta, amp, grid.time(k))));
            }
        return out;
    }

    CaseResult simulate_case(const RunCase &c, std::uint64_t seed, std::size_t permutation_cap)
    {
        json doc = c.scenario;
        if (doc.contains("random") && !doc["random"].contains("seed"))
            doc["random"]["seed"] = seed;

        CaseResult out;
        out.label = c.label;
        out.truth = scenario_from_json(doc);
        out.grid = c.grid;
        out.grid.validate();

        const Scenario controller = c.imperfections.doppler_error
                                        ? apply_doppler_error(out.truth, *c.imperfections.doppler_error)
                                        : out.truth;

        std::size_t hold = 1;
        if (c.imperfections.hold)
        {
            const auto res = resolve_hold(*c.imperfections.hold, out.grid);
            hold = res.samples;
            if (res.rounded)
                out.warnings.push_back("hold interval is not a multiple of the sample interval; rounded down to " +
                                       std::to_string(hold) + " samples");
        }

        MethodOptions options;
        options.permutation_cap = permutation_cap;
        options.hold_samples = hold;
        options.hardware = c.imperfections.hardware;
        options.plant = &out.truth;

        const Strategy strat = strategy_from_string(c.strategy, seed);
        auto outcome = make_plan(strat, controller, out.grid, options);
        PhasePlan plan = std::move(outcome.plan);
        if (!outcome.search && hold > 1)
            plan = apply_hold(std::move(plan), hold);
        if (c.imperfections.hardware)
            plan = apply_realistic_ris(std::move(plan), *c.imperfections.hardware);
        out.search = std::move(outcome.search);

        out.trace = synthesize(out.truth, plan, out.grid);
        out.spectrum = doppler_spectrum(out.trace, out.grid.fft_size);
        out.metrics = fade_metrics(out.trace);
        return out;
    }

    void write_file_atomic(const fs::path &path, const std::string &content)
    {
        fs::path tmp = path;
        tmp += ".tmp";
        {
            std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
            if (!f)
                throw std::runtime_error("cannot write " + tmp.string());
            f << content;
            if (!f)
                throw std::runtime_error("write failed for " + tmp.string());
        }
        fs::rename(tmp, path);
    }

    namespace
    {
        json metrics_json(const FadeMetrics &m, const SamplingGrid &g)
        {
            json j;
            j["delta_r_db"] = std::isfinite(m.delta_r_db) ? json(m.delta_r_db) : json(nullptr);
            j["r_bar_db"] = std::isfinite(m.r_bar_db) ? json(m.r_bar_db) : json(nullptr);
            j["n_s"] = g.sample_count;
            j["t_s"] = g.sample_interval;
            return j;
        }
    }

    RunManifest run(const RunConfig &config)
    {
        if (config.cases.empty())
            throw ContractError("nothing to run");
        const auto start = std::chrono::steady_clock::now();
        fs::create_directories(config.output_dir);

        RunManifest manifest;
        json cases = json::array();
        for (const auto &c : config.cases)
        {
            CaseResult r = simulate_case(c, config.seed, config.permutation_cap);
            const fs::path dir = c.label.empty() ? config.output_dir : config.output_dir / c.label;
            fs::create_directories(dir);

            std::vector<fs::path> written;
            auto emit = [&](const char *name, const std::string &content) {
                write_file_atomic(dir / name, content);
                written.push_back(dir / name);
            };

            std::ostringstream trace_csv, spectrum_csv;
            write_trace_csv(trace_csv, r.trace);
            write_spectrum_csv(spectrum_csv, r.spectrum);
            emit("trace.csv", trace_csv.str());
            emit("spectrum.csv", spectrum_csv.str());
            emit("metrics.json", metrics_json(r.metrics, r.grid).dump(2) + "\n");

            if (r.search)
            {
                std::ostringstream a;
                write_assignment_csv(a, *r.search, r.grid);
                emit("assignments.csv", a.str());
            }
            if (c.surface_theta_points > 0)
            {
                const auto surface = magnitude_surface_db(r.truth, r.grid, c.surface_theta_points);
                std::ostringstream s;
                s << "t_s,theta_rad,mag_db\n";
                char line[96];
                for (std::size_t k = 0; k < surface.size(); ++k)
                    for (std::size_t j = 0; j < surface[k].size(); ++j)
                    {
                        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", r.grid.time(k),
                                      two_pi * static_cast<double>(j) / static_cast<double>(c.surface_theta_points),
                                      surface[k][j]);
                        s << line;
                    }
                emit("surface.csv", s.str());
            }

            // Resolved, re-runnable description of this case
            json resolved = scenario_to_json(r.truth);
            resolved["grid"] = grid_to_json(r.grid);
            resolved["strategy"] = to_string(strategy_from_string(c.strategy, config.seed));
            resolved["imperfections"] = imperfections_to_json(c.imperfections);
            resolved["seed"] = config.seed;
            if (c.surface_theta_points > 0)
                resolved["surface_theta_points"] = c.surface_theta_points;
            emit("scenario.json", resolved.dump(2) + "\n");

            json entry;
            entry["label"] = c.label;
            entry["strategy"] = resolved["strategy"];
            entry["scenario"] = resolved;
            entry["metrics"] = metrics_json(r.metrics, r.grid);
            entry["warnings"] = r.warnings;
            json files = json::array();
            for (const auto &p : written)
                files.push_back(p.lexically_relative(config.output_dir).generic_string());
            entry["files"] = files;
            cases.push_back(std::move(entry));

            manifest.files.insert(manifest.files.end(), written.begin(), written.end());
            for (auto &w : r.warnings)
                manifest.warnings.push_back((c.label.empty() ? "" : c.label + ": ") + w);
        }

        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        json &doc = manifest.document;
        doc["tool"] = "risfade";
        doc["version"] = version_string;
        doc["source"] = config.source;
        doc["seed"] = config.seed;
        doc["generator"] = random_generator_name;
        doc["permutation_cap"] = config.permutation_cap;
        doc["wall_clock_s"] = seconds;
        doc["cases"] = std::move(cases);
        json files = json::array();
        for (const auto &p : manifest.files)
            files.push_back(p.lexically_relative(config.output_dir).generic_string());
        doc["files"] = files;

        const fs::path manifest_path = config.output_dir / "manifest.json";
        write_file_atomic(manifest_path, doc.dump(2) + "\n");
        manifest.files.push_back(manifest_path);
        return manifest;
    }
}
