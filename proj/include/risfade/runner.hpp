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

#ifndef RISFADE_RUNNER_HPP
#define RISFADE_RUNNER_HPP

#include "risfade/control.hpp"
#include "risfade/geometry.hpp"
#include "risfade/imperfections.hpp"
#include "risfade/spectrum.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace risfade
{
    inline constexpr const char *version_string = "0.1.0";

    struct Imperfections
    {
        std::optional<RealisticRisModel> hardware;
        std::optional<DopplerErrorModel> doppler_error;
        std::optional<HoldModel> hold;
    };

    // {"realistic_ris": {"amplitude_db", "phase_min_rad", "phase_max_rad"} | true,
    //  "doppler_error": {"u_hz", "seed"}, "hold": {"q"} | {"t_r_s"}}
    Imperfections imperfections_from_json(const nlohmann::json &doc);
    nlohmann::json imperfections_to_json(const Imperfections &imp);

    // {"sample_count", "sample_interval_s", "fft_size"}
    SamplingGrid grid_from_json(const nlohmann::json &doc);
    nlohmann::json grid_to_json(const SamplingGrid &grid);

    // One simulation: scenario document, strategy, grid and imperfections.
    struct RunCase
    {
        std::string label;        // output subdirectory; empty writes straight into the run directory
        nlohmann::json scenario;  // scenario document (see scenario_json.hpp)
        std::string strategy = "none";
        SamplingGrid grid;
        Imperfections imperfections;
        std::size_t surface_theta_points = 0; // > 0 also writes |r| over (time, theta) for a single RIS
    };

    struct RunConfig
    {
        std::string source; // preset name or scenario file, recorded in the manifest
        std::vector<RunCase> cases;
        std::filesystem::path output_dir = "out";
        std::uint64_t seed = 1;
        std::size_t permutation_cap = 1'000'000;
    };

    struct CaseResult
    {
        std::string label;
        Scenario truth;
        SamplingGrid grid;
        EnvelopeTrace trace;
        DopplerSpectrum spectrum;
        FadeMetrics metrics;
        std::optional<MethodResult> search;
        std::vector<std::string> warnings;
    };

    // Simulates one case in memory; `seed` fills every unset seed (random placement, random phases,
    // Doppler errors).
    CaseResult simulate_case(const RunCase &c, std::uint64_t seed, std::size_t permutation_cap = 1'000'000);

    struct RunManifest
    {
        nlohmann::json document; // resolved parameters, seeds, generator, version, duration, outputs
        std::vector<std::filesystem::path> files;
        std::vector<std::string> warnings;
    };

    // Simulates every case and writes trace.csv, spectrum.csv, metrics.json, scenario.json (plus
    // assignments.csv / surface.csv when applicable) per case and manifest.json for the run.
    RunManifest run(const RunConfig &config);

    // |r| in dB over `theta_points` equispaced phases of the single RIS at every grid sample
    std::vector<std::vector<double>> magnitude_surface_db(const Scenario &scenario, const SamplingGrid &grid,
                                                          std::size_t theta_points);

    // Builds a single-case configuration from a scenario file document. Optional keys: "grid",
    // "strategy", "imperfections", "seed", "surface_theta_points".
    RunCase case_from_document(const nlohmann::json &doc);

    struct Preset
    {
        std::string name;
        std::string figure;
        std::string description;
        std::vector<RunCase> cases;
    };

    const std::vector<Preset> &presets();
    const Preset *find_preset(const std::string &name);
    std::vector<std::string> preset_names();
    std::string list_presets();

    // Writes `content` to `path` through a temporary file and a rename
    void write_file_atomic(const std::filesystem::path &path, const std::string &content);
}

#endif
