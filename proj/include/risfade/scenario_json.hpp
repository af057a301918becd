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

#ifndef RISFADE_SCENARIO_JSON_HPP
#define RISFADE_SCENARIO_JSON_HPP

#include "risfade/geometry.hpp"

#include <json.hpp>

namespace risfade
{
    // Scenario document (all angles in radians, distances in meters):
    //
    //   {
    //     "carrier_hz": 3e9,
    //     "wavelength_m": 0.1,            optional, pins lambda instead of c / f_c
    //     "speed_mps": 10,
    //     "d_los_m": 1500,                null for a blocked direct path
    //     "los_blocked": false,           optional; keeps d_los_m for geometry but drops the LOS ray
    //     "drop_constant_phases": false,  optional; zeroes every psi / phi after construction
    //     "interactors": [
    //       {"kind": "plain", "geometry": "two_ray", "d1_m": 500},
    //       {"kind": "ris", "geometry": "angled", "d2_m": 500, "alpha_rad": 1.0471975511965976},
    //       {"kind": "ris", "alpha_rad": 0.3, "d_tilde_m": 2400.5, "psi_rad": 1.2, "doppler_hz": 95.5}
    //     ],
    //     "random": {"bs": [-1000, 0], "ms": [0, 0], "rect": [200, 800, -300, 300],
    //                "reflectors": 10, "ris": 7, "seed": 42}
    //   }
    //
    // Explicit interactors ("geometry" absent or "explicit") derive psi_rad and doppler_hz when
    // omitted. Randomly placed reflectors from "random" are appended after the listed ones.
    // Other top-level keys ("grid", "imperfections", "strategy", "seed") are ignored here.
    Scenario scenario_from_json(const nlohmann::json &doc);

    // Fully resolved explicit form; scenario_from_json(scenario_to_json(s)) reproduces s exactly.
    nlohmann::json scenario_to_json(const Scenario &scenario);
}

#endif
