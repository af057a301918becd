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

#ifndef RISFADE_IMPERFECTIONS_HPP
#define RISFADE_IMPERFECTIONS_HPP

#include "risfade/envelope.hpp"

#include <cstdint>
#include <optional>

namespace risfade
{
    // Practical reflector: fixed amplitude loss and a limited reflection phase range.
    struct RealisticRisModel
    {
        double amplitude_db = -1.0;
        double phase_min = -150.0 * pi / 180.0; // rad
        double phase_max = 140.0 * pi / 180.0;  // rad

        void validate() const;
        double amplitude() const; // field amplitude 10^(dB/20)

        // Nearest achievable phase on the circle, returned in [0, 2*pi). Requests inside
        // [phase_min, phase_max] come back unchanged (up to the wrap); ties go to phase_max.
        double map_phase(double requested) const;
    };

    PhasePlan apply_realistic_ris(PhasePlan plan, const RealisticRisModel &model);

    // Controller-side Doppler estimation error, e ~ U[-U, U] per interactor.
    struct DopplerErrorModel
    {
        double bound_u = 0.0; // Hz
        std::uint64_t seed = 0;
    };

    // The controller's view of the scenario: every interactor's Doppler perturbed by an independent
    // draw, the LOS Doppler untouched. Envelope synthesis must keep using the true scenario.
    Scenario apply_doppler_error(const Scenario &truth, const DopplerErrorModel &model);

    // Zero-order hold: phases recomputed every `hold_samples` samples, or every `hold_interval` seconds.
    struct HoldModel
    {
        std::optional<std::size_t> hold_samples;
        std::optional<double> hold_interval; // s

        static HoldModel samples(std::size_t q);
        static HoldModel interval(double t_r);
    };

    struct HoldResolution
    {
        std::size_t samples = 1;
        bool rounded = false; // t_r was not an integer multiple of t_s and was rounded down
    };

    HoldResolution resolve_hold(const HoldModel &hold, const SamplingGrid &grid);

    PhasePlan apply_hold(PhasePlan plan, std::size_t hold_samples);

    // Largest reconfiguration interval that keeps the held two-ray link flat: 1 / (40 pi f_D)
    double hold_criterion(double max_doppler);
}

#endif
