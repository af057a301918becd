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

#include "risfade/imperfections.hpp"
#include "risfade/errors.hpp"

#include <cmath>
#include <random>

namespace risfade
{
    void RealisticRisModel::validate() const
    {
        if (!(phase_min < phase_max))
            throw DomainError("realistic RIS needs phase_min < phase_max");
        if (!(phase_max - phase_min < two_pi))
            throw DomainError("realistic RIS phase range must be narrower than a full turn");
        if (!(amplitude_db <= 0.0))
            throw DomainError("realistic RIS amplitude must not exceed 0 dB");
    }

    double RealisticRisModel::amplitude() const
    {
        return std::pow(10.0, amplitude_db / 20.0);
    }

    double RealisticRisModel::map_phase(double requested) const
    {
        // Offset from phase_min, measured counter-clockwise
        const double offset = wrap_phase(requested - phase_min);
        const double span = phase_max - phase_min;
        if (offset <= span)
            return wrap_phase(requested);

        const double to_max = offset - span;
        const double to_min = two_pi - offset;
        return wrap_phase(to_max <= to_min ? phase_max : phase_min);
    }

    PhasePlan apply_realistic_ris(PhasePlan plan, const RealisticRisModel &model)
    {
        model.validate();
        const double amp = model.amplitude();
        for (auto &row : plan.phases)
            for (auto &theta : row)
                theta = model.map_phase(theta);
        for (auto &a : plan.amplitude)
            a = amp;
        return plan;
    }

    Scenario apply_doppler_error(const Scenario &truth, const DopplerErrorModel &model)
    {
        if (!(model.bound_u >= 0.0))
            throw DomainError("Doppler error bound must be non-negative");
        Scenario view = truth;
        std::mt19937_64 engine(model.seed);
        for (auto &io : view.interactors)
        {
            const double e = model.bound_u * (2.0 * unit_uniform(engine) - 1.0);
            io.doppler += e;
        }
        return view;
    }

    HoldModel HoldModel::samples(std::size_t q)
    {
        HoldModel h;
        h.hold_samples = q;
        return h;
    }

    HoldModel HoldModel::interval(double t_r)
    {
        HoldModel h;
        h.hold_interval = t_r;
        return h;
    }

    HoldResolution resolve_hold(const HoldModel &hold, const SamplingGrid &grid)
    {
        if (hold.hold_samples.has_value() == hold.hold_interval.has_value())
            throw ContractError("hold model needs exactly one of hold_samples or hold_interval");
        if (hold.hold_samples)
        {
            if (*hold.hold_samples < 1)
                throw DomainError("hold must span at least one sample");
            return {*hold.hold_samples, false};
        }

        const double t_r = *hold.hold_interval;
        if (!(t_r > 0.0))
            throw DomainError("hold interval must be positive");
        const double ratio = t_r / grid.sample_interval;
        const double nearest = std::round(ratio);
        HoldResolution out;
        if (std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, nearest))
            out.samples = static_cast<std::size_t>(nearest);
        else
        {
            out.samples = static_cast<std::size_t>(std::floor(ratio));
            out.rounded = true;
        }
        if (out.samples < 1)
            throw DomainError("hold interval is shorter than one sample");
        return out;
    }

    PhasePlan apply_hold(PhasePlan plan, std::size_t hold_samples)
    {
        if (hold_samples < 1)
            throw DomainError("hold must span at least one sample");
        for (auto &row : plan.phases)
            for (std::size_t k = 0; k < row.size(); ++k)
                if (k % hold_samples != 0)
                    row[k] = row[k - k % hold_samples];
        return plan;
    }

    double hold_criterion(double max_doppler)
    {
        if (!(max_doppler > 0.0))
            throw DomainError("hold criterion needs a positive Doppler shift");
        return 1.0 / (40.0 * pi * max_doppler);
    }
}
