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

#include "risfade/envelope.hpp"
#include "risfade/errors.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace risfade
{
    PhasePlan::PhasePlan(std::size_t ris_count, std::size_t sample_count, double phase)
        : phases(ris_count, std::vector<double>(sample_count, phase)), amplitude(ris_count, 1.0)
    {
    }

    std::vector<double> PhasePlan::at(std::size_t k) const
    {
        std::vector<double> out(phases.size());
        for (std::size_t i = 0; i < phases.size(); ++i)
            out[i] = phases[i][k];
        return out;
    }

    void PhasePlan::check_covers(std::size_t ris, std::size_t samples) const
    {
        if (phases.size() != ris || amplitude.size() != ris)
            throw ContractError("phase plan covers " + std::to_string(phases.size()) + " RIS, scenario has " +
                                std::to_string(ris));
        for (const auto &row : phases)
            if (row.size() != samples)
                throw ContractError("phase plan length " + std::to_string(row.size()) + " does not match grid of " +
                                    std::to_string(samples) + " samples");
        for (double a : amplitude)
            if (!(a > 0.0) || !(a <= 1.0))
                throw ContractError("RIS amplitude must lie in (0, 1]");
    }

    std::vector<double> EnvelopeTrace::magnitudes() const
    {
        std::vector<double> out(samples.size());
        for (std::size_t k = 0; k < samples.size(); ++k)
            out[k] = std::abs(samples[k]);
        return out;
    }

    double magnitude_db(double magnitude)
    {
        return 10.0 * std::log10(magnitude);
    }

    double power_db(double magnitude)
    {
        return 20.0 * std::log10(magnitude);
    }

    static inline cplx phasor(double phase)
    {
        return {std::cos(phase), std::sin(phase)};
    }

    cplx envelope_sample(const Scenario &scenario, std::span<const double> ris_phases,
                         std::span<const double> ris_amplitudes, double t)
    {
        cplx acc{0.0, 0.0};
        if (scenario.los)
            acc += phasor(-two_pi * scenario.mobile.max_doppler * t) / scenario.los->distance;

        std::size_t ris = 0;
        for (const auto &io : scenario.interactors)
        {
            const double travel = two_pi * io.doppler * t - io.constant_phase;
            if (io.is_ris())
            {
                acc += ris_amplitudes[ris] * phasor(travel + ris_phases[ris]) / io.initial_radio_path;
                ++ris;
            }
            else
                acc += Interactor::plain_reflection * phasor(travel) / io.initial_radio_path;
        }
        return scenario.carrier.wavelength / (4.0 * pi) * acc;
    }

    EnvelopeTrace synthesize(const Scenario &scenario, const PhasePlan &plan, const SamplingGrid &grid)
    {
        scenario.validate();
        grid.validate();
        plan.check_covers(scenario.ris_count(), grid.sample_count);

        EnvelopeTrace trace;
        trace.grid = grid;
        trace.samples.resize(grid.sample_count);
        std::vector<double> theta(plan.ris_count());
        for (std::size_t k = 0; k < grid.sample_count; ++k)
        {
            for (std::size_t i = 0; i < theta.size(); ++i)
                theta[i] = plan.phases[i][k];
            trace.samples[k] = envelope_sample(scenario, theta, plan.amplitude, grid.time(k));
        }
        return trace;
    }

    double two_ray_magnitude_closed_form(double d_los, double d1, double max_doppler, double wavelength, double t)
    {
        if (!(d_los > 0.0) || !(d1 > 0.0))
            throw DomainError("two-ray distances must be positive");
        const double d_r = d_los + 2.0 * d1;
        const double inner = 1.0 / (d_los * d_los) + 1.0 / (d_r * d_r) -
                             2.0 * std::cos(4.0 * pi * max_doppler * t) / (d_los * d_r);
        return wavelength / (4.0 * pi) * std::sqrt(std::max(inner, 0.0));
    }

    MagnitudeBounds max_min_magnitude(double d_los, double d1, double wavelength)
    {
        if (!(d_los > 0.0) || !(d1 > 0.0))
            throw DomainError("two-ray distances must be positive");
        const double scale = wavelength / (4.0 * pi);
        const double d_r = d_los + 2.0 * d1;
        return {scale * (1.0 / d_los + 1.0 / d_r), scale * (1.0 / d_los - 1.0 / d_r)};
    }

    double stale_phase_magnitude(double d_los, double d1, double max_doppler, double wavelength, double delta_t)
    {
        if (!(d_los > 0.0) || !(d1 > 0.0))
            throw DomainError("two-ray distances must be positive");
        if (!(delta_t >= 0.0))
            throw DomainError("hold offset must be non-negative");
        const double d_r = d_los + 2.0 * d1;
        const double inner = 1.0 / (d_los * d_los) + 1.0 / (d_r * d_r) +
                             2.0 * std::cos(4.0 * pi * max_doppler * delta_t) / (d_los * d_r);
        return wavelength / (4.0 * pi) * std::sqrt(std::max(inner, 0.0));
    }

    std::pair<double, double> ElementWiseRis::element_offset(std::size_t n, double wavelength) const
    {
        const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(element_count))));
        const std::size_t rows = (element_count + side - 1) / side;
        const double spacing = wavelength / 2.0;
        const double col = static_cast<double>(n % side) - 0.5 * static_cast<double>(side - 1);
        const double row = static_cast<double>(n / side) - 0.5 * static_cast<double>(rows - 1);
        return {col * spacing, row * spacing};
    }

    double ElementWiseRis::element_path(std::size_t n, double d_los, double d1, double wavelength,
                                        double travelled) const
    {
        const auto [y, z] = element_offset(n, wavelength);
        const double lateral = y * y + z * z;
        const double to_bs = d_los + d1;
        const double to_ms = d1 - travelled;
        return std::sqrt(to_bs * to_bs + lateral) + std::sqrt(to_ms * to_ms + lateral);
    }

    void ElementWiseRis::align_to_los(double d_los, double d1, const CarrierConfig &carrier,
                                      const MobileConfig &mobile, const SamplingGrid &grid)
    {
        phases.assign(element_count, std::vector<double>(grid.sample_count));
        for (std::size_t k = 0; k < grid.sample_count; ++k)
        {
            const double travelled = mobile.speed * grid.time(k);
            const double los_path = d_los + travelled;
            for (std::size_t n = 0; n < element_count; ++n)
            {
                const double path = element_path(n, d_los, d1, carrier.wavelength, travelled);
                phases[n][k] = wrap_phase(two_pi * (path - los_path) / carrier.wavelength);
            }
        }
    }

    EnvelopeTrace element_wise_synthesize(double d_los, double d1, const CarrierConfig &carrier,
                                          const MobileConfig &mobile, const ElementWiseRis &ris,
                                          const SamplingGrid &grid)
    {
        grid.validate();
        if (!(d_los > 0.0) || !(d1 > 0.0))
            throw DomainError("two-ray distances must be positive");
        if (ris.element_count < 1 || !(ris.element_gain > 0.0))
            throw DomainError("element-wise RIS needs at least one element and positive gain");
        if (!ris.phases.empty())
        {
            if (ris.phases.size() != ris.element_count)
                throw ContractError("element phase table does not match element count");
            for (const auto &row : ris.phases)
                if (row.size() != grid.sample_count)
                    throw ContractError("element phase table does not cover the grid");
        }
        const double last_travel = mobile.speed * grid.time(grid.sample_count - 1);
        if (!(d1 - last_travel > 0.0))
            throw DomainError("mobile reaches the surface within the grid");

        const double lambda = carrier.wavelength;
        const double los_amp = lambda / (4.0 * pi * d_los);
        const double elem_scale = lambda * lambda * ris.element_gain / ((4.0 * pi) * (4.0 * pi) * (d_los + d1));

        EnvelopeTrace trace;
        trace.grid = grid;
        trace.samples.resize(grid.sample_count);
        for (std::size_t k = 0; k < grid.sample_count; ++k)
        {
            const double travelled = mobile.speed * grid.time(k);
            cplx r = los_amp * phasor(-two_pi * (d_los + travelled) / lambda);
            const double elem_amp = elem_scale / (d1 - travelled);
            for (std::size_t n = 0; n < ris.element_count; ++n)
            {
                const double theta = ris.phases.empty() ? 0.0 : ris.phases[n][k];
                const double path = ris.element_path(n, d_los, d1, lambda, travelled);
                r += elem_amp * phasor(theta - two_pi * path / lambda);
            }
            trace.samples[k] = r;
        }
        return trace;
    }

    void write_trace_csv(std::ostream &os, const EnvelopeTrace &trace)
    {
        os << "t_s,re,im,mag,mag_db\n";
        char line[160];
        for (std::size_t k = 0; k < trace.samples.size(); ++k)
        {
            const double mag = std::abs(trace.samples[k]);
            std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g\n", trace.time(k),
                          trace.samples[k].real(), trace.samples[k].imag(), mag, magnitude_db(mag));
            os << line;
        }
    }
}
