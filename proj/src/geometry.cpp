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

#include "risfade/geometry.hpp"
#include "risfade/errors.hpp"

#include <cmath>
#include <random>

namespace risfade
{
    double wrap_phase(double rad)
    {
        double w = std::fmod(rad, two_pi);
        if (w < 0.0)
            w += two_pi;
        if (w >= two_pi) // fmod of a tiny negative value can round up to 2*pi
            w = 0.0;
        return w;
    }

    CarrierConfig CarrierConfig::from_frequency(double carrier_hz)
    {
        if (!(carrier_hz > 0.0) || !std::isfinite(carrier_hz))
            throw DomainError("carrier frequency must be positive");
        return {carrier_hz, speed_of_light / carrier_hz};
    }

    CarrierConfig CarrierConfig::pinned(double carrier_hz, double wavelength_m)
    {
        if (!(carrier_hz > 0.0) || !std::isfinite(carrier_hz))
            throw DomainError("carrier frequency must be positive");
        if (!(wavelength_m > 0.0) || !std::isfinite(wavelength_m))
            throw DomainError("wavelength must be positive");
        return {carrier_hz, wavelength_m};
    }

    MobileConfig MobileConfig::make(double speed_mps, const CarrierConfig &carrier)
    {
        if (!(speed_mps >= 0.0) || !std::isfinite(speed_mps))
            throw DomainError("mobile speed must be non-negative");
        return {speed_mps, speed_mps / carrier.wavelength};
    }

    const char *to_string(InteractorKind kind)
    {
        return kind == InteractorKind::RIS ? "ris" : "plain";
    }

    InteractorKind interactor_kind_from_string(const std::string &name)
    {
        if (name == "ris" || name == "RIS")
            return InteractorKind::RIS;
        if (name == "plain" || name == "plain_io" || name == "PlainIO")
            return InteractorKind::PlainIO;
        throw ContractError("unknown interactor kind '" + name + "' (expected 'ris' or 'plain')");
    }

    Interactor make_interactor(InteractorKind kind, double arrival_angle, double initial_radio_path,
                               const CarrierConfig &carrier, const MobileConfig &mobile)
    {
        if (!(initial_radio_path > 0.0) || !std::isfinite(initial_radio_path))
            throw DomainError("initial radio path must be positive");
        if (!std::isfinite(arrival_angle))
            throw DomainError("arrival angle must be finite");

        Interactor io;
        io.kind = kind;
        io.arrival_angle = arrival_angle;
        io.initial_radio_path = initial_radio_path;
        io.constant_phase = wrap_phase(two_pi * initial_radio_path / carrier.wavelength);
        io.doppler = mobile.max_doppler * std::cos(arrival_angle);
        return io;
    }

    Interactor derive_two_ray_interactor(double d_los, double d1, const CarrierConfig &carrier,
                                         const MobileConfig &mobile, InteractorKind kind)
    {
        if (!(d_los > 0.0) || !(d1 > 0.0))
            throw DomainError("two-ray geometry needs d_los > 0 and d1 > 0");

        // Reflector ahead of the mobile: boresight arrival, Doppler +f_D
        return make_interactor(kind, 0.0, d_los + 2.0 * d1, carrier, mobile);
    }

    Interactor derive_angled_interactor(double d_los, double d2, double alpha, const CarrierConfig &carrier,
                                        const MobileConfig &mobile, InteractorKind kind)
    {
        if (!(d_los > 0.0) || !(d2 > 0.0))
            throw DomainError("angled geometry needs d_los > 0 and d2 > 0");
        if (!(alpha > 0.0) || !(alpha < pi / 2.0))
            throw DomainError("angled geometry needs 0 < alpha < pi/2");

        const double t = std::tan(alpha);
        const double bs_leg = std::sqrt(d2 * d2 * t * t + (d_los + d2) * (d_los + d2));
        const double ms_leg = d2 / std::cos(alpha);
        return make_interactor(kind, alpha, bs_leg + ms_leg, carrier, mobile);
    }

    std::size_t Scenario::ris_count() const
    {
        std::size_t n = 0;
        for (const auto &io : interactors)
            n += io.is_ris() ? 1 : 0;
        return n;
    }

    std::size_t Scenario::plain_count() const
    {
        return interactors.size() - ris_count();
    }

    std::vector<std::size_t> Scenario::ris_indices() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < interactors.size(); ++i)
            if (interactors[i].is_ris())
                out.push_back(i);
        return out;
    }

    std::vector<std::size_t> Scenario::plain_indices() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < interactors.size(); ++i)
            if (!interactors[i].is_ris())
                out.push_back(i);
        return out;
    }

    void Scenario::validate() const
    {
        if (!(carrier.carrier_frequency > 0.0) || !(carrier.wavelength > 0.0))
            throw DomainError("carrier frequency and wavelength must be positive");
        if (!(mobile.speed >= 0.0))
            throw DomainError("mobile speed must be non-negative");
        if (los && !(los->distance > 0.0))
            throw DomainError("LOS distance must be positive");
        if (!los && interactors.empty())
            throw ContractError("scenario needs a LOS link or at least one interactor");
        for (const auto &io : interactors)
        {
            if (!(io.initial_radio_path > 0.0) || !std::isfinite(io.initial_radio_path))
                throw DomainError("interactor radio path must be positive");
            if (!std::isfinite(io.doppler) || !std::isfinite(io.constant_phase))
                throw DomainError("interactor Doppler and phase must be finite");
        }
    }

    Scenario without_constant_phases(Scenario scenario)
    {
        for (auto &io : scenario.interactors)
            io.constant_phase = 0.0;
        return scenario;
    }

    Scenario without_los(Scenario scenario)
    {
        scenario.los.reset();
        return scenario;
    }

    void SamplingGrid::validate() const
    {
        if (sample_count < 1)
            throw ContractError("sampling grid needs at least one sample");
        if (!(sample_interval > 0.0) || !std::isfinite(sample_interval))
            throw DomainError("sample interval must be positive");
        if (fft_size != 0 && (fft_size & (fft_size - 1)) != 0)
            throw ContractError("FFT size must be a power of two");
    }

    SamplingGrid route_grid(const CarrierConfig &carrier, const MobileConfig &mobile, double route_wavelengths,
                            double samples_per_wavelength, std::size_t fft_size)
    {
        if (!(mobile.speed > 0.0))
            throw DomainError("route grid needs a moving receiver");
        SamplingGrid grid;
        grid.sample_interval = carrier.wavelength / (samples_per_wavelength * mobile.speed);
        grid.sample_count = static_cast<std::size_t>(std::llround(route_wavelengths * samples_per_wavelength));
        grid.fft_size = fft_size;
        grid.validate();
        return grid;
    }

    Scenario random_scenario(Point2 bs, Point2 ms, const Rect &rect, std::size_t reflector_count,
                             std::size_t ris_count, std::uint64_t seed, const CarrierConfig &carrier,
                             const MobileConfig &mobile)
    {
        if (ris_count > reflector_count)
            throw DomainError("RIS count exceeds reflector count");
        if (!(rect.x_max > rect.x_min) || !(rect.y_max > rect.y_min))
            throw DomainError("placement rectangle is degenerate");

        const double d_los = std::hypot(ms.x - bs.x, ms.y - bs.y);
        if (!(d_los > 0.0))
            throw DomainError("BS and MS coincide");

        Scenario s;
        s.carrier = carrier;
        s.mobile = mobile;
        s.los = LosLink{d_los};

        std::mt19937_64 engine(seed);
        for (std::size_t r = 0; r < reflector_count; ++r)
        {
            const double x = rect.x_min + (rect.x_max - rect.x_min) * unit_uniform(engine);
            const double y = rect.y_min + (rect.y_max - rect.y_min) * unit_uniform(engine);

            const double to_ms = std::hypot(x - ms.x, y - ms.y);
            const double to_bs = std::hypot(x - bs.x, y - bs.y);
            if (!(to_ms > 0.0))
                throw DomainError("reflector placed on the mobile");

            // Route direction is +x; angle between route and the ray towards the reflector
            const double alpha = std::atan2(std::abs(y - ms.y), x - ms.x);
            const auto kind = r < ris_count ? InteractorKind::RIS : InteractorKind::PlainIO;
            s.interactors.push_back(make_interactor(kind, alpha, to_bs + to_ms, carrier, mobile));
        }
        return s;
    }
}
