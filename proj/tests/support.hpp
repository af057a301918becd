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

// Shared fixtures and independent oracles for the test binaries.

#ifndef RISFADE_TESTS_SUPPORT_HPP
#define RISFADE_TESTS_SUPPORT_HPP

#include "risfade/control.hpp"
#include "risfade/envelope.hpp"
#include "risfade/geometry.hpp"
#include "risfade/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace testsupport
{
    using risfade::cplx;

    inline constexpr double lambda = 0.1;
    using risfade::pi;

    inline risfade::CarrierConfig carrier()
    {
        return risfade::CarrierConfig::pinned(3e9, lambda);
    }

    inline risfade::MobileConfig mobile(double speed = 10.0)
    {
        return risfade::MobileConfig::make(speed, carrier());
    }

    // LOS plus one reflector d1 beyond the mobile, constant phases dropped
    inline risfade::Scenario two_ray(double d_los, double d1, risfade::InteractorKind kind, double speed = 10.0)
    {
        risfade::Scenario s;
        s.carrier = carrier();
        s.mobile = mobile(speed);
        s.los = risfade::LosLink{d_los};
        s.interactors.push_back(risfade::derive_two_ray_interactor(d_los, d1, s.carrier, s.mobile, kind));
        return risfade::without_constant_phases(s);
    }

    // Direct path d_LOS = 1000, reflector 1 at d1 = 1000 (boresight), reflector 2 at d2 = 500, 60 degrees
    inline risfade::Scenario two_reflector(risfade::InteractorKind k1, risfade::InteractorKind k2)
    {
        risfade::Scenario s;
        s.carrier = carrier();
        s.mobile = mobile();
        s.los = risfade::LosLink{1000.0};
        s.interactors.push_back(risfade::derive_two_ray_interactor(1000.0, 1000.0, s.carrier, s.mobile, k1));
        s.interactors.push_back(risfade::derive_angled_interactor(1000.0, 500.0, pi / 3.0, s.carrier, s.mobile, k2));
        return s;
    }

    inline risfade::Scenario scattered(std::size_t ris, std::uint64_t seed, bool los = true, std::size_t total = 10)
    {
        auto s = risfade::random_scenario({-1000.0, 0.0}, {0.0, 0.0}, {200.0, 800.0, -300.0, 300.0}, total, ris,
                                          seed, carrier(), mobile());
        return los ? s : risfade::without_los(s);
    }

    inline risfade::SamplingGrid short_grid()
    {
        return {192, lambda / (32.0 * 10.0), 256};
    }

    inline risfade::SamplingGrid long_grid()
    {
        return {960, lambda / (32.0 * 10.0), 1024};
    }

    // Direct transcription of the received-envelope formula, written without the library's helpers
    inline cplx oracle_sample(const risfade::Scenario &s, const std::vector<double> &theta,
                              const std::vector<double> &amp, double t)
    {
        const double f_d = s.mobile.speed / s.carrier.wavelength;
        cplx acc{0.0, 0.0};
        if (s.los)
            acc += std::polar(1.0 / s.los->distance, -2.0 * pi * f_d * t);
        std::size_t r = 0;
        for (const auto &io : s.interactors)
        {
            const double base = 2.0 * pi * io.doppler * t - io.constant_phase;
            if (io.kind == risfade::InteractorKind::RIS)
            {
                acc += std::polar(amp[r] / io.initial_radio_path, base + theta[r]);
                ++r;
            }
            else
                acc -= std::polar(1.0 / io.initial_radio_path, base);
        }
        return acc * (s.carrier.wavelength / (4.0 * pi));
    }

    // O(N^2) DFT, zero-padded, bins shifted so 0 Hz sits at N/2
    inline std::vector<cplx> naive_dft_shifted(const std::vector<cplx> &x, std::size_t n)
    {
        std::vector<cplx> out(n);
        for (std::size_t k = 0; k < n; ++k)
        {
            cplx acc{0.0, 0.0};
            for (std::size_t m = 0; m < x.size(); ++m)
            {
                const double ang = -2.0 * pi * static_cast<double>((k * m) % n) / static_cast<double>(n);
                acc += x[m] * cplx(std::cos(ang), std::sin(ang));
            }
            out[(k + n / 2) % n] = acc;
        }
        return out;
    }

    inline double rel_err(double a, double b)
    {
        return std::abs(a - b) / std::max(std::abs(b), 1e-300);
    }

    inline double max_of(const std::vector<double> &v)
    {
        return *std::max_element(v.begin(), v.end());
    }

    inline double min_of(const std::vector<double> &v)
    {
        return *std::min_element(v.begin(), v.end());
    }

    // Random plan with every RIS amplitude in (0, 1]
    inline risfade::PhasePlan random_plan(std::size_t ris, std::size_t samples, std::mt19937_64 &rng)
    {
        risfade::PhasePlan p(ris, samples);
        std::uniform_real_distribution<double> u(0.0, 2.0 * pi);
        std::uniform_real_distribution<double> a(0.05, 1.0);
        for (auto &row : p.phases)
            for (auto &v : row)
                v = u(rng);
        for (auto &v : p.amplitude)
            v = a(rng);
        return p;
    }
}

#endif
