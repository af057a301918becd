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

#ifndef RISFADE_GEOMETRY_HPP
#define RISFADE_GEOMETRY_HPP

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace risfade
{
    inline constexpr double speed_of_light = 2.99792458e8; // m/s
    inline constexpr double pi = std::numbers::pi;
    inline constexpr double two_pi = 2.0 * std::numbers::pi;

    // Reduce an angle to [0, 2*pi)
    double wrap_phase(double rad);

    struct CarrierConfig
    {
        double carrier_frequency = 0.0; // Hz
        double wavelength = 0.0;        // m

        // lambda = c / f_c
        static CarrierConfig from_frequency(double carrier_hz);

        // Wavelength pinned independently of c (presets use lambda = 0.1 m at 3 GHz)
        static CarrierConfig pinned(double carrier_hz, double wavelength_m);
    };

    struct MobileConfig
    {
        double speed = 0.0;       // m/s
        double max_doppler = 0.0; // Hz, speed / wavelength

        static MobileConfig make(double speed_mps, const CarrierConfig &carrier);
    };

    enum class InteractorKind
    {
        PlainIO,
        RIS
    };

    const char *to_string(InteractorKind kind);
    InteractorKind interactor_kind_from_string(const std::string &name);

    // One reflector seen by the mobile. Rays are treated as parallel over the whole route, so the
    // reflected path shrinks by V*t*cos(arrival_angle) and the ray carries Doppler f_D*cos(arrival_angle).
    struct Interactor
    {
        InteractorKind kind = InteractorKind::PlainIO;
        double arrival_angle = 0.0;      // rad, angle between the route and the incoming ray
        double initial_radio_path = 0.0; // m, BS -> reflector -> MS at t = 0
        double constant_phase = 0.0;     // rad in [0, 2*pi), 2*pi*d/lambda
        double doppler = 0.0;            // Hz

        // Fixed -1 for plain reflectors; RIS reflection is supplied by a phase plan
        static constexpr double plain_reflection = -1.0;

        bool is_ris() const { return kind == InteractorKind::RIS; }
    };

    // Builds an interactor from arrival angle and radio path, deriving Doppler and constant phase.
    Interactor make_interactor(InteractorKind kind, double arrival_angle, double initial_radio_path,
                               const CarrierConfig &carrier, const MobileConfig &mobile);

    // Reflector straight ahead of the mobile on the BS-MS line, d1 beyond the MS.
    Interactor derive_two_ray_interactor(double d_los, double d1, const CarrierConfig &carrier,
                                         const MobileConfig &mobile,
                                         InteractorKind kind = InteractorKind::PlainIO);

    // Reflector at horizontal distance d2 whose ray reaches the mobile at angle alpha to the route.
    Interactor derive_angled_interactor(double d_los, double d2, double alpha, const CarrierConfig &carrier,
                                        const MobileConfig &mobile,
                                        InteractorKind kind = InteractorKind::PlainIO);

    struct LosLink
    {
        double distance = 0.0; // m
    };

    struct Scenario
    {
        CarrierConfig carrier;
        MobileConfig mobile;
        std::optional<LosLink> los;
        std::vector<Interactor> interactors;

        std::size_t ris_count() const;
        std::size_t plain_count() const;
        std::vector<std::size_t> ris_indices() const;   // positions in `interactors`, in list order
        std::vector<std::size_t> plain_indices() const; // positions in `interactors`, in list order

        // Throws DomainError / ContractError when an invariant is broken
        void validate() const;
    };

    // Copy with every constant phase set to zero (the "integer multiple of 2*pi" simplification)
    Scenario without_constant_phases(Scenario scenario);

    // Copy with the direct path removed
    Scenario without_los(Scenario scenario);

    struct SamplingGrid
    {
        std::size_t sample_count = 0;
        double sample_interval = 0.0; // s
        std::size_t fft_size = 0;

        double time(std::size_t k) const { return static_cast<double>(k) * sample_interval; }
        double sampling_rate() const { return 1.0 / sample_interval; }
        void validate() const;
    };

    // Grid covering `route_wavelengths` of travel sampled every lambda/`samples_per_wavelength`.
    SamplingGrid route_grid(const CarrierConfig &carrier, const MobileConfig &mobile, double route_wavelengths,
                            double samples_per_wavelength, std::size_t fft_size);

    struct Point2
    {
        double x = 0.0;
        double y = 0.0;
    };

    struct Rect
    {
        double x_min = 0.0, x_max = 0.0;
        double y_min = 0.0, y_max = 0.0;
    };

    inline constexpr const char *random_generator_name = "mt19937_64";

    // Uniform double in [0, 1) from the top 53 bits of a 64-bit draw. Used everywhere a seeded
    // uniform is needed so results do not depend on the standard library's distributions.
    template <typename Engine>
    double unit_uniform(Engine &engine)
    {
        return static_cast<double>(engine() >> 11) * 0x1.0p-53;
    }

    // Places R reflectors uniformly in `rect`; the first N are RIS. The mobile travels along +x from
    // `ms`, the LOS distance is |bs - ms|.
    Scenario random_scenario(Point2 bs, Point2 ms, const Rect &rect, std::size_t reflector_count,
                             std::size_t ris_count, std::uint64_t seed, const CarrierConfig &carrier,
                             const MobileConfig &mobile);
}

#endif
