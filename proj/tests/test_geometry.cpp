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

#include "support.hpp"

#include "risfade/errors.hpp"
#include "risfade/scenario_json.hpp"

#include <doctest.h>

using namespace risfade;
using namespace testsupport;

TEST_CASE("two-ray interactor: path and Doppler")
{
    const auto c = carrier();
    const auto m = mobile();
    const Interactor io = derive_two_ray_interactor(1500.0, 500.0, c, m);
    CHECK(io.initial_radio_path == doctest::Approx(2500.0).epsilon(1e-15));
    CHECK(io.doppler == doctest::Approx(100.0).epsilon(1e-15));
    CHECK(io.kind == InteractorKind::PlainIO);

    CHECK(derive_two_ray_interactor(1750.0, 250.0, c, m).initial_radio_path == doctest::Approx(2250.0));
    CHECK_THROWS_AS(derive_two_ray_interactor(1000.0, 0.0, c, m), DomainError);
    CHECK_THROWS_AS(derive_two_ray_interactor(-1.0, 10.0, c, m), DomainError);
}

TEST_CASE("angled interactor: path and Doppler")
{
    const auto c = carrier();
    const auto m = mobile();
    const double alpha = pi / 3.0;
    const Interactor io = derive_angled_interactor(1000.0, 500.0, alpha, c, m);
    // sqrt(d2^2 tan^2(a) + (d_los + d2)^2) + d2 / cos(a)
    const double expect = std::sqrt(500.0 * 500.0 * 3.0 + 1500.0 * 1500.0) + 1000.0;
    CHECK(io.initial_radio_path == doctest::Approx(expect).epsilon(1e-14));
    CHECK(io.initial_radio_path == doctest::Approx(2732.0508).epsilon(1e-8));
    CHECK(io.doppler == doctest::Approx(50.0).epsilon(1e-14));

    // Boresight limit approaches the two-ray geometry
    const Interactor near = derive_angled_interactor(1000.0, 500.0, 1e-7, c, m);
    CHECK(near.initial_radio_path == doctest::Approx(2000.0).epsilon(1e-9));
    CHECK(near.doppler == doctest::Approx(100.0).epsilon(1e-9));

    CHECK_THROWS_AS(derive_angled_interactor(1000.0, 500.0, 0.0, c, m), DomainError);
    CHECK_THROWS_AS(derive_angled_interactor(1000.0, 500.0, pi / 2.0, c, m), DomainError);
}

TEST_CASE("pinned carrier and route grid")
{
    const auto c = carrier();
    CHECK(c.wavelength == 0.1);
    CHECK(mobile().max_doppler == doctest::Approx(100.0).epsilon(1e-15));
    const auto from_c = CarrierConfig::from_frequency(3e9);
    CHECK(from_c.wavelength == doctest::Approx(speed_of_light / 3e9));

    const SamplingGrid g = route_grid(c, mobile(), 6.0, 32.0, 256);
    CHECK(g.sample_count == 192);
    CHECK(g.sample_interval == doctest::Approx(0.3125e-3).epsilon(1e-15));
    CHECK(g.sampling_rate() == doctest::Approx(3200.0));
    CHECK_THROWS_AS((SamplingGrid{10, 1e-3, 100}).validate(), ContractError);
    CHECK_THROWS_AS((SamplingGrid{0, 1e-3, 128}).validate(), ContractError);
    CHECK_THROWS_AS((SamplingGrid{10, -1e-3, 128}).validate(), DomainError);
}

TEST_CASE("random placement")
{
    const Scenario none = scattered(0, 42);
    CHECK(none.interactors.size() == 10);
    CHECK(none.ris_count() == 0);
    CHECK(scattered(10, 42).ris_count() == 10);

    const Scenario mixed = scattered(7, 42);
    CHECK(mixed.ris_count() == 7);
    CHECK(mixed.plain_count() == 3);
    for (std::size_t i = 0; i < 10; ++i)
        CHECK(mixed.interactors[i].is_ris() == (i < 7));
    CHECK(mixed.los->distance == doctest::Approx(1000.0));

    // Same positions regardless of how many of them carry a RIS
    for (std::size_t i = 0; i < 10; ++i)
        CHECK(mixed.interactors[i].initial_radio_path == none.interactors[i].initial_radio_path);

    const Scenario again = scattered(7, 42);
    for (std::size_t i = 0; i < 10; ++i)
    {
        CHECK(again.interactors[i].initial_radio_path == mixed.interactors[i].initial_radio_path);
        CHECK(again.interactors[i].arrival_angle == mixed.interactors[i].arrival_angle);
        CHECK(again.interactors[i].constant_phase == mixed.interactors[i].constant_phase);
    }
    CHECK(scattered(7, 43).interactors[0].initial_radio_path != mixed.interactors[0].initial_radio_path);
    CHECK_THROWS_AS(scattered(11, 1), DomainError);
}

TEST_CASE("geometry invariants over random placements")
{
    const auto c = carrier();
    for (std::uint64_t seed = 0; seed < 200; ++seed)
    {
        const Scenario s = scattered(5, seed);
        for (const auto &io : s.interactors)
        {
            CHECK(std::abs(io.doppler) <= s.mobile.max_doppler * (1.0 + 1e-15));
            CHECK(io.initial_radio_path >= s.los->distance);
            const double psi = std::fmod(2.0 * pi * io.initial_radio_path / c.wavelength, 2.0 * pi);
            const double diff = std::remainder(psi - io.constant_phase, 2.0 * pi);
            CHECK(std::abs(diff) < 1e-9);
        }
    }
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> d(1.0, 5000.0), a(1e-3, pi / 2.0 - 1e-3);
    for (int i = 0; i < 500; ++i)
    {
        const double dl = d(rng), d2 = d(rng);
        const Interactor io = derive_angled_interactor(dl, d2, a(rng), c, mobile());
        CHECK(io.initial_radio_path >= dl);
        CHECK(std::abs(io.doppler) <= 100.0 * (1.0 + 1e-15));
    }
}

TEST_CASE("scenario JSON: derived geometries")
{
    const nlohmann::json doc = {
        {"carrier_hz", 3e9},
        {"wavelength_m", 0.1},
        {"speed_mps", 10.0},
        {"d_los_m", 1000.0},
        {"interactors",
         {{{"kind", "ris"}, {"geometry", "two_ray"}, {"d1_m", 1000.0}},
          {{"kind", "plain"}, {"geometry", "angled"}, {"d2_m", 500.0}, {"alpha_rad", pi / 3.0}}}}};
    const Scenario s = scenario_from_json(doc);
    const Scenario ref = two_reflector(InteractorKind::RIS, InteractorKind::PlainIO);
    REQUIRE(s.interactors.size() == 2);
    for (std::size_t i = 0; i < 2; ++i)
    {
        CHECK(s.interactors[i].initial_radio_path == ref.interactors[i].initial_radio_path);
        CHECK(s.interactors[i].doppler == ref.interactors[i].doppler);
        CHECK(s.interactors[i].kind == ref.interactors[i].kind);
    }

    nlohmann::json blocked = doc;
    blocked["los_blocked"] = true;
    CHECK_FALSE(scenario_from_json(blocked).los.has_value());

    nlohmann::json bad = doc;
    bad["interactors"][0]["geometry"] = "spiral";
    CHECK_THROWS_AS(scenario_from_json(bad), ContractError);
    bad = doc;
    bad["interactors"][0]["kind"] = "mirror";
    CHECK_THROWS_AS(scenario_from_json(bad), ContractError);
}

TEST_CASE("scenario JSON round-trips exactly")
{
    for (std::uint64_t seed = 0; seed < 50; ++seed)
    {
        const Scenario s = scattered(seed % 11, seed, seed % 2 == 0);
        const Scenario back = scenario_from_json(scenario_to_json(s));
        CHECK(back.carrier.wavelength == s.carrier.wavelength);
        CHECK(back.carrier.carrier_frequency == s.carrier.carrier_frequency);
        CHECK(back.mobile.speed == s.mobile.speed);
        CHECK(back.mobile.max_doppler == s.mobile.max_doppler);
        CHECK(back.los.has_value() == s.los.has_value());
        if (s.los)
            CHECK(back.los->distance == s.los->distance);
        REQUIRE(back.interactors.size() == s.interactors.size());
        for (std::size_t i = 0; i < s.interactors.size(); ++i)
        {
            const auto &a = back.interactors[i], &b = s.interactors[i];
            CHECK(a.kind == b.kind);
            CHECK(a.arrival_angle == b.arrival_angle);
            CHECK(a.initial_radio_path == b.initial_radio_path);
            CHECK(a.constant_phase == b.constant_phase);
            CHECK(a.doppler == b.doppler);
        }
        CHECK(scenario_to_json(back) == scenario_to_json(s));
    }
}
