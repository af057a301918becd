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

#include <sstream>

using nlohmann::json;

namespace risfade
{
    namespace
    {
        constexpr double carrier_hz = 3e9;
        constexpr double wavelength = 0.1; // pinned so f_D = V / lambda is exactly 100 Hz at 10 m/s
        constexpr double deg60 = pi / 3.0;

        json base_doc(double speed, std::optional<double> d_los, bool blocked = false)
        {
            json doc;
            doc["carrier_hz"] = carrier_hz;
            doc["wavelength_m"] = wavelength;
            doc["speed_mps"] = speed;
            doc["d_los_m"] = d_los ? json(*d_los) : json(nullptr);
            if (blocked)
                doc["los_blocked"] = true;
            doc["interactors"] = json::array();
            return doc;
        }

        // BS, MS and one reflector on a line; constant phases dropped
        json two_ray(double d_los, double d1, const char *kind, double speed = 10.0, bool blocked = false)
        {
            json doc = base_doc(speed, d_los, blocked);
            doc["interactors"].push_back({{"kind", kind}, {"geometry", "two_ray"}, {"d1_m", d1}});
            doc["drop_constant_phases"] = true;
            return doc;
        }

        // Direct path, reflector 1 ahead of the mobile, reflector 2 arriving at 60 degrees
        json two_reflector(const char *kind1, const char *kind2, bool blocked = false)
        {
            json doc = base_doc(10.0, 1000.0, blocked);
            doc["interactors"].push_back({{"kind", kind1}, {"geometry", "two_ray"}, {"d1_m", 1000.0}});
            doc["interactors"].push_back(
                {{"kind", kind2}, {"geometry", "angled"}, {"d2_m", 500.0}, {"alpha_rad", deg60}});
            return doc;
        }

        // Ten reflectors placed uniformly to the right of the mobile; the first `ris` carry a RIS.
        // The seed is filled from the run seed.
        json scattered(std::size_t ris, bool blocked = false)
        {
            json doc = base_doc(10.0, std::nullopt);
            if (blocked)
                doc["los_blocked"] = true;
            else
                doc.erase("d_los_m");
            doc["random"] = {{"bs", {-1000.0, 0.0}},
                             {"ms", {0.0, 0.0}},
                             {"rect", {200.0, 800.0, -300.0, 300.0}},
                             {"reflectors", 10},
                             {"ris", ris}};
            return doc;
        }

        SamplingGrid grid(std::size_t samples, double t_s, std::size_t fft)
        {
            return {samples, t_s, fft};
        }

        // 6 wavelengths at lambda/32, 10 m/s
        const SamplingGrid short_route = grid(192, 0.1 / 320.0, 256);
        // 30 wavelengths at lambda/32, 10 m/s
        const SamplingGrid long_route = grid(960, 0.1 / 320.0, 1024);
        // 3.125 us sampling for the high-mobility runs, 3 ms observation
        const SamplingGrid fast_route = grid(960, 3.125e-6, 1024);

        RunCase make_case(std::string label, json scenario, std::string strategy, SamplingGrid g)
        {
            RunCase c;
            c.label = std::move(label);
            c.scenario = std::move(scenario);
            c.strategy = std::move(strategy);
            c.grid = g;
            return c;
        }

        struct Split
        {
            const char *d_los_tag;
            double d_los;
            double d1;
        };

        const Split fig2_splits[] = {{"a", 1000.0, 1000.0}, {"b", 1250.0, 750.0}, {"c", 1500.0, 500.0}, {"d", 1750.0, 250.0}};

        std::vector<Preset> build()
        {
            std::vector<Preset> out;

            for (const auto &s : fig2_splits)
            {
                std::ostringstream desc;
                desc << "two-ray fade pattern, no RIS, d_LOS=" << s.d_los << " m, d1=" << s.d1
                     << " m, 6 lambda route, t_s=0.3125 ms, FFT 256";
                out.push_back({std::string("fig2-") + s.d_los_tag, "Fig. 2", desc.str(),
                               {make_case("", two_ray(s.d_los, s.d1, "plain"), "none", short_route)}});
            }

            out.push_back({"fig3", "Fig. 3",
                           "two-ray Doppler spectrum, no RIS, d_LOS=1500 m, d1=500 m, FFT 256, t_s=0.3125 ms",
                           {make_case("", two_ray(1500.0, 500.0, "plain"), "none", short_route)}});

            {
                Preset p{"fig4", "Fig. 4", "single RIS co-phased with the direct ray, four d_LOS/d1 splits", {}};
                for (const auto &s : fig2_splits)
                    p.cases.push_back(make_case(s.d_los_tag, two_ray(s.d_los, s.d1, "ris"), "align_los", short_route));
                out.push_back(std::move(p));
            }
            {
                Preset p{"fig5", "Fig. 5", "single RIS out-phased against the direct ray, four d_LOS/d1 splits", {}};
                for (const auto &s : fig2_splits)
                    p.cases.push_back(
                        make_case(s.d_los_tag, two_ray(s.d_los, s.d1, "ris"), "out_phase_los", short_route));
                out.push_back(std::move(p));
            }

            out.push_back({"fig6", "Fig. 6",
                           "Doppler synthesis by the RIS, target 200 Hz and 400 Hz, d_LOS=1500 m, d1=500 m",
                           {make_case("f200", two_ray(1500.0, 500.0, "ris"), "doppler_synth:200", short_route),
                            make_case("f400", two_ray(1500.0, 500.0, "ris"), "doppler_synth:400", short_route)}});

            out.push_back({"fig7", "Fig. 7", "random RIS phase every sample, d_LOS=1500 m, d1=500 m",
                           {make_case("", two_ray(1500.0, 500.0, "ris"), "random", short_route)}});

            out.push_back({"fig9", "Fig. 9", "blocked direct path, d_LOS=d1=1000 m: plain reflector vs Doppler-eliminating RIS",
                           {make_case("no-ris", two_ray(1000.0, 1000.0, "plain", 10.0, true), "none", short_route),
                            make_case("ris", two_ray(1000.0, 1000.0, "ris", 10.0, true), "nlos_eliminate",
                                      short_route)}});

            out.push_back({"fig11", "Fig. 11", "two plain reflectors (alpha=60 deg, d_LOS=d1=1000 m, d2=500 m), no RIS",
                           {make_case("", two_reflector("plain", "plain"), "none", short_route)}});

            out.push_back({"fig12", "Fig. 12", "RIS on reflector 1: align to LOS (m1), align to reflector 2 (m2), cancel reflector 2 (m3)",
                           {make_case("m1", two_reflector("ris", "plain"), "align_los", short_route),
                            make_case("m2", two_reflector("ris", "plain"), "align_io:0", short_route),
                            make_case("m3", two_reflector("ris", "plain"), "cancel_io:0", short_route)}});

            {
                RunCase c = make_case("", two_reflector("ris", "plain"), "optimal", short_route);
                c.surface_theta_points = 720;
                out.push_back({"fig13", "Fig. 13",
                               "|r| over RIS phase x time for the two-reflector link (surface.csv, 720 phases); "
                               "global maximum -48.69 dB",
                               {c}});
            }

            out.push_back({"fig14", "Fig. 14", "optimal single-RIS phase vs Method 1 and Method 3 (cancellation)",
                           {make_case("optimal", two_reflector("ris", "plain"), "optimal", short_route),
                            make_case("m1", two_reflector("ris", "plain"), "align_los", short_route),
                            make_case("m3", two_reflector("ris", "plain"), "cancel_io:0", short_route)}});

            out.push_back({"fig17-noris", "Fig. 17 (top)", "10 plain reflectors, no RIS, 30 lambda route, FFT 1024",
                           {make_case("", scattered(0), "none", long_route)}});
            out.push_back({"fig17-allris", "Fig. 17 (bottom)", "10 RIS aligned to the direct ray (Method 1)",
                           {make_case("", scattered(10), "align_los", long_route)}});

            const std::pair<const char *, std::size_t> los_splits[] = {{"fig18", 3}, {"fig19", 5}, {"fig20", 7}};
            for (const auto &[name, n] : los_splits)
            {
                std::ostringstream desc;
                desc << "N=" << n << ", M=" << 10 - n << " with direct path, Methods 1-3";
                out.push_back({name, std::string("Fig. ") + (name + 3), desc.str(),
                               {make_case("m1", scattered(n), "align_los", long_route),
                                make_case("m2", scattered(n), "perm_max", long_route),
                                make_case("m3", scattered(n), "perm_smooth", long_route)}});
            }

            const std::pair<const char *, std::size_t> nlos_splits[] = {{"fig21", 3}, {"fig22", 7}};
            for (const auto &[name, n] : nlos_splits)
            {
                std::ostringstream desc;
                desc << "N=" << n << ", M=" << 10 - n << " without direct path, Methods 1-3";
                out.push_back({name, std::string("Fig. ") + (name + 3), desc.str(),
                               {make_case("m1", scattered(n, true), "align_strongest", long_route),
                                make_case("m2", scattered(n, true), "perm_max", long_route),
                                make_case("m3", scattered(n, true), "perm_smooth", long_route)}});
            }

            {
                Preset p{"table1", "Table I",
                         "sweep (N,M) in {(3,7),(5,5),(7,3)} x Methods 1-3 with direct path; n_s=960, t_s=0.3125 ms",
                         {}};
                for (std::size_t n : {3u, 5u, 7u})
                {
                    const std::string tag = "n" + std::to_string(n) + "m" + std::to_string(10 - n) + "-";
                    p.cases.push_back(make_case(tag + "m1", scattered(n), "align_los", long_route));
                    p.cases.push_back(make_case(tag + "m2", scattered(n), "perm_max", long_route));
                    p.cases.push_back(make_case(tag + "m3", scattered(n), "perm_smooth", long_route));
                }
                out.push_back(std::move(p));
            }

            {
                Preset p{"fig23", "Fig. 23",
                         "perfect vs realistic RIS (-1 dB, phase in [-150, 140] deg): two-ray N=1,M=0 and two-reflector N=M=1",
                         {}};
                RunCase a = make_case("two-ray-p", two_ray(1500.0, 500.0, "ris"), "align_los", short_route);
                RunCase b = a;
                b.label = "two-ray-i";
                b.imperfections.hardware = RealisticRisModel{};
                RunCase c = make_case("two-reflector-p", two_reflector("ris", "plain"), "align_los", short_route);
                RunCase d = c;
                d.label = "two-reflector-i";
                d.imperfections.hardware = RealisticRisModel{};
                p.cases = {a, b, c, d};
                out.push_back(std::move(p));
            }

            {
                Preset p{"fig24", "Fig. 24", "N=7, M=3 with direct path under Doppler errors U in {0, 1, 4} Hz, Methods 1-3", {}};
                for (double u : {0.0, 1.0, 4.0})
                    for (const auto &[m, strat] : {std::pair{"m1", "align_los"}, std::pair{"m2", "perm_max"},
                                                   std::pair{"m3", "perm_smooth"}})
                    {
                        RunCase c = make_case("u" + std::to_string(static_cast<int>(u)) + "-" + m, scattered(7), strat,
                                              long_route);
                        c.imperfections.doppler_error = DopplerErrorModel{u, 2024};
                        p.cases.push_back(std::move(c));
                    }
                out.push_back(std::move(p));
            }

            {
                Preset p{"fig25a", "Fig. 25(a)",
                         "V=100 m/s, t_s=3.125 us, 3 lambda route: RIS phase held for Q in {1, 20, 50} samples, plus no-RIS benchmark",
                         {}};
                for (std::size_t q : {1u, 20u, 50u})
                {
                    RunCase c = make_case("q" + std::to_string(q), two_ray(1500.0, 500.0, "ris", 100.0), "align_los",
                                          fast_route);
                    c.imperfections.hold = HoldModel::samples(q);
                    p.cases.push_back(std::move(c));
                }
                p.cases.push_back(make_case("no-ris", two_ray(1500.0, 500.0, "plain", 100.0), "none", fast_route));
                out.push_back(std::move(p));
            }

            {
                Preset p{"fig25b", "Fig. 25(b)",
                         "t_r=12.5 us hold at f_D in {500, 2000, 4000} Hz (V = 50, 200, 400 m/s), t_s=3.125 us", {}};
                for (double v : {50.0, 200.0, 400.0})
                {
                    RunCase c = make_case("fd" + std::to_string(static_cast<int>(v / wavelength)),
                                          two_ray(1500.0, 500.0, "ris", v), "align_los", fast_route);
                    c.imperfections.hold = HoldModel::interval(12.5e-6);
                    p.cases.push_back(std::move(c));
                }
                out.push_back(std::move(p));
            }

            return out;
        }
    }

    const std::vector<Preset> &presets()
    {
        static const std::vector<Preset> table = build();
        return table;
    }

    const Preset *find_preset(const std::string &name)
    {
        for (const auto &p : presets())
            if (p.name == name)
                return &p;
        return nullptr;
    }

    std::vector<std::string> preset_names()
    {
        std::vector<std::string> out;
        for (const auto &p : presets())
            out.push_back(p.name);
        return out;
    }

    std::string list_presets()
    {
        std::ostringstream os;
        for (const auto &p : presets())
        {
            os << p.name << "  [" << p.figure << "]\n    " << p.description << "\n";
            for (const auto &c : p.cases)
            {
                os << "    - " << (c.label.empty() ? "(single)" : c.label) << ": strategy=" << c.strategy
                   << ", n_s=" << c.grid.sample_count << ", t_s=" << c.grid.sample_interval * 1e3
                   << " ms, FFT " << c.grid.fft_size;
                if (c.imperfections.hold && c.imperfections.hold->hold_samples)
                    os << ", Q=" << *c.imperfections.hold->hold_samples;
                if (c.imperfections.hold && c.imperfections.hold->hold_interval)
                    os << ", t_r=" << *c.imperfections.hold->hold_interval * 1e6 << " us";
                if (c.imperfections.doppler_error)
                    os << ", U=" << c.imperfections.doppler_error->bound_u << " Hz";
                if (c.imperfections.hardware)
                    os << ", realistic RIS";
                os << ", speed=" << c.scenario.value("speed_mps", 0.0) << " m/s\n";
            }
        }
        return os.str();
    }
}
