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

#ifndef RISFADE_ENVELOPE_HPP
#define RISFADE_ENVELOPE_HPP

#include "risfade/geometry.hpp"

#include <complex>
#include <iosfwd>
#include <span>
#include <vector>

namespace risfade
{
    using cplx = std::complex<double>;

    // Reflection phases for every RIS-kind interactor (in scenario list order) at every grid sample,
    // plus one field amplitude per RIS.
    struct PhasePlan
    {
        std::vector<std::vector<double>> phases; // [ris][sample], rad
        std::vector<double> amplitude;           // [ris], in (0, 1]

        PhasePlan() = default;
        PhasePlan(std::size_t ris_count, std::size_t sample_count, double phase = 0.0);

        std::size_t ris_count() const { return phases.size(); }
        std::size_t sample_count() const { return phases.empty() ? 0 : phases.front().size(); }

        // Phases of all RIS at sample k
        std::vector<double> at(std::size_t k) const;

        // Throws ContractError unless the plan covers `ris_count` RIS for `sample_count` samples
        void check_covers(std::size_t ris_count, std::size_t sample_count) const;
    };

    struct EnvelopeTrace
    {
        std::vector<cplx> samples;
        SamplingGrid grid;
        double t0 = 0.0; // s

        double time(std::size_t k) const { return t0 + grid.time(k); }
        std::vector<double> magnitudes() const;
    };

    // 10*log10(|r|); the magnitude-in-dB convention used throughout
    double magnitude_db(double magnitude);

    // 10*log10(|r|^2)
    double power_db(double magnitude);

    // One received sample at time t. `ris_phases` and `ris_amplitudes` are indexed by RIS ordinal.
    cplx envelope_sample(const Scenario &scenario, std::span<const double> ris_phases,
                         std::span<const double> ris_amplitudes, double t);

    // Received complex envelope over the grid:
    //   r(t) = lambda/(4 pi) [ e^{-j 2 pi f_D t}/d_LOS
    //                          + sum_RIS   a_i e^{j(2 pi f_i t - psi_i + theta_i(t))} / d_i
    //                          - sum_plain     e^{j(2 pi f_k t - phi_k)} / d_k ]
    // with the LOS term present only when the scenario has a direct path.
    EnvelopeTrace synthesize(const Scenario &scenario, const PhasePlan &plan, const SamplingGrid &grid);

    // |r(t)| of the two-ray link without RIS, constant phases dropped
    double two_ray_magnitude_closed_form(double d_los, double d1, double max_doppler, double wavelength, double t);

    struct MagnitudeBounds
    {
        double max = 0.0; // co-phased rays
        double min = 0.0; // out-phased rays
    };

    MagnitudeBounds max_min_magnitude(double d_los, double d1, double wavelength);

    // |r| of the two-ray RIS link when the phase aligned at t1 is held until t1 + delta_t
    double stale_phase_magnitude(double d_los, double d1, double max_doppler, double wavelength, double delta_t);

    // Surface built from individual scattering elements mounted at the reflector of a two-ray link.
    // Elements sit on a square lambda/2 grid (row-major fill when the count is not a perfect square),
    // facing the incident ray, centered d1 ahead of the mobile.
    struct ElementWiseRis
    {
        std::size_t element_count = 1;
        double element_gain = 1.0;               // G_e
        std::vector<std::vector<double>> phases; // [element][sample], rad; empty means all zero

        // (y, z) offset of element n in the surface plane, m
        std::pair<double, double> element_offset(std::size_t n, double wavelength) const;

        // BS -> element n -> MS path length when the mobile has travelled V*t
        double element_path(std::size_t n, double d_los, double d1, double wavelength, double travelled) const;

        // theta_n(t) = 2 pi (d_{R_n}(t) - d_LOS(t)) / lambda, every element co-phased with the direct ray
        void align_to_los(double d_los, double d1, const CarrierConfig &carrier, const MobileConfig &mobile,
                          const SamplingGrid &grid);
    };

    // Two-ray link whose reflector is the element-wise surface above; throws DomainError if the
    // mobile reaches the surface within the grid.
    EnvelopeTrace element_wise_synthesize(double d_los, double d1, const CarrierConfig &carrier,
                                          const MobileConfig &mobile, const ElementWiseRis &ris,
                                          const SamplingGrid &grid);

    // Columns t_s,re,im,mag,mag_db; re/im with 17 significant digits
    void write_trace_csv(std::ostream &os, const EnvelopeTrace &trace);
}

#endif
