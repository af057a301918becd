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

#include "risfade/spectrum.hpp"
#include "risfade/errors.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>

namespace risfade
{
    namespace
    {
        struct FftwFree
        {
            void operator()(void *p) const { fftw_free(p); }
        };

        struct PlanDestroy
        {
            void operator()(fftw_plan p) const { fftw_destroy_plan(p); }
        };

        using fftw_buffer = std::unique_ptr<fftw_complex[], FftwFree>;
        using fftw_plan_ptr = std::unique_ptr<std::remove_pointer_t<fftw_plan>, PlanDestroy>;
    }

    double DopplerSpectrum::energy() const
    {
        double acc = 0.0;
        for (double m : raw_magnitude)
            acc += m * m;
        return raw_magnitude.empty() ? 0.0 : acc / static_cast<double>(raw_magnitude.size());
    }

    std::size_t DopplerSpectrum::peak_bin() const
    {
        return static_cast<std::size_t>(std::max_element(raw_magnitude.begin(), raw_magnitude.end()) -
                                        raw_magnitude.begin());
    }

    std::vector<std::size_t> DopplerSpectrum::dominant_bins(double relative_floor) const
    {
        const std::size_t n = normalized_magnitude.size();
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < n; ++k)
        {
            const double v = normalized_magnitude[k];
            const double left = k > 0 ? normalized_magnitude[k - 1] : -1.0;
            const double right = k + 1 < n ? normalized_magnitude[k + 1] : -1.0;
            if (v >= relative_floor && v >= left && v > right)
                out.push_back(k);
        }
        std::stable_sort(out.begin(), out.end(),
                         [&](std::size_t a, std::size_t b) { return normalized_magnitude[a] > normalized_magnitude[b]; });
        return out;
    }

    DopplerSpectrum doppler_spectrum(const EnvelopeTrace &trace, std::size_t fft_size, bool allow_truncation)
    {
        if (trace.samples.empty())
            throw ContractError("cannot take the spectrum of an empty trace");
        if (fft_size == 0 || (fft_size & (fft_size - 1)) != 0)
            throw ContractError("FFT size must be a power of two");

        DopplerSpectrum out;
        std::size_t used = trace.samples.size();
        if (used > fft_size)
        {
            if (!allow_truncation)
                throw ContractError("trace of " + std::to_string(used) + " samples exceeds FFT size " +
                                    std::to_string(fft_size));
            used = fft_size;
            out.truncated = true;
        }

        const int n = static_cast<int>(fft_size);
        fftw_buffer in(fftw_alloc_complex(fft_size));
        fftw_buffer spec(fftw_alloc_complex(fft_size));
        // FFTW_ESTIMATE picks the plan without timing runs, so the result is deterministic
        fftw_plan_ptr plan(fftw_plan_dft_1d(n, in.get(), spec.get(), FFTW_FORWARD, FFTW_ESTIMATE));

        for (std::size_t k = 0; k < fft_size; ++k)
        {
            const cplx v = k < used ? trace.samples[k] : cplx{};
            in[k][0] = v.real();
            in[k][1] = v.imag();
        }
        fftw_execute(plan.get());

        const double fs = trace.grid.sampling_rate();
        const std::size_t half = fft_size / 2;
        out.frequencies.resize(fft_size);
        out.raw_magnitude.resize(fft_size);
        for (std::size_t k = 0; k < fft_size; ++k)
        {
            const std::size_t src = (k + half) % fft_size; // fftshift
            out.frequencies[k] = (static_cast<double>(k) - static_cast<double>(half)) * fs / static_cast<double>(fft_size);
            out.raw_magnitude[k] = std::hypot(spec[src][0], spec[src][1]);
        }

        const double peak = *std::max_element(out.raw_magnitude.begin(), out.raw_magnitude.end());
        out.normalized_magnitude.resize(fft_size, 0.0);
        if (peak > 0.0)
            for (std::size_t k = 0; k < fft_size; ++k)
                out.normalized_magnitude[k] = out.raw_magnitude[k] / peak;
        return out;
    }

    FadeMetrics fade_metrics(const EnvelopeTrace &trace)
    {
        if (trace.samples.empty())
            throw ContractError("fade metrics need a nonempty trace");
        const auto mags = trace.magnitudes();
        const auto [lo, hi] = std::minmax_element(mags.begin(), mags.end());
        const double mean = std::accumulate(mags.begin(), mags.end(), 0.0) / static_cast<double>(mags.size());

        FadeMetrics m;
        m.delta_r_db = *lo > 0.0 ? magnitude_db(*hi) - magnitude_db(*lo) : std::numeric_limits<double>::infinity();
        m.r_bar_db = magnitude_db(mean);
        return m;
    }

    void write_spectrum_csv(std::ostream &os, const DopplerSpectrum &spectrum)
    {
        os << "freq_hz,norm_mag,norm_mag_db\n";
        char line[128];
        for (std::size_t k = 0; k < spectrum.frequencies.size(); ++k)
        {
            const double v = spectrum.normalized_magnitude[k];
            std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", spectrum.frequencies[k], v, magnitude_db(v));
            os << line;
        }
    }
}
