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

#ifndef RISFADE_SPECTRUM_HPP
#define RISFADE_SPECTRUM_HPP

#include "risfade/envelope.hpp"

#include <iosfwd>
#include <vector>

namespace risfade
{
    struct DopplerSpectrum
    {
        std::vector<double> frequencies;          // Hz, centered: bin k <-> (k - fft_size/2) * f_s / fft_size
        std::vector<double> normalized_magnitude; // peak bin = 1
        std::vector<double> raw_magnitude;        // |X_k| of the unnormalized DFT
        bool truncated = false;                   // trace was longer than fft_size

        double bin_width() const { return frequencies.size() > 1 ? frequencies[1] - frequencies[0] : 0.0; }

        // (1/fft_size) * sum |X_k|^2, equal to the trace energy by Parseval
        double energy() const;

        // Index of the largest bin; ties resolved to the lowest index
        std::size_t peak_bin() const;

        // Indices of local maxima at or above `relative_floor` of the peak, strongest first
        std::vector<std::size_t> dominant_bins(double relative_floor) const;
    };

    // Rectangular-window DFT of the complex trace, zero-padded to fft_size and shifted so 0 Hz sits at
    // bin fft_size/2. A trace longer than fft_size is a ContractError unless `allow_truncation` is set,
    // in which case only the first fft_size samples are used and `truncated` is flagged.
    DopplerSpectrum doppler_spectrum(const EnvelopeTrace &trace, std::size_t fft_size, bool allow_truncation = false);

    struct FadeMetrics
    {
        double delta_r_db = 0.0; // 10log10(max|r|) - 10log10(min|r|); +inf if any sample is zero
        double r_bar_db = 0.0;   // 10log10(mean |r|)
    };

    FadeMetrics fade_metrics(const EnvelopeTrace &trace);

    // Columns freq_hz,norm_mag,norm_mag_db
    void write_spectrum_csv(std::ostream &os, const DopplerSpectrum &spectrum);
}

#endif
