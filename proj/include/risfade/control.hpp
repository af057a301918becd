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

#ifndef RISFADE_CONTROL_HPP
#define RISFADE_CONTROL_HPP

#include "risfade/envelope.hpp"
#include "risfade/imperfections.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace risfade
{
    // RIS phase-control policies. Plain-IO targets are ordinals among the plain reflectors (0-based).
    namespace strategy
    {
        struct None {};                   // every RIS at theta = 0
        struct AlignToLos {};             // co-phase every RIS with the direct ray
        struct OutPhaseLos {};            // single RIS opposed to the direct ray
        struct CancelIo { std::size_t target = 0; };  // single RIS cancels one plain reflection
        struct AlignToIo { std::size_t target = 0; }; // single RIS co-phased with one plain reflection
        struct OptimalSingleRis {};       // per-sample magnitude maximizer for one RIS
        struct RandomPhase { std::uint64_t seed = 0; };
        struct DopplerSynthesis { double target_hz = 0.0; };
        struct NlosDopplerEliminate {};
        struct TwoRisAlign {};            // both RIS of the two-reflector link aligned to the direct ray
        struct PermSearchMax {};          // Method 2
        struct PermSearchSmooth {};       // Method 3
        struct AlignToStrongest {};       // Method 1 without a direct path
    }

    using Strategy = std::variant<strategy::None, strategy::AlignToLos, strategy::OutPhaseLos, strategy::CancelIo,
                                  strategy::AlignToIo, strategy::OptimalSingleRis, strategy::RandomPhase,
                                  strategy::DopplerSynthesis, strategy::NlosDopplerEliminate, strategy::TwoRisAlign,
                                  strategy::PermSearchMax, strategy::PermSearchSmooth, strategy::AlignToStrongest>;

    // Accepted spellings: none, align_los (m1), out_phase_los, cancel_io[:k], align_io[:k], optimal,
    // random[:seed], doppler_synth:<hz>, nlos_eliminate, two_ris_align, perm_max (m2), perm_smooth (m3),
    // align_strongest. `default_seed` fills in a bare "random".
    Strategy strategy_from_string(const std::string &name, std::uint64_t default_seed = 0);
    std::string to_string(const Strategy &s);
    std::vector<std::string> strategy_names();

    PhasePlan plan_none(const Scenario &scenario, const SamplingGrid &grid);

    // theta_i(t) = -2 pi f_i t + psi_i - 2 pi f_D t
    PhasePlan plan_align_to_los(const Scenario &scenario, const SamplingGrid &grid);

    // Single RIS, direct path, no plain reflectors: theta = align + pi
    PhasePlan plan_out_phase_los(const Scenario &scenario, const SamplingGrid &grid);

    // theta(t) = -2 pi f_R t + psi + 2 pi f_k t - phi_k
    PhasePlan plan_cancel_io(const Scenario &scenario, const SamplingGrid &grid, std::size_t target);

    // Cancellation phase + pi
    PhasePlan plan_align_to_io(const Scenario &scenario, const SamplingGrid &grid, std::size_t target);

    // theta_i(t) = 2 pi (f_target - f_i) t, |f_target| < f_s / 2
    PhasePlan plan_doppler_synthesis(const Scenario &scenario, double target_hz, const SamplingGrid &grid);

    // Independent uniform phase per RIS per sample (sample-major draw order)
    PhasePlan plan_random(const Scenario &scenario, const SamplingGrid &grid, std::uint64_t seed);

    // No direct path and no plain reflectors: theta_i(t) = -2 pi f_i t + psi_i
    PhasePlan plan_nlos_eliminate(const Scenario &scenario, const SamplingGrid &grid);

    // Maximizer of |r(t)| over the phase of the single RIS, all other rays fixed. With S the sum of the
    // uncontrolled rays rotated into the RIS frame, A = Re S and B = Im S, and the optimum is
    // theta = (pi/2)(1 - sgn A) - atan(-B/A). A = 0 is settled by comparing the two stationary points.
    double optimal_single_ris_phase(const Scenario &scenario, double t);

    PhasePlan plan_optimal_single_ris(const Scenario &scenario, const SamplingGrid &grid);

    enum class Method
    {
        M1, // align to the direct ray, or to the strongest path without one
        M2, // assignment search maximizing |r(t)|
        M3  // assignment search minimizing the change of |r| from the previous sample
    };

    enum class LosMode
    {
        Los,
        Nlos
    };

    const char *to_string(Method m);

    // RIS-to-plain-IO pairing chosen at one sample. RIS and plain indices are ordinals.
    struct Assignment
    {
        std::size_t permutation_index = 0;                     // lexicographic rank among enumerated candidates
        std::vector<std::pair<std::size_t, std::size_t>> pairs; // (ris, plain) cancellation pairs
        std::vector<std::size_t> remainder;                    // RIS aligned to the direct ray or the anchor
        std::optional<std::size_t> anchor;                     // reference RIS without a direct ray (theta = 0)
    };

    struct MethodOptions
    {
        std::size_t permutation_cap = 1'000'000;
        std::size_t hold_samples = 1;             // decisions only every Q samples; phases held in between
        std::optional<RealisticRisModel> hardware; // phase range / amplitude applied to every candidate
        const Scenario *plant = nullptr;           // true channel for Method 3 feedback; defaults to the input
    };

    struct MethodResult
    {
        PhasePlan plan;
        std::vector<Assignment> assignments;      // per sample
        std::vector<double> estimated_magnitude;  // controller's |r_n(t)| for the chosen candidate
    };

    // Number of k-permutations of n, saturating at SIZE_MAX
    std::size_t permutation_count(std::size_t n, std::size_t k);

    // Calls fn(perm) for every ordered selection of k distinct values from [0, n), in lexicographic order.
    template <typename Fn>
    void for_each_k_permutation(std::size_t n, std::size_t k, Fn &&fn);

    // Methods 1-3 in the general multi-reflector setting. `scenario` is what the controller believes
    // (possibly with erroneous Doppler shifts).
    MethodResult plan_method(const Scenario &scenario, const SamplingGrid &grid, Method method, LosMode los_mode,
                             const MethodOptions &options = {});

    PhasePlan plan_align_to_strongest(const Scenario &scenario, const SamplingGrid &grid);

    struct PlanOutcome
    {
        PhasePlan plan;
        std::optional<MethodResult> search; // set for the permutation-search strategies
    };

    PlanOutcome make_plan(const Strategy &s, const Scenario &scenario, const SamplingGrid &grid,
                          const MethodOptions &options = {});

    // Columns t_s,perm_index,pairs,remainder,anchor,est_mag_db
    void write_assignment_csv(std::ostream &os, const MethodResult &result, const SamplingGrid &grid);
}

#include "risfade/detail/permutations.hpp"

#endif
