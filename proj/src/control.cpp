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

#include "risfade/control.hpp"
#include "risfade/errors.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

namespace risfade
{
    namespace
    {
        cplx phasor(double phase)
        {
            return {std::cos(phase), std::sin(phase)};
        }

        // Doppler-driven phase of an interactor's ray at time t: 2 pi f t - psi
        double ray_phase(const Interactor &io, double t)
        {
            return two_pi * io.doppler * t - io.constant_phase;
        }

        double los_phase(const Scenario &s, double t)
        {
            return -two_pi * s.mobile.max_doppler * t;
        }

        void require_los(const Scenario &s, const char *what)
        {
            if (!s.los)
                throw ContractError(std::string(what) + " needs a direct (LOS) path");
        }

        void require_single_ris(const Scenario &s, const char *what)
        {
            if (s.ris_count() != 1)
                throw ContractError(std::string(what) + " needs exactly one RIS, scenario has " +
                                    std::to_string(s.ris_count()));
        }

        const Interactor &plain_at(const Scenario &s, std::size_t ordinal)
        {
            const auto idx = s.plain_indices();
            if (ordinal >= idx.size())
                throw ContractError("plain reflector target " + std::to_string(ordinal) + " out of range (" +
                                    std::to_string(idx.size()) + " plain reflectors)");
            return s.interactors[idx[ordinal]];
        }

        // Fills plan phases from a per-RIS, per-time rule
        template <typename Rule>
        PhasePlan tabulate(const Scenario &s, const SamplingGrid &grid, Rule &&rule)
        {
            s.validate();
            grid.validate();
            const auto ris = s.ris_indices();
            PhasePlan plan(ris.size(), grid.sample_count);
            for (std::size_t i = 0; i < ris.size(); ++i)
                for (std::size_t k = 0; k < grid.sample_count; ++k)
                    plan.phases[i][k] = wrap_phase(rule(s.interactors[ris[i]], grid.time(k)));
            return plan;
        }
    }

    // ---------------------------------------------------------------- closed-form plans

    PhasePlan plan_none(const Scenario &scenario, const SamplingGrid &grid)
    {
        return tabulate(scenario, grid, [](const Interactor &, double) { return 0.0; });
    }

    PhasePlan plan_align_to_los(const Scenario &scenario, const SamplingGrid &grid)
    {
        require_los(scenario, "LOS alignment");
        return tabulate(scenario, grid, [&](const Interactor &io, double t) {
            return -ray_phase(io, t) + los_phase(scenario, t);
        });
    }

    PhasePlan plan_out_phase_los(const Scenario &scenario, const SamplingGrid &grid)
    {
        require_los(scenario, "LOS out-phasing");
        require_single_ris(scenario, "LOS out-phasing");
        if (scenario.plain_count() != 0)
            throw ContractError("LOS out-phasing expects the two-ray link without plain reflectors");
        return tabulate(scenario, grid, [&](const Interactor &io, double t) {
            return -ray_phase(io, t) + los_phase(scenario, t) + pi;
        });
    }

    PhasePlan plan_cancel_io(const Scenario &scenario, const SamplingGrid &grid, std::size_t target)
    {
        require_single_ris(scenario, "IO cancellation");
        const Interactor &victim = plain_at(scenario, target);
        return tabulate(scenario, grid, [&](const Interactor &io, double t) {
            return -ray_phase(io, t) + ray_phase(victim, t);
        });
    }

    PhasePlan plan_align_to_io(const Scenario &scenario, const SamplingGrid &grid, std::size_t target)
    {
        require_single_ris(scenario, "IO alignment");
        const Interactor &partner = plain_at(scenario, target);
        return tabulate(scenario, grid, [&](const Interactor &io, double t) {
            return -ray_phase(io, t) + ray_phase(partner, t) + pi;
        });
    }

    PhasePlan plan_doppler_synthesis(const Scenario &scenario, double target_hz, const SamplingGrid &grid)
    {
        grid.validate();
        const double nyquist = 0.5 / grid.sample_interval;
        if (!(std::abs(target_hz) < nyquist))
            throw DomainError("synthesized Doppler " + std::to_string(target_hz) + " Hz is not below f_s/2 = " +
                              std::to_string(nyquist) + " Hz");
        return tabulate(scenario, grid, [&](const Interactor &io, double t) {
            return two_pi * (target_hz - io.doppler) * t;
        });
    }

    PhasePlan plan_random(const Scenario &scenario, const SamplingGrid &grid, std::uint64_t seed)
    {
        scenario.validate();
        grid.validate();
        const std::size_t n = scenario.ris_count();
        PhasePlan plan(n, grid.sample_count);
        std::mt19937_64 engine(seed);
        for (std::size_t k = 0; k < grid.sample_count; ++k)
            for (std::size_t i = 0; i < n; ++i)
                plan.phases[i][k] = two_pi * unit_uniform(engine);
        return plan;
    }

    PhasePlan plan_nlos_eliminate(const Scenario &scenario, const SamplingGrid &grid)
    {
        if (scenario.los)
            throw ContractError("Doppler elimination requires a blocked direct path");
        if (scenario.plain_count() != 0)
            throw ContractError("Doppler elimination requires every reflector to be a RIS");
        return tabulate(scenario, grid, [](const Interactor &io, double t) { return -ray_phase(io, t); });
    }

    double optimal_single_ris_phase(const Scenario &scenario, double t)
    {
        require_single_ris(scenario, "optimal single-RIS phase");

        // Uncontrolled rays
        cplx rest{0.0, 0.0};
        if (scenario.los)
            rest += phasor(los_phase(scenario, t)) / scenario.los->distance;
        const Interactor *ris = nullptr;
        for (const auto &io : scenario.interactors)
        {
            if (io.is_ris())
                ris = &io;
            else
                rest += Interactor::plain_reflection * phasor(ray_phase(io, t)) / io.initial_radio_path;
        }

        const double beta = ray_phase(*ris, t);
        const cplx rotated = rest * phasor(-beta);
        const double a = rotated.real();
        const double b = rotated.imag();

        if (a != 0.0)
        {
            const double sgn = a > 0.0 ? 1.0 : -1.0;
            return wrap_phase(0.5 * pi * (1.0 - sgn) - std::atan(-b / a));
        }

        // Stationary points of A cos(theta) + B sin(theta) with A = 0
        const double c1 = 0.5 * pi;
        const double c2 = 1.5 * pi;
        const double m1 = std::abs(rest + phasor(beta + c1) / ris->initial_radio_path);
        const double m2 = std::abs(rest + phasor(beta + c2) / ris->initial_radio_path);
        return m2 > m1 ? c2 : c1;
    }

    PhasePlan plan_optimal_single_ris(const Scenario &scenario, const SamplingGrid &grid)
    {
        scenario.validate();
        grid.validate();
        require_single_ris(scenario, "optimal single-RIS phase");
        PhasePlan plan(1, grid.sample_count);
        for (std::size_t k = 0; k < grid.sample_count; ++k)
            plan.phases[0][k] = optimal_single_ris_phase(scenario, grid.time(k));
        return plan;
    }

    // ---------------------------------------------------------------- Methods 1-3

    const char *to_string(Method m)
    {
        switch (m)
        {
        case Method::M1:
            return "m1";
        case Method::M2:
            return "m2";
        case Method::M3:
            return "m3";
        }
        return "?";
    }

    std::size_t permutation_count(std::size_t n, std::size_t k)
    {
        if (k > n)
            return 0;
        std::size_t out = 1;
        for (std::size_t i = 0; i < k; ++i)
        {
            const std::size_t factor = n - i;
            if (out > std::numeric_limits<std::size_t>::max() / factor)
                return std::numeric_limits<std::size_t>::max();
            out *= factor;
        }
        return out;
    }

    namespace
    {
        // Phases of every ray at one instant, as seen by the controller
        struct Snapshot
        {
            double t = 0.0;
            double los = 0.0;                 // direct ray phase
            std::vector<double> ris_beta;     // RIS ray phase before reflection
            std::vector<double> ris_dist;
            std::vector<double> plain_gamma;  // plain ray phase (before the -1)
            cplx uncontrolled{0.0, 0.0};      // LOS + plain rays, without lambda/(4 pi)
        };

        class Controller
        {
        public:
            Controller(const Scenario &s, const MethodOptions &opt) : s_(s), opt_(opt)
            {
                for (auto i : s.ris_indices())
                    ris_.push_back(&s.interactors[i]);
                for (auto k : s.plain_indices())
                    plain_.push_back(&s.interactors[k]);
                amp_ = opt.hardware ? opt.hardware->amplitude() : 1.0;
            }

            std::size_t n() const { return ris_.size(); }
            std::size_t m() const { return plain_.size(); }
            double amplitude() const { return amp_; }

            Snapshot snapshot(double t) const
            {
                Snapshot snap;
                snap.t = t;
                snap.los = los_phase(s_, t);
                if (s_.los)
                    snap.uncontrolled += phasor(snap.los) / s_.los->distance;
                for (const auto *io : ris_)
                {
                    snap.ris_beta.push_back(ray_phase(*io, t));
                    snap.ris_dist.push_back(io->initial_radio_path);
                }
                for (const auto *io : plain_)
                {
                    snap.plain_gamma.push_back(ray_phase(*io, t));
                    snap.uncontrolled += Interactor::plain_reflection * phasor(snap.plain_gamma.back()) /
                                         io->initial_radio_path;
                }
                return snap;
            }

            // Applies the hardware model to a requested phase
            double realize(double theta) const
            {
                return opt_.hardware ? opt_.hardware->map_phase(theta) : wrap_phase(theta);
            }

            // Fills `theta` for the given assignment and returns the estimated |r|
            double evaluate(const Snapshot &snap, const Assignment &a, std::vector<double> &theta) const
            {
                for (const auto &[i, k] : a.pairs)
                    theta[i] = realize(-snap.ris_beta[i] + snap.plain_gamma[k]);
                for (auto i : a.remainder)
                {
                    if (a.anchor)
                        theta[i] = i == *a.anchor ? realize(0.0)
                                                  : realize(-snap.ris_beta[i] + snap.ris_beta[*a.anchor]);
                    else
                        theta[i] = realize(-snap.ris_beta[i] + snap.los);
                }
                cplx acc = snap.uncontrolled;
                for (std::size_t i = 0; i < theta.size(); ++i)
                    acc += amp_ * phasor(snap.ris_beta[i] + theta[i]) / snap.ris_dist[i];
                return s_.carrier.wavelength / (4.0 * pi) * std::abs(acc);
            }

            // Method 1 without LOS: co-phase with the shortest ray (RIS wins only when strictly shorter)
            void strongest_alignment(const Snapshot &snap, std::vector<double> &theta, Assignment &a) const
            {
                std::size_t best_ris = 0, best_plain = 0;
                double d_ris = std::numeric_limits<double>::infinity();
                double d_plain = std::numeric_limits<double>::infinity();
                for (std::size_t i = 0; i < n(); ++i)
                    if (ris_[i]->initial_radio_path < d_ris)
                        d_ris = ris_[i]->initial_radio_path, best_ris = i;
                for (std::size_t k = 0; k < m(); ++k)
                    if (plain_[k]->initial_radio_path < d_plain)
                        d_plain = plain_[k]->initial_radio_path, best_plain = k;

                a = Assignment{};
                if (d_ris < d_plain)
                {
                    a.anchor = best_ris;
                    for (std::size_t i = 0; i < n(); ++i)
                    {
                        a.remainder.push_back(i);
                        theta[i] = i == best_ris ? realize(0.0) : realize(-snap.ris_beta[i] + snap.ris_beta[best_ris]);
                    }
                }
                else
                {
                    for (std::size_t i = 0; i < n(); ++i)
                    {
                        a.remainder.push_back(i);
                        theta[i] = realize(-snap.ris_beta[i] + snap.plain_gamma[best_plain] + pi);
                    }
                }
            }

        private:
            const Scenario &s_;
            const MethodOptions &opt_;
            std::vector<const Interactor *> ris_;
            std::vector<const Interactor *> plain_;
            double amp_ = 1.0;
        };

        // Candidate assignments for Methods 2/3 in lexicographic order
        std::vector<Assignment> enumerate_candidates(const Scenario &s, std::size_t n, std::size_t m, LosMode mode,
                                                     std::size_t cap)
        {
            const bool setup_one = n <= m;
            const std::size_t count = setup_one ? permutation_count(m, n) : permutation_count(n, m);
            if (count > cap)
                throw ResourceError("assignment search needs " + std::to_string(count) +
                                    " permutations per sample, cap is " + std::to_string(cap));

            std::vector<double> ris_dist;
            for (auto i : s.ris_indices())
                ris_dist.push_back(s.interactors[i].initial_radio_path);

            std::vector<Assignment> out;
            out.reserve(count);
            if (setup_one)
            {
                // RIS i cancels plain perm[i]
                for_each_k_permutation(m, n, [&](std::span<const std::size_t> perm) {
                    Assignment a;
                    a.permutation_index = out.size();
                    for (std::size_t i = 0; i < n; ++i)
                        a.pairs.emplace_back(i, perm[i]);
                    out.push_back(std::move(a));
                });
            }
            else
            {
                // plain k is cancelled by RIS perm[k]; the rest align to LOS or to the strongest leftover RIS
                for_each_k_permutation(n, m, [&](std::span<const std::size_t> perm) {
                    Assignment a;
                    a.permutation_index = out.size();
                    std::vector<bool> used(n, false);
                    for (std::size_t k = 0; k < m; ++k)
                    {
                        a.pairs.emplace_back(perm[k], k);
                        used[perm[k]] = true;
                    }
                    for (std::size_t i = 0; i < n; ++i)
                        if (!used[i])
                            a.remainder.push_back(i);
                    if (mode == LosMode::Nlos)
                    {
                        std::size_t best = a.remainder.front();
                        for (auto i : a.remainder)
                            if (ris_dist[i] < ris_dist[best])
                                best = i;
                        a.anchor = best;
                    }
                    out.push_back(std::move(a));
                });
            }
            return out;
        }
    }

    MethodResult plan_method(const Scenario &scenario, const SamplingGrid &grid, Method method, LosMode los_mode,
                             const MethodOptions &options)
    {
        scenario.validate();
        grid.validate();
        if (options.hardware)
            options.hardware->validate();
        if (options.hold_samples < 1)
            throw DomainError("hold must span at least one sample");
        if (los_mode == LosMode::Los && !scenario.los)
            throw ContractError("LOS mode requested but the scenario has no direct path");
        if (los_mode == LosMode::Nlos && scenario.los)
            throw ContractError("NLOS mode requested but the scenario has a direct path");

        const Scenario &plant = options.plant ? *options.plant : scenario;
        if (options.plant)
        {
            plant.validate();
            if (plant.ris_count() != scenario.ris_count() || plant.plain_count() != scenario.plain_count())
                throw ContractError("plant and controller scenarios differ in shape");
        }

        Controller ctl(scenario, options);
        const std::size_t n = ctl.n();
        const std::size_t m = ctl.m();
        if (n == 0)
            throw ContractError("no RIS in the scenario; none of the methods are applicable");

        std::vector<Assignment> candidates;
        if (method != Method::M1)
            candidates = enumerate_candidates(scenario, n, m, los_mode, options.permutation_cap);

        MethodResult result;
        result.plan = PhasePlan(n, grid.sample_count);
        for (auto &a : result.plan.amplitude)
            a = ctl.amplitude();
        result.assignments.resize(grid.sample_count);
        result.estimated_magnitude.resize(grid.sample_count);

        std::vector<double> theta(n), best_theta(n);
        double previous = 0.0; // realized |r| at the previous sample (Method 3 feedback)
        for (std::size_t k = 0; k < grid.sample_count; ++k)
        {
            const double t = grid.time(k);
            if (k % options.hold_samples != 0)
            {
                for (std::size_t i = 0; i < n; ++i)
                    result.plan.phases[i][k] = result.plan.phases[i][k - 1];
                result.assignments[k] = result.assignments[k - 1];
                result.estimated_magnitude[k] = result.estimated_magnitude[k - 1];
            }
            else
            {
                const Snapshot snap = ctl.snapshot(t);
                Assignment chosen;
                double chosen_mag = 0.0;

                if (method == Method::M1)
                {
                    if (los_mode == LosMode::Los)
                    {
                        for (std::size_t i = 0; i < n; ++i)
                            chosen.remainder.push_back(i);
                        chosen_mag = ctl.evaluate(snap, chosen, best_theta);
                    }
                    else
                    {
                        ctl.strongest_alignment(snap, best_theta, chosen);
                        cplx acc = snap.uncontrolled;
                        for (std::size_t i = 0; i < n; ++i)
                            acc += ctl.amplitude() * phasor(snap.ris_beta[i] + best_theta[i]) / snap.ris_dist[i];
                        chosen_mag = scenario.carrier.wavelength / (4.0 * pi) * std::abs(acc);
                    }
                }
                else
                {
                    const bool smooth = method == Method::M3 && k > 0;
                    double best_score = std::numeric_limits<double>::infinity();
                    const Assignment *best = nullptr;
                    for (const auto &cand : candidates)
                    {
                        const double mag = ctl.evaluate(snap, cand, theta);
                        // Both criteria phrased as "minimize score"; strict < keeps the lowest index on ties
                        const double score = smooth ? std::abs(mag - previous) : -mag;
                        if (score < best_score)
                        {
                            best_score = score;
                            best = &cand;
                            best_theta = theta;
                            chosen_mag = mag;
                        }
                    }
                    chosen = *best;
                }

                for (std::size_t i = 0; i < n; ++i)
                    result.plan.phases[i][k] = best_theta[i];
                result.assignments[k] = std::move(chosen);
                result.estimated_magnitude[k] = chosen_mag;
            }

            if (method == Method::M3)
            {
                const auto applied = result.plan.at(k);
                previous = std::abs(envelope_sample(plant, applied, result.plan.amplitude, t));
            }
        }
        return result;
    }

    PhasePlan plan_align_to_strongest(const Scenario &scenario, const SamplingGrid &grid)
    {
        return plan_method(scenario, grid, Method::M1, LosMode::Nlos).plan;
    }

    // ---------------------------------------------------------------- dispatch

    namespace
    {
        template <class... Ts>
        struct overloaded : Ts...
        {
            using Ts::operator()...;
        };
        template <class... Ts>
        overloaded(Ts...) -> overloaded<Ts...>;

        LosMode mode_of(const Scenario &s)
        {
            return s.los ? LosMode::Los : LosMode::Nlos;
        }
    }

    PlanOutcome make_plan(const Strategy &s, const Scenario &scenario, const SamplingGrid &grid,
                          const MethodOptions &options)
    {
        auto searched = [&](Method m) {
            auto r = plan_method(scenario, grid, m, mode_of(scenario), options);
            PlanOutcome out{r.plan, std::move(r)};
            return out;
        };
        auto simple = [](PhasePlan p) { return PlanOutcome{std::move(p), std::nullopt}; };

        return std::visit(
            overloaded{
                [&](const strategy::None &) { return simple(plan_none(scenario, grid)); },
                [&](const strategy::AlignToLos &) { return simple(plan_align_to_los(scenario, grid)); },
                [&](const strategy::TwoRisAlign &) {
                    if (scenario.ris_count() != 2)
                        throw ContractError("two-RIS alignment needs exactly two RIS");
                    return simple(plan_align_to_los(scenario, grid));
                },
                [&](const strategy::OutPhaseLos &) { return simple(plan_out_phase_los(scenario, grid)); },
                [&](const strategy::CancelIo &c) { return simple(plan_cancel_io(scenario, grid, c.target)); },
                [&](const strategy::AlignToIo &c) { return simple(plan_align_to_io(scenario, grid, c.target)); },
                [&](const strategy::OptimalSingleRis &) { return simple(plan_optimal_single_ris(scenario, grid)); },
                [&](const strategy::RandomPhase &r) { return simple(plan_random(scenario, grid, r.seed)); },
                [&](const strategy::DopplerSynthesis &d) {
                    return simple(plan_doppler_synthesis(scenario, d.target_hz, grid));
                },
                [&](const strategy::NlosDopplerEliminate &) { return simple(plan_nlos_eliminate(scenario, grid)); },
                [&](const strategy::PermSearchMax &) { return searched(Method::M2); },
                [&](const strategy::PermSearchSmooth &) { return searched(Method::M3); },
                [&](const strategy::AlignToStrongest &) {
                    auto r = plan_method(scenario, grid, Method::M1, LosMode::Nlos, options);
                    return PlanOutcome{r.plan, std::move(r)};
                },
            },
            s);
    }

    namespace
    {
        bool split_arg(const std::string &name, const std::string &key, std::string &arg)
        {
            if (name == key)
            {
                arg.clear();
                return true;
            }
            if (name.rfind(key + ":", 0) == 0)
            {
                arg = name.substr(key.size() + 1);
                return true;
            }
            return false;
        }

        std::size_t parse_index(const std::string &arg, const std::string &name)
        {
            if (arg.empty())
                return 0;
            try
            {
                std::size_t pos = 0;
                const auto v = std::stoull(arg, &pos);
                if (pos == arg.size())
                    return static_cast<std::size_t>(v);
            }
            catch (const std::exception &)
            {
            }
            throw ContractError("bad argument in strategy '" + name + "'");
        }

        std::string format_double(double v)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }
    }

    Strategy strategy_from_string(const std::string &name, std::uint64_t default_seed)
    {
        std::string arg;
        if (name == "none")
            return strategy::None{};
        if (name == "align_los" || name == "m1")
            return strategy::AlignToLos{};
        if (name == "out_phase_los")
            return strategy::OutPhaseLos{};
        if (split_arg(name, "cancel_io", arg))
            return strategy::CancelIo{parse_index(arg, name)};
        if (split_arg(name, "align_io", arg))
            return strategy::AlignToIo{parse_index(arg, name)};
        if (name == "optimal")
            return strategy::OptimalSingleRis{};
        if (split_arg(name, "random", arg))
            return strategy::RandomPhase{arg.empty() ? default_seed : static_cast<std::uint64_t>(parse_index(arg, name))};
        if (split_arg(name, "doppler_synth", arg))
        {
            try
            {
                std::size_t pos = 0;
                const double hz = std::stod(arg, &pos);
                if (pos == arg.size())
                    return strategy::DopplerSynthesis{hz};
            }
            catch (const std::exception &)
            {
            }
            throw ContractError("strategy 'doppler_synth' needs a frequency, e.g. doppler_synth:200");
        }
        if (name == "nlos_eliminate")
            return strategy::NlosDopplerEliminate{};
        if (name == "two_ris_align")
            return strategy::TwoRisAlign{};
        if (name == "perm_max" || name == "m2")
            return strategy::PermSearchMax{};
        if (name == "perm_smooth" || name == "m3")
            return strategy::PermSearchSmooth{};
        if (name == "align_strongest")
            return strategy::AlignToStrongest{};

        std::string known;
        for (const auto &n : strategy_names())
            known += (known.empty() ? "" : ", ") + n;
        throw ContractError("unknown strategy '" + name + "'; valid strategies: " + known);
    }

    std::string to_string(const Strategy &s)
    {
        return std::visit(
            overloaded{
                [](const strategy::None &) -> std::string { return "none"; },
                [](const strategy::AlignToLos &) -> std::string { return "align_los"; },
                [](const strategy::OutPhaseLos &) -> std::string { return "out_phase_los"; },
                [](const strategy::CancelIo &c) -> std::string { return "cancel_io:" + std::to_string(c.target); },
                [](const strategy::AlignToIo &c) -> std::string { return "align_io:" + std::to_string(c.target); },
                [](const strategy::OptimalSingleRis &) -> std::string { return "optimal"; },
                [](const strategy::RandomPhase &r) -> std::string { return "random:" + std::to_string(r.seed); },
                [](const strategy::DopplerSynthesis &d) -> std::string { return "doppler_synth:" + format_double(d.target_hz); },
                [](const strategy::NlosDopplerEliminate &) -> std::string { return "nlos_eliminate"; },
                [](const strategy::TwoRisAlign &) -> std::string { return "two_ris_align"; },
                [](const strategy::PermSearchMax &) -> std::string { return "perm_max"; },
                [](const strategy::PermSearchSmooth &) -> std::string { return "perm_smooth"; },
                [](const strategy::AlignToStrongest &) -> std::string { return "align_strongest"; },
            },
            s);
    }

    std::vector<std::string> strategy_names()
    {
        return {"none",     "align_los",    "out_phase_los",  "cancel_io[:k]", "align_io[:k]",
                "optimal",  "random[:seed]", "doppler_synth:<hz>", "nlos_eliminate", "two_ris_align",
                "perm_max", "perm_smooth",  "align_strongest", "m1", "m2", "m3"};
    }

    void write_assignment_csv(std::ostream &os, const MethodResult &result, const SamplingGrid &grid)
    {
        os << "t_s,perm_index,pairs,remainder,anchor,est_mag_db\n";
        char num[64];
        for (std::size_t k = 0; k < result.assignments.size(); ++k)
        {
            const auto &a = result.assignments[k];
            std::ostringstream pairs, rest;
            for (std::size_t p = 0; p < a.pairs.size(); ++p)
                pairs << (p ? ";" : "") << a.pairs[p].first << "->" << a.pairs[p].second;
            for (std::size_t p = 0; p < a.remainder.size(); ++p)
                rest << (p ? ";" : "") << a.remainder[p];
            std::snprintf(num, sizeof num, "%.17g", grid.time(k));
            os << num << ',' << a.permutation_index << ',' << pairs.str() << ',' << rest.str() << ',';
            if (a.anchor)
                os << *a.anchor;
            std::snprintf(num, sizeof num, "%.17g", magnitude_db(result.estimated_magnitude[k]));
            os << ',' << num << '\n';
        }
    }
}
