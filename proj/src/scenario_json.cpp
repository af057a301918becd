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

#include "risfade/scenario_json.hpp"
#include "risfade/errors.hpp"

#include <string>

using nlohmann::json;

namespace risfade
{
    namespace
    {
        double required_number(const json &obj, const char *key, const char *where)
        {
            auto it = obj.find(key);
            if (it == obj.end() || !it->is_number())
                throw ContractError(std::string(where) + ": missing numeric field '" + key + "'");
            return it->get<double>();
        }

        Point2 point_from(const json &v, const char *what)
        {
            if (!v.is_array() || v.size() != 2)
                throw ContractError(std::string("random.") + what + " must be [x, y]");
            return {v[0].get<double>(), v[1].get<double>()};
        }
    }

    Scenario scenario_from_json(const json &doc)
    {
        if (!doc.is_object())
            throw ContractError("scenario document must be a JSON object");

        const double carrier_hz = required_number(doc, "carrier_hz", "scenario");
        Scenario s;
        if (doc.contains("wavelength_m") && !doc["wavelength_m"].is_null())
            s.carrier = CarrierConfig::pinned(carrier_hz, doc["wavelength_m"].get<double>());
        else
            s.carrier = CarrierConfig::from_frequency(carrier_hz);
        s.mobile = MobileConfig::make(required_number(doc, "speed_mps", "scenario"), s.carrier);

        std::optional<double> d_los;
        if (doc.contains("d_los_m") && !doc["d_los_m"].is_null())
            d_los = doc["d_los_m"].get<double>();
        const bool blocked = doc.value("los_blocked", false);
        if (d_los && !blocked)
            s.los = LosLink{*d_los};

        for (const auto &item : doc.value("interactors", json::array()))
        {
            const auto kind = interactor_kind_from_string(item.value("kind", std::string("plain")));
            const auto geometry = item.value("geometry", std::string("explicit"));
            if (geometry == "two_ray" || geometry == "angled")
            {
                if (!d_los)
                    throw ContractError("derived interactor geometry needs d_los_m");
                if (geometry == "two_ray")
                    s.interactors.push_back(derive_two_ray_interactor(
                        *d_los, required_number(item, "d1_m", "two_ray interactor"), s.carrier, s.mobile, kind));
                else
                    s.interactors.push_back(derive_angled_interactor(
                        *d_los, required_number(item, "d2_m", "angled interactor"),
                        required_number(item, "alpha_rad", "angled interactor"), s.carrier, s.mobile, kind));
            }
            else if (geometry == "explicit")
            {
                auto io = make_interactor(kind, required_number(item, "alpha_rad", "interactor"),
                                          required_number(item, "d_tilde_m", "interactor"), s.carrier, s.mobile);
                if (item.contains("psi_rad"))
                    io.constant_phase = wrap_phase(item["psi_rad"].get<double>());
                if (item.contains("doppler_hz"))
                    io.doppler = item["doppler_hz"].get<double>();
                s.interactors.push_back(io);
            }
            else
                throw ContractError("unknown interactor geometry '" + geometry + "'");
        }

        if (doc.contains("random"))
        {
            const auto &r = doc["random"];
            const auto &rect = r.at("rect");
            if (!rect.is_array() || rect.size() != 4)
                throw ContractError("random.rect must be [x_min, x_max, y_min, y_max]");
            const Point2 bs = point_from(r.at("bs"), "bs");
            const Point2 ms = point_from(r.at("ms"), "ms");
            const Rect box{rect[0].get<double>(), rect[1].get<double>(), rect[2].get<double>(), rect[3].get<double>()};
            auto placed = random_scenario(bs, ms, box, r.at("reflectors").get<std::size_t>(),
                                          r.at("ris").get<std::size_t>(), r.at("seed").get<std::uint64_t>(), s.carrier,
                                          s.mobile);
            if (!d_los && !blocked && !doc.contains("d_los_m"))
                s.los = placed.los;
            for (auto &io : placed.interactors)
                s.interactors.push_back(io);
        }

        if (doc.value("drop_constant_phases", false))
            s = without_constant_phases(std::move(s));

        s.validate();
        return s;
    }

    json scenario_to_json(const Scenario &s)
    {
        json doc;
        doc["carrier_hz"] = s.carrier.carrier_frequency;
        doc["wavelength_m"] = s.carrier.wavelength;
        doc["speed_mps"] = s.mobile.speed;
        doc["d_los_m"] = s.los ? json(s.los->distance) : json(nullptr);
        json list = json::array();
        for (const auto &io : s.interactors)
        {
            list.push_back({{"kind", to_string(io.kind)},
                            {"alpha_rad", io.arrival_angle},
                            {"d_tilde_m", io.initial_radio_path},
                            {"psi_rad", io.constant_phase},
                            {"doppler_hz", io.doppler}});
        }
        doc["interactors"] = std::move(list);
        return doc;
    }
}
