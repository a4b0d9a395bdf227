#pragma once

// JSON hand-config ingestion. The file format uses the units hardware people
// quote (mm, MPa); everything is converted to SI base units on load and back
// on save, so the rest of the library never sees a millimeter.

#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

#include "grip/model.hpp"

namespace grip {

namespace detail {

using nlohmann::json;

inline void reject_unknown_keys(const json& obj, const std::string& path,
                                std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) { known = true; break; }
        if (!known)
            throw std::invalid_argument(path + ": unknown field '" + it.key() + "'");
    }
}

inline const json& require(const json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw std::invalid_argument(path + ": missing field '" + key + "'");
    return *it;
}

inline double require_number(const json& obj, const std::string& path, const char* key) {
    const json& v = require(obj, path, key);
    if (!v.is_number())
        throw std::invalid_argument(path + "." + key + ": expected a number");
    return v.get<double>();
}

inline std::vector<double> require_number_array(const json& obj, const std::string& path,
                                                const char* key) {
    const json& v = require(obj, path, key);
    if (!v.is_array())
        throw std::invalid_argument(path + "." + key + ": expected an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number())
            throw std::invalid_argument(path + "." + key + "[" + std::to_string(i) +
                                        "]: expected a number");
        out.push_back(v[i].get<double>());
    }
    return out;
}

inline std::vector<double> scaled(std::vector<double> v, double factor) {
    for (double& x : v) x *= factor;
    return v;
}

// mm -> m as a true division; 30 mm becomes exactly the double 0.030,
// which multiplying by 1e-3 does not give.
inline std::vector<double> divided(std::vector<double> v, double divisor) {
    for (double& x : v) x /= divisor;
    return v;
}

}  // namespace detail

inline HandModel parse_hand_config(const nlohmann::json& doc) {
    using detail::require;
    using detail::require_number;
    using detail::require_number_array;

    if (!doc.is_object())
        throw std::invalid_argument("config: top level must be a JSON object");
    detail::reject_unknown_keys(doc, "config", {"gravity_m_s2", "fingers"});

    HandModel hand;
    hand.gravity = require_number(doc, "config", "gravity_m_s2");

    const nlohmann::json& fingers = require(doc, "config", "fingers");
    if (!fingers.is_array() || fingers.empty())
        throw std::invalid_argument("config.fingers: expected a non-empty array");

    for (std::size_t i = 0; i < fingers.size(); ++i) {
        const std::string path = "fingers[" + std::to_string(i) + "]";
        const nlohmann::json& fj = fingers[i];
        if (!fj.is_object())
            throw std::invalid_argument(path + ": expected an object");
        detail::reject_unknown_keys(fj, path,
                                    {"name", "lengths_mm", "masses_kg", "com_offsets_mm",
                                     "inertias_kg_m2", "tendon"});

        Finger f;
        const nlohmann::json& name = require(fj, path, "name");
        if (!name.is_string())
            throw std::invalid_argument(path + ".name: expected a string");
        f.name = name.get<std::string>();

        f.chain.lengths = detail::divided(require_number_array(fj, path, "lengths_mm"), 1e3);
        f.chain.masses = require_number_array(fj, path, "masses_kg");
        f.chain.com_offsets =
            detail::divided(require_number_array(fj, path, "com_offsets_mm"), 1e3);
        f.chain.inertias = require_number_array(fj, path, "inertias_kg_m2");

        const nlohmann::json& tj = require(fj, path, "tendon");
        const std::string tpath = path + ".tendon";
        if (!tj.is_object())
            throw std::invalid_argument(tpath + ": expected an object");
        detail::reject_unknown_keys(tj, tpath,
                                    {"pulley_radius_mm", "actuator_radius_mm",
                                     "allowable_stress_mpa", "friction_mu",
                                     "max_grip_force_n"});
        f.tendon.pulley_radius = require_number(tj, tpath, "pulley_radius_mm") / 1e3;
        f.tendon.actuator_radius = require_number(tj, tpath, "actuator_radius_mm") / 1e3;
        f.tendon.allowable_stress = require_number(tj, tpath, "allowable_stress_mpa") * 1e6;
        f.tendon.friction_mu = require_number(tj, tpath, "friction_mu");
        f.tendon.max_grip_force = require_number(tj, tpath, "max_grip_force_n");

        try {
            f.chain.validate();
            f.tendon.validate();
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(path + ": " + e.what());
        }
        hand.fingers.push_back(std::move(f));
    }

    hand.validate();
    return hand;
}

inline HandModel load_hand_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open hand config '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("config '" + path + "': " + e.what());
    }
    return parse_hand_config(doc);
}

inline nlohmann::json serialize_hand_config(const HandModel& hand) {
    nlohmann::json doc;
    doc["gravity_m_s2"] = hand.gravity;
    doc["fingers"] = nlohmann::json::array();
    for (const Finger& f : hand.fingers) {
        nlohmann::json fj;
        fj["name"] = f.name;
        fj["lengths_mm"] = detail::scaled(f.chain.lengths, 1e3);
        fj["masses_kg"] = f.chain.masses;
        fj["com_offsets_mm"] = detail::scaled(f.chain.com_offsets, 1e3);
        fj["inertias_kg_m2"] = f.chain.inertias;
        fj["tendon"] = {{"pulley_radius_mm", f.tendon.pulley_radius * 1e3},
                        {"actuator_radius_mm", f.tendon.actuator_radius * 1e3},
                        {"allowable_stress_mpa", f.tendon.allowable_stress / 1e6},
                        {"friction_mu", f.tendon.friction_mu},
                        {"max_grip_force_n", f.tendon.max_grip_force}};
        doc["fingers"].push_back(std::move(fj));
    }
    return doc;
}

inline void save_hand_config(const HandModel& hand, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot write hand config '" + path + "'");
    out << serialize_hand_config(hand).dump(2) << '\n';
}

}  // namespace grip
