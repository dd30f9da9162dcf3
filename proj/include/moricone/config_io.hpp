#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "moricone/config.hpp"
#include "moricone/errors.hpp"
#include "moricone/rat.hpp"

namespace moricone {

namespace detail {

inline Rat rat_from_json(const nlohmann::json& value, const std::string& key) {
    if (value.is_number_integer()) {
        return Rat(Int(value.get<long long>()));
    }
    if (value.is_string()) {
        return parse_rat(value.get<std::string>());
    }
    throw ParseError("bad-config-json",
                     "expected an integer or a \"p/q\" string for " + key);
}

}  // namespace detail

// Reads a JSON config. Recognized keys: nef_bound (integer or "p/q"),
// g_max, d_max (integers), slope_table (object mapping a genus to a
// rational or the string "unknown"). Unknown keys are rejected so typos
// surface instead of silently reverting to defaults.
inline Config parse_config_json(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw ParseError("bad-config-json", "config root must be an object");
    }
    Config config;
    for (const auto& [key, value] : doc.items()) {
        if (key == "nef_bound") {
            config.nef_bound = detail::rat_from_json(value, key);
        } else if (key == "g_max" || key == "d_max") {
            if (!value.is_number_integer()) {
                throw ParseError("bad-config-json", key + " must be an integer");
            }
            (key == "g_max" ? config.g_max : config.d_max) =
                value.get<int>();
        } else if (key == "slope_table") {
            if (!value.is_object()) {
                throw ParseError("bad-config-json",
                                 "slope_table must be an object");
            }
            for (const auto& [genus_text, slope] : value.items()) {
                int genus = 0;
                try {
                    std::size_t used = 0;
                    genus = std::stoi(genus_text, &used);
                    if (used != genus_text.size()) {
                        throw std::invalid_argument(genus_text);
                    }
                } catch (const std::exception&) {
                    throw ParseError("bad-config-json",
                                     "slope_table key is not a genus: " +
                                         genus_text);
                }
                if (slope.is_string() &&
                    slope.get<std::string>() == "unknown") {
                    config.slope_overrides[genus] = std::nullopt;
                } else {
                    config.slope_overrides[genus] =
                        detail::rat_from_json(slope, "slope_table entry");
                }
            }
        } else {
            throw ParseError("bad-config-json", "unrecognized key: " + key);
        }
    }
    validate_config(config);
    return config;
}

// Missing file: defaults when the path was implicit, an error when the user
// asked for that file explicitly.
inline Config load_config(const std::string& path, bool required) {
    std::ifstream in(path);
    if (!in) {
        if (required) {
            throw ParseError("config-not-found", path);
        }
        return default_config();
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError("bad-config-json",
                         path + ": " + std::string(err.what()));
    }
    return parse_config_json(doc);
}

}  // namespace moricone
