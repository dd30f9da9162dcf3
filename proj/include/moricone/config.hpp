#pragma once

#include <map>
#include <optional>
#include <string>

#include "moricone/errors.hpp"
#include "moricone/rat.hpp"

namespace moricone {

// Tunable knobs shared by the cone-section and threshold computations.
// nef_bound is the slope of the nef boundary ray on the (lambda, delta)
// plane; slope_overrides pins the pseudoeffective slope for individual
// genera where the default table has no value (or a better one is known).
struct Config {
    Rat nef_bound = Rat(11);
    int g_max = 100;
    int d_max = 200;
    // nullopt forces "unknown" even where the default table has a value.
    std::map<int, std::optional<Rat>> slope_overrides;
};

inline Config default_config() { return {}; }

inline void validate_config(const Config& config) {
    if (!(config.nef_bound > 0)) {
        throw DomainError("invalid-config",
                          "nef_bound must be positive, got " +
                              rat_str(config.nef_bound));
    }
    if (config.g_max < 3) {
        throw DomainError("invalid-config", "g_max must be at least 3");
    }
    if (config.d_max < 3) {
        throw DomainError("invalid-config", "d_max must be at least 3");
    }
    for (const auto& [genus, slope] : config.slope_overrides) {
        if (genus < 3 || (slope && !(*slope > 0))) {
            throw DomainError("invalid-config",
                              "slope overrides need genus >= 3 and a positive "
                              "slope");
        }
    }
}

// Pseudoeffective slope for genus g: an override when present, the
// divisor-class default 6 + 12/(g+1) when g+1 is composite, and unknown
// otherwise.
inline std::optional<Rat> slope_for(const Config& config, int genus) {
    if (genus < 3) {
        throw DomainError("genus-too-small",
                          "slopes need genus >= 3, got " +
                              std::to_string(genus));
    }
    if (auto it = config.slope_overrides.find(genus);
        it != config.slope_overrides.end()) {
        return it->second;  // may be a forced "unknown"
    }
    const int n = genus + 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            return Rat(6) + make_rat(12, n);
        }
    }
    return std::nullopt;
}

}  // namespace moricone
