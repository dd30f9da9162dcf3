#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moricone/petri.hpp"
#include "moricone/rat.hpp"

namespace moricone {

// Number of boundary coordinates delta_0..delta_floor(g/2).
inline int boundary_slots(int genus) { return genus / 2 + 1; }

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

// A divisor class a*lambda - sum_i b_i delta_i on the genus-g moduli space.
// The stored b_i are the negated natural boundary coefficients, so the
// Moriwaki inequalities read as upper bounds on the b_i.
struct DivisorClass {
    int genus = 0;
    Rat a;
    std::vector<Rat> b;

    bool operator==(const DivisorClass& other) const = default;
};

inline DivisorClass make_divisor(int genus, Rat a, std::vector<Rat> b) {
    if (genus < 3) {
        throw DomainError("genus-too-small",
                          "divisor classes need genus >= 3, got " +
                              std::to_string(genus));
    }
    if (static_cast<int>(b.size()) != boundary_slots(genus)) {
        throw DomainError("wrong-coefficient-count",
                          "genus " + std::to_string(genus) + " needs " +
                              std::to_string(boundary_slots(genus)) +
                              " boundary coefficients, got " +
                              std::to_string(b.size()));
    }
    return DivisorClass{genus, std::move(a), std::move(b)};
}

inline DivisorClass zero_divisor(int genus) {
    return make_divisor(genus, 0, std::vector<Rat>(boundary_slots(genus), 0));
}

inline DivisorClass lambda_class(int genus) {
    return make_divisor(genus, 1, std::vector<Rat>(boundary_slots(genus), 0));
}

// The total boundary delta = sum_i delta_i (stored coefficients are -1).
inline DivisorClass delta_total(int genus) {
    return make_divisor(genus, 0, std::vector<Rat>(boundary_slots(genus), -1));
}

inline DivisorClass delta_component(int genus, int i) {
    if (i < 0 || i >= boundary_slots(genus)) {
        throw DomainError("index-out-of-range",
                          "delta_" + std::to_string(i) + " does not exist at genus " +
                              std::to_string(genus));
    }
    std::vector<Rat> b(boundary_slots(genus), 0);
    b[i] = -1;
    return make_divisor(genus, 0, std::move(b));
}

// M = (8g+4) lambda - g delta_0 - sum_{i>=1} 4i(g-i) delta_i.
inline DivisorClass moriwaki_divisor(int genus) {
    std::vector<Rat> b;
    b.reserve(boundary_slots(genus));
    b.emplace_back(genus);
    for (int i = 1; i <= genus / 2; ++i) {
        b.emplace_back(Int(4) * i * (genus - i));
    }
    return make_divisor(genus, Rat(8 * genus + 4), std::move(b));
}

// K = 13 lambda - 2 delta_0 - 3 delta_1 - 2 delta_2 - ... - 2 delta_floor(g/2).
inline DivisorClass canonical_divisor(int genus) {
    std::vector<Rat> b(boundary_slots(genus), 2);
    if (boundary_slots(genus) > 1) b[1] = 3;
    return make_divisor(genus, 13, std::move(b));
}

// The log canonical ray K_alpha = 13 lambda - (2-alpha) delta, 0 <= alpha <= 1.
inline DivisorClass k_alpha(int genus, const Rat& alpha) {
    if (alpha < 0 || alpha > 1) {
        throw DomainError("alpha-out-of-range",
                          "alpha must lie in [0,1], got " + rat_str(alpha));
    }
    return make_divisor(genus, 13,
                        std::vector<Rat>(boundary_slots(genus), 2 - alpha));
}

enum class WitnessKind { BrillNoether, PetriHat };

inline std::string witness_kind_name(WitnessKind kind) {
    return kind == WitnessKind::BrillNoether ? "BrillNoether" : "PetriHat";
}

// An effective divisor class alpha*lambda - sum beta_i delta_i used as the
// bigness witness. beta_i are stored in base.b and are all positive.
struct WitnessClass {
    WitnessKind kind = WitnessKind::BrillNoether;
    DivisorClass base;
    int r = 0;  // BrillNoether: (r+1)(s-1) = g+1
    int s = 0;
    int d = 0;                // PetriHat: g = 2(d-1)
    std::vector<Rat> gammas;  // PetriHat: gamma_i for i = 3..d-1

    const Rat& alpha() const { return base.a; }
    const std::vector<Rat>& beta() const { return base.b; }
};

namespace detail {
inline void require_positive_witness(const WitnessClass& witness) {
    if (!(witness.base.a > 0)) {
        throw DomainError("internal-inconsistency",
                          "witness lambda coefficient must be positive");
    }
    for (const Rat& beta : witness.base.b) {
        if (!(beta > 0)) {
            throw DomainError("internal-inconsistency",
                              "witness boundary coefficients must be positive");
        }
    }
}
}  // namespace detail

// Scaled Brill-Noether divisor for composite g+1 = (r+1)(s-1), s >= 3,
// r >= 1, smallest admissible s:
//   (g+3) lambda - (g+1)/6 delta_0 - sum_{i>=1} i(g-i) delta_i.
inline WitnessClass brill_noether_class(int genus) {
    if (genus < 3) {
        throw DomainError("genus-too-small",
                          "witnesses need genus >= 3, got " + std::to_string(genus));
    }
    if (is_prime(genus + 1)) {
        throw DomainError("g-plus-one-prime",
                          "no Brill-Noether witness at genus " +
                              std::to_string(genus));
    }
    int smallest = 0;
    for (int p = 2; p * p <= genus + 1; ++p) {
        if ((genus + 1) % p == 0) {
            smallest = p;
            break;
        }
    }
    WitnessClass witness;
    witness.kind = WitnessKind::BrillNoether;
    witness.s = smallest + 1;
    witness.r = (genus + 1) / smallest - 1;
    std::vector<Rat> beta;
    beta.reserve(boundary_slots(genus));
    beta.push_back(make_rat(genus + 1, 6));
    for (int i = 1; i <= genus / 2; ++i) {
        beta.emplace_back(Int(i) * (genus - i));
    }
    witness.base = make_divisor(genus, Rat(genus + 3), std::move(beta));
    detail::require_positive_witness(witness);
    return witness;
}

// Truncated Petri divisor for prime g+1 (forcing g even), d = g/2 + 1:
//   (6d^2+d-6) lambda - d(d-1) delta_0 - (2d-3)(3d-2) delta_1
//   - 3(d-2)(4d-3) delta_2 - sum_{i>=3} f_hat_i delta_i,
// with the nonnegative gamma_i tails recorded separately.
inline WitnessClass petri_hat_class(int genus) {
    if (genus < 3) {
        throw DomainError("genus-too-small",
                          "witnesses need genus >= 3, got " + std::to_string(genus));
    }
    if (!is_prime(genus + 1)) {
        throw DomainError("g-plus-one-not-prime",
                          "no Petri witness at genus " + std::to_string(genus));
    }
    if (genus % 2 != 0) {
        throw DomainError("g-odd", "Petri witness needs even genus, got " +
                                       std::to_string(genus));
    }
    const int d = genus / 2 + 1;
    WitnessClass witness;
    witness.kind = WitnessKind::PetriHat;
    witness.d = d;
    std::vector<Rat> beta;
    beta.reserve(boundary_slots(genus));
    beta.emplace_back(Int(d) * (d - 1));
    if (d >= 2) beta.emplace_back(Int(2 * d - 3) * (3 * d - 2));
    if (d >= 3) beta.emplace_back(Int(3) * (d - 2) * (4 * d - 3));
    for (int i = 3; i <= d - 1; ++i) {
        beta.push_back(f_hat(d, i));
    }
    if (d - 1 >= 3) {
        witness.gammas = gamma_row(d - 1);
    }
    witness.base =
        make_divisor(genus, Int(6) * d * d + d - 6, std::move(beta));
    detail::require_positive_witness(witness);
    return witness;
}

inline DivisorClass linear_combination(
    const std::vector<std::pair<Rat, DivisorClass>>& terms) {
    if (terms.empty()) {
        throw DomainError("empty-list", "linear combination of no terms");
    }
    const int genus = terms.front().second.genus;
    DivisorClass out = zero_divisor(genus);
    for (const auto& [coeff, divisor] : terms) {
        if (divisor.genus != genus) {
            throw DomainError("genus-mismatch",
                              "cannot combine classes of genus " +
                                  std::to_string(genus) + " and " +
                                  std::to_string(divisor.genus));
        }
        out.a += coeff * divisor.a;
        for (int i = 0; i < boundary_slots(genus); ++i) {
            out.b[i] += coeff * divisor.b[i];
        }
    }
    return out;
}

// Slope a / min_i b_i, defined when every stored b_i is positive.
inline Rat slope(const DivisorClass& divisor) {
    Rat smallest;
    bool first = true;
    for (const Rat& b : divisor.b) {
        if (!(b > 0)) {
            throw DomainError("nonpositive-boundary-coefficient",
                              "slope needs every b_i > 0, found " + rat_str(b));
        }
        if (first || b < smallest) {
            smallest = b;
            first = false;
        }
    }
    return divisor.a / smallest;
}

inline bool is_zero(const DivisorClass& divisor) {
    if (divisor.a != 0) return false;
    for (const Rat& b : divisor.b) {
        if (b != 0) return false;
    }
    return true;
}

// Positive lambda part plus effective boundary: a > 0 and all stored b_i <= 0.
inline bool is_satake_type(const DivisorClass& divisor) {
    if (!(divisor.a > 0)) return false;
    for (const Rat& b : divisor.b) {
        if (b > 0) return false;
    }
    return true;
}

inline std::vector<Rat> natural_delta_coefficients(const DivisorClass& divisor) {
    std::vector<Rat> out;
    out.reserve(divisor.b.size());
    for (const Rat& b : divisor.b) {
        out.push_back(-b);
    }
    return out;
}

// The positive ratio t with first = t * second, when it exists.
inline std::optional<Rat> proportional_to(const DivisorClass& first,
                                          const DivisorClass& second) {
    if (first.genus != second.genus) {
        throw DomainError("genus-mismatch",
                          "cannot compare classes of genus " +
                              std::to_string(first.genus) + " and " +
                              std::to_string(second.genus));
    }
    if (is_zero(second)) {
        throw DomainError("zero-class", "proportionality against the zero class");
    }
    std::optional<Rat> ratio;
    auto feed = [&](const Rat& lhs, const Rat& rhs) -> bool {
        if (rhs == 0) return lhs == 0;
        const Rat t = lhs / rhs;
        if (!ratio) ratio = t;
        return *ratio == t;
    };
    if (!feed(first.a, second.a)) return std::nullopt;
    for (int i = 0; i < boundary_slots(first.genus); ++i) {
        if (!feed(first.b[i], second.b[i])) return std::nullopt;
    }
    if (!ratio || !(*ratio > 0)) return std::nullopt;
    return ratio;
}

}  // namespace moricone
