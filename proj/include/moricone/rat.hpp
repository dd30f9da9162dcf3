#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "moricone/errors.hpp"

namespace moricone {

// Every scalar in this library is an exact rational. Rat is kept in
// canonical form by the backend: lowest terms, denominator > 0.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(Int num, Int den) {
    if (den == 0) {
        throw DomainError("zero-denominator", "rational with denominator 0");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den));
}

// Accepts "p" or "p/q" with an optional leading minus sign. Anything else
// (decimals, whitespace, trailing junk, zero denominator) is rejected.
inline Rat parse_rat(const std::string& text) {
    if (text.empty()) {
        // The backend parses "" as 0; an absent token is a user error.
        throw ParseError("bad-rational", "empty rational");
    }
    try {
        return Rat(text);
    } catch (const std::exception&) {
        throw ParseError("bad-rational", "cannot parse '" + text + "' as p/q");
    }
}

// Canonical rendering: "p" when the denominator is 1, otherwise "p/q".
inline std::string rat_str(const Rat& r) { return r.str(); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Floor of the square root of a nonnegative integer.
inline Int isqrt_floor(const Int& n) {
    if (n < 0) {
        throw DomainError("negative-radicand", "isqrt of " + n.str());
    }
    return boost::multiprecision::sqrt(n);
}

}  // namespace moricone
