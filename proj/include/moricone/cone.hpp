#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moricone/divisor.hpp"
#include "moricone/rat.hpp"

namespace moricone {

// Facets of the Moriwaki cone, identified by integer ids:
// -1 is the a >= 0 facet, i >= 0 is the facet dual to delta_i.
inline constexpr int facet_nonneg_a = -1;

inline std::vector<int> all_facets(int genus) {
    std::vector<int> out{facet_nonneg_a};
    for (int i = 0; i <= genus / 2; ++i) {
        out.push_back(i);
    }
    return out;
}

inline std::string facet_name(int facet) {
    return facet == facet_nonneg_a ? "NonnegA"
                                   : "Delta" + std::to_string(facet);
}

// Upper-bound coefficient of the facet's inequality: the class is inside
// the cone when a >= bound_coefficient(facet) * b_facet for every boundary
// facet (and a >= 0).
inline Rat facet_bound_coefficient(int genus, int facet) {
    if (facet == 0) {
        return make_rat(8 * genus + 4, genus);
    }
    return make_rat(2 * genus + 1, Int(facet) * (genus - facet));
}

enum class MoriwakiVerdict { Outside, Boundary, StrictInterior };

inline std::string verdict_name(MoriwakiVerdict verdict) {
    switch (verdict) {
        case MoriwakiVerdict::Outside: return "Outside";
        case MoriwakiVerdict::Boundary: return "Boundary";
        default: return "StrictInterior";
    }
}

struct MoriwakiClassification {
    MoriwakiVerdict verdict = MoriwakiVerdict::Outside;
    std::vector<int> violated;  // facets whose inequality fails strictly
    std::vector<int> active;    // facets met with equality
};

// Inequality route: a >= 0, a >= (8g+4) b_0 / g, and
// a >= (2g+1) b_i / (i(g-i)) for i = 1..floor(g/2).
inline MoriwakiClassification classify_moriwaki(const DivisorClass& divisor) {
    MoriwakiClassification result;
    const int genus = divisor.genus;
    auto record = [&result](int facet, const Rat& lhs, const Rat& rhs) {
        if (lhs < rhs) {
            result.violated.push_back(facet);
        } else if (lhs == rhs) {
            result.active.push_back(facet);
        }
    };
    record(facet_nonneg_a, divisor.a, Rat(0));
    for (int i = 0; i <= genus / 2; ++i) {
        record(i, divisor.a, facet_bound_coefficient(genus, i) * divisor.b[i]);
    }
    result.verdict = !result.violated.empty() ? MoriwakiVerdict::Outside
                     : !result.active.empty() ? MoriwakiVerdict::Boundary
                                              : MoriwakiVerdict::StrictInterior;
    return result;
}

// A 1-cycle class pairing as D . C = a * lam - sum_i b_i * del_i.
struct CurveClass {
    int genus = 0;
    Rat lam;
    std::vector<Rat> del;

    bool operator==(const CurveClass& other) const = default;
};

inline Rat intersect(const DivisorClass& divisor, const CurveClass& curve) {
    if (divisor.genus != curve.genus) {
        throw DomainError("genus-mismatch",
                          "cannot pair classes of genus " +
                              std::to_string(divisor.genus) + " and " +
                              std::to_string(curve.genus));
    }
    Rat total = divisor.a * curve.lam;
    for (int i = 0; i < boundary_slots(divisor.genus); ++i) {
        total -= divisor.b[i] * curve.del[i];
    }
    return total;
}

// Dual curve of a facet, normalized so that D . curve >= 0 is exactly the
// facet inequality: C = (1; 0,...), C_0 = (g; 8g+4, 0,...),
// C_i = (i(g-i); 0,..., 2g+1, ..., 0).
inline CurveClass dual_curve(int genus, int facet) {
    if (genus < 3) {
        throw DomainError("genus-too-small",
                          "curve classes need genus >= 3, got " +
                              std::to_string(genus));
    }
    CurveClass curve;
    curve.genus = genus;
    curve.del.assign(boundary_slots(genus), Rat(0));
    if (facet == facet_nonneg_a) {
        curve.lam = 1;
        return curve;
    }
    if (facet < 0 || facet > genus / 2) {
        throw DomainError("index-out-of-range",
                          "no facet " + std::to_string(facet) + " at genus " +
                              std::to_string(genus));
    }
    if (facet == 0) {
        curve.lam = genus;
        curve.del[0] = 8 * genus + 4;
    } else {
        curve.lam = Rat(Int(facet) * (genus - facet));
        curve.del[facet] = 2 * genus + 1;
    }
    return curve;
}

// All dual curves in facet order: NonnegA, Delta0, Delta1, ...
inline std::vector<CurveClass> moriwaki_curve_classes(int genus) {
    std::vector<CurveClass> out;
    for (int facet : all_facets(genus)) {
        out.push_back(dual_curve(genus, facet));
    }
    return out;
}

// Splits an inside-the-cone class as D = beta M + E with beta = a/(8g+4)
// and E supported on the boundary with nonnegative natural coefficients.
inline std::pair<Rat, DivisorClass> moriwaki_decompose(
    const DivisorClass& divisor) {
    const auto classification = classify_moriwaki(divisor);
    if (classification.verdict == MoriwakiVerdict::Outside) {
        throw DomainError("not-an-M-divisor",
                          "decomposition needs a class inside the cone");
    }
    const Rat beta = divisor.a / Rat(8 * divisor.genus + 4);
    const DivisorClass rest = linear_combination(
        {{Rat(1), divisor}, {-beta, moriwaki_divisor(divisor.genus)}});
    return {beta, rest};
}

enum class BaseLocusStatement {
    BplusInBoundary,
    BminusInBoundary,
    BminusMeetsInterior,
    BplusEqualsBoundary,
};

inline std::string base_locus_statement_name(BaseLocusStatement statement) {
    switch (statement) {
        case BaseLocusStatement::BplusInBoundary: return "BplusInBoundary";
        case BaseLocusStatement::BminusInBoundary: return "BminusInBoundary";
        case BaseLocusStatement::BminusMeetsInterior:
            return "BminusMeetsInterior";
        default: return "BplusEqualsBoundary";
    }
}

struct BaseLocusPrediction {
    BaseLocusStatement statement = BaseLocusStatement::BminusMeetsInterior;
    std::string justification;
};

inline BaseLocusPrediction predict_base_locus(const DivisorClass& divisor) {
    if (is_satake_type(divisor)) {
        // Big with effective boundary part, so the augmented base locus
        // fills the whole boundary and nothing more.
        return {BaseLocusStatement::BplusEqualsBoundary,
                "satake-effective-boundary"};
    }
    switch (classify_moriwaki(divisor).verdict) {
        case MoriwakiVerdict::StrictInterior:
            return {BaseLocusStatement::BplusInBoundary,
                    "strict-moriwaki-augmented-base-locus"};
        case MoriwakiVerdict::Boundary:
            return {BaseLocusStatement::BminusInBoundary,
                    "moriwaki-restricted-base-locus"};
        default:
            return {BaseLocusStatement::BminusMeetsInterior,
                    "non-moriwaki-restricted-base-locus"};
    }
}

// Section of the nef / Moriwaki / pseudoeffective cones with the plane
// spanned by lambda and delta. Ray (a, b) means a*lambda - b*delta, stored
// as primitive integer coordinates.
struct SectionRays {
    int genus = 0;
    DivisorClass plane_lambda;
    DivisorClass plane_delta;
    std::vector<std::pair<Int, Int>> nef;
    std::vector<std::pair<Int, Int>> mor;
    std::vector<std::pair<Int, Int>> psef;  // empty when the slope is unknown
};

inline std::pair<Int, Int> primitive_ray(const Rat& ratio) {
    return {numerator(ratio), denominator(ratio)};
}

inline SectionRays cone_section(int genus, const std::optional<Rat>& slope_sg,
                                const Rat& nef_bound) {
    if (genus < 3) {
        throw DomainError("genus-too-small",
                          "cone sections need genus >= 3, got " +
                              std::to_string(genus));
    }
    if (!(nef_bound > 0) || (slope_sg && !(*slope_sg > 0))) {
        throw DomainError("invalid-config",
                          "section slopes must be positive rationals");
    }
    SectionRays section;
    section.genus = genus;
    section.plane_lambda = lambda_class(genus);
    section.plane_delta = delta_total(genus);
    section.nef = {{1, 0}, primitive_ray(nef_bound)};
    // On the equal-coefficient plane the binding inequality is the one with
    // the largest bound coefficient; compute the maximum rather than assume
    // which facet wins.
    Rat binding = facet_bound_coefficient(genus, 0);
    for (int i = 1; i <= genus / 2; ++i) {
        binding = std::max(binding, facet_bound_coefficient(genus, i));
    }
    section.mor = {{0, -1}, primitive_ray(binding)};
    if (slope_sg) {
        section.psef = {{0, -1}, primitive_ray(*slope_sg)};
    }
    return section;
}

}  // namespace moricone
