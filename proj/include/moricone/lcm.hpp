#pragma once

#include <optional>
#include <string>
#include <utility>

#include "moricone/cone.hpp"
#include "moricone/config.hpp"
#include "moricone/divisor.hpp"
#include "moricone/rat.hpp"

namespace moricone {

// Threshold separating the three regimes of the alpha-parameter model maps:
// (3g+8)/(8g+4), always in lowest terms.
inline Rat alpha_threshold(int genus) {
    if (genus < 3) {
        throw DomainError("genus-too-small",
                          "thresholds need genus >= 3, got " +
                              std::to_string(genus));
    }
    return make_rat(3 * genus + 8, 8 * genus + 4);
}

enum class AlphaRegime {
    IsoOverMg,
    ContractsHyperelliptic,
    HyperellipticInBminus,
};

inline std::string alpha_regime_name(AlphaRegime regime) {
    switch (regime) {
        case AlphaRegime::IsoOverMg: return "IsoOverMg";
        case AlphaRegime::ContractsHyperelliptic:
            return "ContractsHyperelliptic";
        default: return "HyperellipticInBminus";
    }
}

struct AlphaClassification {
    Rat alpha;
    AlphaRegime regime = AlphaRegime::HyperellipticInBminus;
    bool ample = false;
    bool nef = false;
    std::optional<bool> big;  // unset when the slope at this genus is unknown
    Rat alpha_star;
    Rat alpha_nef;
    std::optional<Rat> alpha_psef;
};

// Places alpha against the regime threshold and the positivity thresholds
// induced by the configured slopes. On the 13*lambda - (2-alpha)*delta ray
// the slope is 13/(2-alpha), so slope >= bound solves to
// alpha >= 2 - 13/bound.
inline AlphaClassification classify_alpha(int genus, const Rat& alpha,
                                          const Config& config) {
    if (alpha < 0 || alpha > 1) {
        throw DomainError("alpha-out-of-range",
                          "alpha must lie in [0, 1], got " + rat_str(alpha));
    }
    validate_config(config);
    AlphaClassification out;
    out.alpha = alpha;
    out.alpha_star = alpha_threshold(genus);
    out.regime = alpha > out.alpha_star
                     ? AlphaRegime::IsoOverMg
                 : alpha == out.alpha_star
                     ? AlphaRegime::ContractsHyperelliptic
                     : AlphaRegime::HyperellipticInBminus;
    out.ample = alpha == 1;
    out.alpha_nef = Rat(2) - Rat(13) / config.nef_bound;
    out.nef = alpha >= out.alpha_nef;
    if (const auto slope = slope_for(config, genus)) {
        out.alpha_psef = Rat(2) - Rat(13) / *slope;
        out.big = alpha > *out.alpha_psef;
    }
    return out;
}

enum class ObstructionVerdict { NoZariskiDecomposition, NoObstruction };

inline std::string obstruction_verdict_name(ObstructionVerdict verdict) {
    return verdict == ObstructionVerdict::NoZariskiDecomposition
               ? "NoZariskiDecomposition"
               : "NoObstruction";
}

struct ObstructionReport {
    DivisorClass subject;
    bool kappa_hypothesis = false;
    ObstructionVerdict verdict = ObstructionVerdict::NoObstruction;
    std::optional<int> witness_facet;
    std::optional<CurveClass> witness_curve;
    std::optional<Rat> pairing;
    std::string narrative;
};

namespace detail {

inline constexpr const char* obstruction_text_canonical =
    "Granting that the canonical class has nonnegative Iitaka dimension "
    "here, it pairs nonpositively with a curve class that any Zariski "
    "decomposition with pulled-back nef positive part would have to meet "
    "positively. No such decomposition exists, so a minimal-model run for "
    "this space cannot proceed by divisorial contractions alone: at some "
    "step it must flip.";

inline constexpr const char* obstruction_text_generic =
    "Granting the hypothesis that this class has nonnegative Iitaka "
    "dimension and moves, a Zariski decomposition with nef positive part "
    "pulled back from a birational model would force the class strictly "
    "inside the inequality cone. The witness curve pairs nonpositively, so "
    "no such decomposition exists.";

inline constexpr const char* obstruction_text_none =
    "No obstruction from this test: either the hypothesis on the Iitaka "
    "dimension was not granted, or the class sits strictly inside the "
    "inequality cone and the test is silent.";

}  // namespace detail

// A class with kappa >= 1 that fails strict interiority cannot have a
// Zariski decomposition whose nef part is pulled back from any birational
// model. The witness facet is the first violated one (first active one when
// none is violated), and its dual curve pairs nonpositively with the
// subject.
inline ObstructionReport zariski_obstruction(const DivisorClass& subject,
                                             bool kappa_at_least_one) {
    ObstructionReport report;
    report.subject = subject;
    report.kappa_hypothesis = kappa_at_least_one;
    const MoriwakiClassification classification = classify_moriwaki(subject);
    if (!kappa_at_least_one ||
        classification.verdict == MoriwakiVerdict::StrictInterior) {
        report.verdict = ObstructionVerdict::NoObstruction;
        report.narrative = detail::obstruction_text_none;
        return report;
    }
    report.verdict = ObstructionVerdict::NoZariskiDecomposition;
    const int facet = !classification.violated.empty()
                          ? classification.violated.front()
                          : classification.active.front();
    report.witness_facet = facet;
    report.witness_curve = dual_curve(subject.genus, facet);
    report.pairing = intersect(subject, *report.witness_curve);
    report.narrative = subject == canonical_divisor(subject.genus)
                           ? detail::obstruction_text_canonical
                           : detail::obstruction_text_generic;
    return report;
}

}  // namespace moricone
