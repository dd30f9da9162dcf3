#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moricone/divisor.hpp"
#include "moricone/petri.hpp"
#include "moricone/rat.hpp"

namespace moricone {

// One exact comparison recorded in a certificate: lhs <relation> rhs.
struct SideCondition {
    std::string name;
    Rat lhs;
    Rat rhs;
    std::string relation;  // "<", ">" or ">="
    bool holds = false;
};

struct FailedCondition {
    std::string name;
    Rat lhs;
    Rat rhs;
    std::string relation;
};

// Non-certification is a value, not an error.
struct FailureReport {
    std::vector<FailedCondition> failed;
};

// Witnessed decomposition subject = lambda_part * lambda + v * witness
// + sum_i boundary_part[i] * delta_i with lambda_part > 0 and every
// boundary coefficient nonnegative.
struct BignessCertificate {
    DivisorClass subject;
    WitnessClass witness;
    Rat v;
    Rat lambda_part;
    std::vector<Rat> boundary_part;
    std::vector<SideCondition> side_conditions;
};

struct CriterionResult {
    std::optional<BignessCertificate> certificate;
    std::optional<FailureReport> failure;

    bool certified() const { return certificate.has_value(); }
};

namespace detail {

inline SideCondition make_condition(std::string name, Rat lhs, Rat rhs,
                                    std::string relation) {
    SideCondition condition;
    condition.name = std::move(name);
    condition.lhs = std::move(lhs);
    condition.rhs = std::move(rhs);
    condition.relation = std::move(relation);
    condition.holds = condition.relation == "<"    ? condition.lhs < condition.rhs
                      : condition.relation == ">=" ? condition.lhs >= condition.rhs
                                                   : condition.lhs > condition.rhs;
    return condition;
}

}  // namespace detail

// Sufficient bigness test. Checks
//   (A)   alpha > 0,
//   (B_i) beta_i > 0,
//   (C_i) alpha * b_i < a * beta_i,
// then picks v = max(0, max_i b_i / beta_i), which the conditions force
// below a / alpha, and emits the decomposition with exact coefficients.
inline CriterionResult check_criterion(const DivisorClass& subject,
                                       const WitnessClass& witness) {
    if (subject.genus != witness.base.genus) {
        throw DomainError("genus-mismatch",
                          "subject and witness live at different genera");
    }
    if (!(subject.a > 0)) {
        throw DomainError("nonpositive-lambda-coefficient",
                          "criterion needs a > 0, got " + rat_str(subject.a));
    }
    const Rat& a = subject.a;
    const Rat& alpha = witness.alpha();
    const std::vector<Rat>& beta = witness.beta();
    const int slots = boundary_slots(subject.genus);

    std::vector<SideCondition> conditions;
    conditions.push_back(detail::make_condition("A", alpha, Rat(0), ">"));
    for (int i = 0; i < slots; ++i) {
        conditions.push_back(detail::make_condition("B_" + std::to_string(i),
                                                    beta[i], Rat(0), ">"));
    }
    for (int i = 0; i < slots; ++i) {
        conditions.push_back(detail::make_condition("C_" + std::to_string(i),
                                                    alpha * subject.b[i],
                                                    a * beta[i], "<"));
    }

    FailureReport failure;
    for (const SideCondition& condition : conditions) {
        if (!condition.holds) {
            failure.failed.push_back({condition.name, condition.lhs,
                                      condition.rhs, condition.relation});
        }
    }
    if (!failure.failed.empty()) {
        CriterionResult result;
        result.failure = std::move(failure);
        return result;
    }

    Rat v(0);
    for (int i = 0; i < slots; ++i) {
        const Rat ratio = subject.b[i] / beta[i];
        if (ratio > v) {
            v = ratio;
        }
    }
    if (!(v < a / alpha)) {
        throw DomainError("internal-inconsistency",
                          "v bound violated despite passing conditions");
    }

    BignessCertificate certificate;
    certificate.subject = subject;
    certificate.witness = witness;
    certificate.v = v;
    certificate.lambda_part = a - v * alpha;
    certificate.boundary_part.reserve(slots);
    for (int i = 0; i < slots; ++i) {
        certificate.boundary_part.push_back(v * beta[i] - subject.b[i]);
    }
    certificate.side_conditions = std::move(conditions);
    if (witness.kind == WitnessKind::PetriHat) {
        for (std::size_t j = 0; j < witness.gammas.size(); ++j) {
            certificate.side_conditions.push_back(detail::make_condition(
                "gamma_" + std::to_string(j + 3), witness.gammas[j], Rat(0),
                ">="));
        }
    }

    // Soundness: the emitted coefficients must rebuild the subject exactly.
    std::vector<std::pair<Rat, DivisorClass>> terms;
    terms.emplace_back(certificate.lambda_part, lambda_class(subject.genus));
    terms.emplace_back(v, witness.base);
    for (int i = 0; i < slots; ++i) {
        terms.emplace_back(certificate.boundary_part[i],
                           delta_component(subject.genus, i));
    }
    if (linear_combination(terms) != subject) {
        throw DomainError("internal-inconsistency",
                          "certificate decomposition does not reconstruct");
    }

    CriterionResult result;
    result.certificate = std::move(certificate);
    return result;
}

// Brill-Noether witness when g+1 is composite, truncated Petri witness when
// g+1 is prime (which forces g even). Petri gamma values come back already
// recomputed; reject any negative one outright.
inline WitnessClass construct_witness(int genus) {
    if (genus < 3) {
        throw DomainError("genus-too-small",
                          "witnesses need genus >= 3, got " +
                              std::to_string(genus));
    }
    if (!is_prime(genus + 1)) {
        return brill_noether_class(genus);
    }
    WitnessClass witness = petri_hat_class(genus);
    for (const Rat& gamma : witness.gammas) {
        if (gamma < 0) {
            throw DomainError("internal-inconsistency",
                              "negative gamma in Petri witness at genus " +
                                  std::to_string(genus));
        }
    }
    return witness;
}

// Full pipeline for the distinguished boundary ray: certifies the Moriwaki
// divisor big at every genus >= 3. Petri certificates also carry the strict
// coefficient inequalities used downstream.
inline BignessCertificate certify_moriwaki_big(int genus) {
    const WitnessClass witness = construct_witness(genus);
    CriterionResult result =
        check_criterion(moriwaki_divisor(genus), witness);
    if (!result.certified()) {
        throw DomainError("internal-inconsistency",
                          "criterion failed for the Moriwaki divisor at genus " +
                              std::to_string(genus));
    }
    BignessCertificate certificate = std::move(*result.certificate);
    if (witness.kind == WitnessKind::PetriHat) {
        const Ecco1Report ecco = check_ecco1(witness.d);
        for (const Ecco1Check& check : ecco.checks) {
            certificate.side_conditions.push_back(detail::make_condition(
                "ecco1_" + std::to_string(check.i), check.lhs, check.rhs,
                ">"));
        }
    }
    return certificate;
}

}  // namespace moricone
