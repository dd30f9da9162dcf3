#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "moricone/bigness.hpp"
#include "moricone/cone.hpp"
#include "moricone/config.hpp"
#include "moricone/divisor.hpp"
#include "moricone/lcm.hpp"
#include "moricone/petri.hpp"
#include "moricone/version.hpp"

namespace moricone {

using ordered_json = nlohmann::ordered_json;

// Every number in an outputs block carries one of these tags:
//   formula - fixed coefficient data of a named class or threshold
//   derived - computed by this tool from its inputs
//   config  - taken from configuration or echoed from user input
namespace provenance {
inline constexpr const char* formula = "formula";
inline constexpr const char* derived = "derived";
inline constexpr const char* config = "config";
}  // namespace provenance

inline ordered_json tag_rat(const Rat& value, const char* prov) {
    return ordered_json{{"value", rat_str(value)}, {"provenance", prov}};
}

inline ordered_json tag_int(long long value, const char* prov) {
    return ordered_json{{"value", value}, {"provenance", prov}};
}

inline ordered_json rat_list(const std::vector<Rat>& values, const char* prov) {
    ordered_json arr = ordered_json::array();
    for (const Rat& value : values) {
        arr.push_back(tag_rat(value, prov));
    }
    return arr;
}

inline ordered_json divisor_json(const DivisorClass& divisor,
                                 const char* prov) {
    ordered_json out;
    out["genus"] = tag_int(divisor.genus, prov);
    out["a"] = tag_rat(divisor.a, prov);
    out["b"] = rat_list(divisor.b, prov);
    return out;
}

inline ordered_json curve_json(const CurveClass& curve, const char* prov) {
    ordered_json out;
    out["genus"] = tag_int(curve.genus, prov);
    out["lam"] = tag_rat(curve.lam, prov);
    out["del"] = rat_list(curve.del, prov);
    out["normalization"] = "primitive-facet-normal";
    return out;
}

inline ordered_json facet_list(const std::vector<int>& facets) {
    ordered_json arr = ordered_json::array();
    for (int facet : facets) {
        arr.push_back(facet_name(facet));
    }
    return arr;
}

inline ordered_json classification_json(
    const MoriwakiClassification& classification) {
    ordered_json out;
    out["verdict"] = verdict_name(classification.verdict);
    out["violated"] = facet_list(classification.violated);
    out["active"] = facet_list(classification.active);
    return out;
}

inline ordered_json prediction_json(const BaseLocusPrediction& prediction) {
    ordered_json out;
    out["statement"] = base_locus_statement_name(prediction.statement);
    out["justification"] = prediction.justification;
    return out;
}

inline ordered_json side_condition_json(const SideCondition& condition) {
    ordered_json out;
    out["name"] = condition.name;
    out["lhs"] = tag_rat(condition.lhs, provenance::derived);
    out["relation"] = condition.relation;
    out["rhs"] = tag_rat(condition.rhs, provenance::derived);
    out["holds"] = condition.holds;
    return out;
}

inline ordered_json witness_json(const WitnessClass& witness) {
    ordered_json out;
    out["kind"] = witness_kind_name(witness.kind);
    if (witness.kind == WitnessKind::BrillNoether) {
        out["r"] = tag_int(witness.r, provenance::derived);
        out["s"] = tag_int(witness.s, provenance::derived);
    } else {
        out["d"] = tag_int(witness.d, provenance::derived);
        out["gammas"] = rat_list(witness.gammas, provenance::derived);
    }
    out["class"] = divisor_json(witness.base, provenance::formula);
    // Effectivity of the witness families is established elsewhere; this
    // tool consumes it as an input fact rather than re-deriving it.
    out["effectivity"] = "assumed-external";
    return out;
}

inline ordered_json certificate_json(const BignessCertificate& certificate,
                                     const char* subject_prov) {
    ordered_json out;
    out["genus"] = tag_int(certificate.subject.genus, provenance::config);
    out["subject"] = divisor_json(certificate.subject, subject_prov);
    out["witness"] = witness_json(certificate.witness);
    out["v"] = tag_rat(certificate.v, provenance::derived);
    out["lambda_part"] = tag_rat(certificate.lambda_part, provenance::derived);
    out["boundary_part"] =
        rat_list(certificate.boundary_part, provenance::derived);
    ordered_json conditions = ordered_json::array();
    for (const SideCondition& condition : certificate.side_conditions) {
        conditions.push_back(side_condition_json(condition));
    }
    out["side_conditions"] = std::move(conditions);
    return out;
}

inline ordered_json failure_json(const FailureReport& failure) {
    ordered_json arr = ordered_json::array();
    for (const FailedCondition& condition : failure.failed) {
        ordered_json one;
        one["name"] = condition.name;
        one["lhs"] = tag_rat(condition.lhs, provenance::derived);
        one["required"] = condition.relation;
        one["rhs"] = tag_rat(condition.rhs, provenance::derived);
        arr.push_back(std::move(one));
    }
    return ordered_json{{"failed", std::move(arr)}};
}

inline ordered_json ecco1_json(const Ecco1Report& report) {
    ordered_json out;
    out["vacuous"] = report.vacuous;
    ordered_json checks = ordered_json::array();
    for (const Ecco1Check& check : report.checks) {
        ordered_json one;
        one["i"] = tag_int(check.i, provenance::derived);
        one["lhs"] = tag_rat(check.lhs, provenance::derived);
        one["relation"] = ">";
        one["rhs"] = tag_rat(check.rhs, provenance::derived);
        one["holds"] = check.holds;
        checks.push_back(std::move(one));
    }
    out["checks"] = std::move(checks);
    out["all_hold"] = report.all_hold;
    return out;
}

inline ordered_json verdicts_json(const PetriAuditVerdicts& verdicts) {
    ordered_json out;
    out["gamma3_positive"] = verdicts.gamma3_positive;
    out["gammas_nonnegative"] = verdicts.gammas_nonnegative;
    out["chain_matches_closed_form"] = verdicts.chain_matches_closed_form;
    out["c4_nonnegative"] = verdicts.c4_nonnegative;
    out["odd_steps_equal_base"] = verdicts.odd_steps_equal_base;
    out["even_steps_base_minus_weight"] =
        verdicts.even_steps_base_minus_weight;
    out["steps_nonnegative"] = verdicts.steps_nonnegative;
    out["weight_peak_at_ends"] = verdicts.weight_peak_at_ends;
    out["weight_diff_factorizes"] = verdicts.weight_diff_factorizes;
    out["weight_factor_nonnegative"] = verdicts.weight_factor_nonnegative;
    out["root_beyond_range"] = verdicts.root_beyond_range;
    out["ladder_base_ge_one"] = verdicts.ladder_base_ge_one;
    out["ladder_identity"] = verdicts.ladder_identity;
    out["ladder_identity_primed"] = verdicts.ladder_identity_primed;
    out["ladder_ratios_ge_one"] = verdicts.ladder_ratios_ge_one;
    out["ladder_ratios_ge_one_primed"] = verdicts.ladder_ratios_ge_one_primed;
    out["ladder_poly_equiv"] = verdicts.ladder_poly_equiv;
    out["ladder_poly_equiv_primed"] = verdicts.ladder_poly_equiv_primed;
    out["ladders_nondecreasing"] = verdicts.ladders_nondecreasing;
    out["parity_tie_in"] = verdicts.parity_tie_in;
    return out;
}

// One record per witness degree d; the telescoped chain lives at k = d-1
// and is omitted (vacuous) for d = 3.
inline ordered_json audit_record_json(int d) {
    const int k = d - 1;
    ordered_json out;
    out["d"] = tag_int(d, provenance::config);
    out["k"] = tag_int(k, provenance::derived);
    out["vacuous"] = k < 3;
    if (k >= 3) {
        const PetriAudit audit = reduction_chain(k);
        out["h_max"] = tag_int(audit.h_max, provenance::derived);
        out["base"] = tag_rat(audit.base, provenance::derived);
        out["gamma"] = rat_list(audit.gamma_values, provenance::derived);
        out["c_chain"] = rat_list(audit.c_chain, provenance::derived);
        out["d_steps"] = rat_list(audit.d_steps, provenance::derived);
        out["v_weights"] = rat_list(audit.v_values, provenance::derived);
        out["n_values"] = rat_list(audit.n_values, provenance::derived);
        out["c_factors"] = rat_list(audit.c_factors, provenance::derived);
        out["a_ladder"] = rat_list(audit.a_ladder, provenance::derived);
        out["a_ladder_primed"] =
            rat_list(audit.a_ladder_primed, provenance::derived);
        out["s_ladder"] = rat_list(audit.s_ladder, provenance::derived);
        out["s_ladder_primed"] =
            rat_list(audit.s_ladder_primed, provenance::derived);
        out["t_ladder"] = rat_list(audit.t_ladder, provenance::derived);
        out["t_ladder_primed"] =
            rat_list(audit.t_ladder_primed, provenance::derived);
        out["k1"] = tag_rat(audit.k1_approx, provenance::derived);
        out["k2"] = tag_rat(audit.k2_approx, provenance::derived);
        out["verdicts"] = verdicts_json(audit.verdicts);
        out["all_pass"] = audit.verdicts.all();
    } else {
        out["all_pass"] = true;
    }
    out["ecco1"] = ecco1_json(check_ecco1(d));
    return out;
}

inline ordered_json polynomial_suite_json(const PolynomialSuiteReport& suite) {
    ordered_json out;
    out["d_max"] = tag_int(suite.d_max, provenance::config);
    ordered_json families = ordered_json::array();
    for (const PolynomialFamilyReport& family : suite.families) {
        ordered_json one;
        one["name"] = family.name;
        one["variable"] = std::string(1, family.variable);
        one["lo"] = tag_int(family.lo, provenance::formula);
        one["hi"] = tag_int(family.hi, provenance::config);
        one["strict"] = family.strict;
        one["holds"] = family.holds;
        one["min_arg"] = tag_int(family.min_arg, provenance::derived);
        one["min_value"] = tag_rat(Rat(family.min_value), provenance::derived);
        families.push_back(std::move(one));
    }
    out["families"] = std::move(families);
    out["all_hold"] = suite.all_hold;
    return out;
}

inline ordered_json alpha_json(int genus, const AlphaClassification& result) {
    ordered_json out;
    out["alpha"] = tag_rat(result.alpha, provenance::config);
    out["regime"] = alpha_regime_name(result.regime);
    out["ample"] = result.ample;
    out["nef"] = result.nef;
    if (result.big) {
        out["big"] = *result.big;
    } else {
        out["big"] = nullptr;  // slope unknown at this genus
    }
    out["alpha_star"] = tag_rat(result.alpha_star, provenance::formula);
    out["alpha_nef"] = tag_rat(result.alpha_nef, provenance::config);
    if (result.alpha_psef) {
        out["alpha_psef"] = tag_rat(*result.alpha_psef, provenance::config);
    }
    const DivisorClass ray = k_alpha(genus, result.alpha);
    out["k_alpha"] = divisor_json(ray, provenance::derived);
    out["moriwaki"] = classification_json(classify_moriwaki(ray));
    if (result.regime == AlphaRegime::HyperellipticInBminus) {
        out["caveat"] =
            "Below the threshold the hyperelliptic locus lies in the "
            "restricted base locus; whether it also sits inside a divisorial "
            "component of the stable base locus (possible only for genus >= "
            "4) is not decided here.";
    }
    return out;
}

inline ordered_json obstruction_json(const ObstructionReport& report,
                                     const char* subject_prov) {
    ordered_json out;
    out["subject"] = divisor_json(report.subject, subject_prov);
    out["kappa_hypothesis"] = report.kappa_hypothesis;
    out["verdict"] = obstruction_verdict_name(report.verdict);
    if (report.witness_facet) {
        out["witness_facet"] = facet_name(*report.witness_facet);
        out["witness_curve"] =
            curve_json(*report.witness_curve, provenance::formula);
        out["pairing"] = tag_rat(*report.pairing, provenance::derived);
    }
    out["narrative"] = report.narrative;
    return out;
}

inline ordered_json ray_json(const std::pair<Int, Int>& ray,
                             const char* prov) {
    ordered_json out;
    out["a"] = tag_rat(Rat(ray.first), prov);
    out["b"] = tag_rat(Rat(ray.second), prov);
    return out;
}

inline ordered_json section_json(const SectionRays& section) {
    ordered_json out;
    out["genus"] = tag_int(section.genus, provenance::config);
    out["plane"] = ordered_json{
        {"lambda", divisor_json(section.plane_lambda, provenance::formula)},
        {"delta", divisor_json(section.plane_delta, provenance::formula)}};
    auto rays = [](const std::vector<std::pair<Int, Int>>& list,
                   const char* first_prov, const char* second_prov) {
        ordered_json arr = ordered_json::array();
        for (std::size_t index = 0; index < list.size(); ++index) {
            arr.push_back(
                ray_json(list[index], index == 0 ? first_prov : second_prov));
        }
        return arr;
    };
    out["nef"] =
        rays(section.nef, provenance::formula, provenance::config);
    out["mor"] =
        rays(section.mor, provenance::formula, provenance::derived);
    out["psef"] =
        rays(section.psef, provenance::formula, provenance::config);
    return out;
}

inline ordered_json make_envelope(const std::string& command) {
    ordered_json report;
    report["schema_version"] = report_schema_version;
    report["tool"] =
        ordered_json{{"name", tool_name}, {"version", tool_version}};
    report["command"] = command;
    report["inputs"] = ordered_json::object();
    report["outputs"] = ordered_json::object();
    report["warnings"] = ordered_json::array();
    return report;
}

inline std::string render_report(const ordered_json& report) {
    return report.dump(2) + "\n";
}

}  // namespace moricone
