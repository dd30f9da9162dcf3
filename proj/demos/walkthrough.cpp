// Tour of the library API: classify a few named classes, split one along
// the extremal ray, and certify bigness with an explicit witness.

#include <iostream>
#include <string>
#include <vector>

#include "moricone/bigness.hpp"
#include "moricone/cone.hpp"
#include "moricone/divisor.hpp"

using namespace moricone;

namespace {

std::string show(const DivisorClass& divisor) {
    std::string out = rat_str(divisor.a) + " lambda";
    for (int i = 0; i < boundary_slots(divisor.genus); ++i) {
        if (divisor.b[i] != 0) {
            out += " - (" + rat_str(divisor.b[i]) + ") delta_" +
                   std::to_string(i);
        }
    }
    return out;
}

void classify_and_print(const std::string& name, const DivisorClass& divisor) {
    const auto classed = classify_moriwaki(divisor);
    std::cout << name << " = " << show(divisor) << "\n  verdict: "
              << verdict_name(classed.verdict);
    if (!classed.violated.empty()) {
        std::cout << ", violated:";
        for (int facet : classed.violated) {
            std::cout << ' ' << facet_name(facet);
        }
    }
    if (!classed.active.empty()) {
        std::cout << ", active:";
        for (int facet : classed.active) {
            std::cout << ' ' << facet_name(facet);
        }
    }
    const auto prediction = predict_base_locus(divisor);
    std::cout << "\n  base locus: "
              << base_locus_statement_name(prediction.statement) << "\n";
}

}  // namespace

int main() {
    const int genus = 5;
    std::cout << "classification at genus " << genus << "\n\n";
    classify_and_print("M", moriwaki_divisor(genus));
    classify_and_print("K", canonical_divisor(genus));
    classify_and_print("lambda", lambda_class(genus));
    classify_and_print("delta", delta_total(genus));

    std::cout << "\nsplitting lambda along the extremal ray\n";
    const auto [beta, rest] = moriwaki_decompose(lambda_class(genus));
    std::cout << "  lambda = " << rat_str(beta) << " * M + (" << show(rest)
              << ")\n";

    std::cout << "\nbigness certificates\n";
    for (int g : {5, 6}) {
        const BignessCertificate cert = certify_moriwaki_big(g);
        std::cout << "  genus " << g << ": M = " << rat_str(cert.lambda_part)
                  << " * lambda + " << rat_str(cert.v) << " * "
                  << witness_kind_name(cert.witness.kind)
                  << " witness + boundary (";
        for (std::size_t i = 0; i < cert.boundary_part.size(); ++i) {
            std::cout << (i ? ", " : "") << rat_str(cert.boundary_part[i]);
        }
        std::cout << ")\n";
    }

    std::cout << "\nsection rays at genus 24 (a : b on the lambda/delta "
                 "plane)\n";
    const SectionRays section =
        cone_section(24, make_rat(162, 25), Rat(11));
    auto print_rays = [](const char* name,
                         const std::vector<std::pair<Int, Int>>& rays) {
        std::cout << "  " << name << ":";
        for (const auto& [a, b] : rays) {
            std::cout << "  " << a.str() << ":" << b.str();
        }
        std::cout << "\n";
    };
    print_rays("nef ", section.nef);
    print_rays("mor ", section.mor);
    print_rays("psef", section.psef);
    return 0;
}
