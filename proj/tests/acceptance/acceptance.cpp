// Acceptance battery: one line per criterion, nonzero exit when any fails.
// argv[1] is the CLI binary, argv[2] the golden-file directory.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "moricone/bigness.hpp"
#include "moricone/cone.hpp"
#include "moricone/config.hpp"
#include "moricone/lcm.hpp"
#include "moricone/petri.hpp"

using namespace moricone;
using nlohmann::json;

namespace {

std::string cli_path;
std::string golden_dir;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string command =
        "\"" + cli_path + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    RunResult result;
    if (pipe == nullptr) {
        return result;
    }
    char buffer[1 << 16];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.out.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Rat rat_of(const json& tagged) {
    return parse_rat(tagged.at("value").get<std::string>());
}

// Criterion 1: CLI-certified bigness sweep with per-record exact
// reconstruction from the serialized strings alone.
bool criterion_1(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    const RunResult result = run_cli("certify-big --range 3..500");
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (result.exit_code != 0) {
        detail = "exit code " + std::to_string(result.exit_code);
        return false;
    }
    if (seconds >= 60.0) {
        detail = "took " + std::to_string(seconds) + " s";
        return false;
    }
    json report;
    try {
        report = json::parse(result.out);
    } catch (const std::exception& err) {
        detail = std::string("unparseable report: ") + err.what();
        return false;
    }
    const auto& records = report.at("outputs").at("certificates");
    if (records.size() != 498 ||
        report.at("outputs").at("all_certified") != true) {
        detail = "expected 498 certificates, all certified";
        return false;
    }
    int genus = 3;
    for (const auto& record : records) {
        if (record.at("genus").at("value").get<int>() != genus ||
            record.at("certified") != true) {
            detail = "record mismatch at genus " + std::to_string(genus);
            return false;
        }
        // Rebuild the decomposition purely from the report payload.
        std::vector<std::pair<Rat, DivisorClass>> terms;
        const auto& witness = record.at("witness").at("class");
        std::vector<Rat> wb;
        for (const auto& entry : witness.at("b")) {
            wb.push_back(rat_of(entry));
        }
        const DivisorClass witness_class =
            make_divisor(genus, rat_of(witness.at("a")), wb);
        terms.emplace_back(rat_of(record.at("v")), witness_class);
        terms.emplace_back(rat_of(record.at("lambda_part")),
                           lambda_class(genus));
        const auto& boundary = record.at("boundary_part");
        for (int i = 0; i < boundary_slots(genus); ++i) {
            terms.emplace_back(rat_of(boundary.at(i)),
                               delta_component(genus, i));
        }
        const DivisorClass rebuilt = linear_combination(terms);
        std::vector<Rat> sb;
        for (const auto& entry : record.at("subject").at("b")) {
            sb.push_back(rat_of(entry));
        }
        const DivisorClass subject =
            make_divisor(genus, rat_of(record.at("subject").at("a")), sb);
        if (rebuilt != subject || subject != moriwaki_divisor(genus)) {
            detail = "reconstruction failed at genus " + std::to_string(genus);
            return false;
        }
        for (const auto& condition : record.at("side_conditions")) {
            if (condition.at("holds") != true) {
                detail = "failed side condition at genus " +
                         std::to_string(genus);
                return false;
            }
        }
        ++genus;
    }
    detail = "498 certificates in " + std::to_string(seconds) + " s";
    return true;
}

Int local_factorial(int n) {
    Int out = 1;
    for (int i = 2; i <= n; ++i) {
        out *= i;
    }
    return out;
}

// Criterion 2: direct gamma evaluation against an independently telescoped
// chain, exact equality and nonnegativity through d = 200.
bool criterion_2(std::string& detail) {
    for (int k = 3; k <= 199; ++k) {
        const Rat base = make_rat(local_factorial(2 * k - 2),
                                  local_factorial(k) * local_factorial(k - 1));
        std::vector<Rat> weights;  // v_l, l = 1..floor((k-2)/2)
        for (int l = 1; l <= (k - 2) / 2; ++l) {
            weights.push_back(
                make_rat(local_factorial(2 * l) * local_factorial(2 * k - 2 - 2 * l),
                         local_factorial(l + 1) * local_factorial(l) *
                             local_factorial(k - l) * local_factorial(k - l + 1)));
        }
        const std::vector<Rat> direct = gamma_row(k);
        Rat chained = 2 * base;  // gamma_3
        Rat weight_prefix = 0;
        int prefix_upto = 0;
        for (int i = 3; i <= k; ++i) {
            if (i > 3) {
                while (prefix_upto < (i - 2) / 2) {
                    weight_prefix += weights[prefix_upto];
                    ++prefix_upto;
                }
                chained += 2 * (Rat(i - 2) * base - weight_prefix);
            }
            if (direct[i - 3] != chained || chained < 0) {
                detail = "mismatch at k=" + std::to_string(k) +
                         ", i=" + std::to_string(i);
                return false;
            }
        }
    }
    detail = "gamma_3..gamma_199 telescoped exactly";
    return true;
}

// Criterion 3: spot values, each computed two independent ways.
bool criterion_3(std::string& detail) {
    const bool gamma33 =
        gamma(3, 3) == 4 && gamma(3, 3) == 2 * chain_base(3);
    const bool gamma44 = gamma(4, 4) == make_rat(89, 3) &&
                         gamma(4, 4) == gamma(4, 3) + 2 * c4_closed_form(4);
    const bool c4 = c4_closed_form(4) == make_rat(59, 6) &&
                    c4_closed_form(4) == (gamma(4, 4) - gamma(4, 3)) / 2;
    const Rat a2_inline =
        make_rat(local_factorial(10) * local_factorial(3) * local_factorial(2),
                 local_factorial(6) * local_factorial(6));
    const bool a2 = ladder_a(2) == 84 && ladder_a(2) == a2_inline;
    // f1 = (2d-3)(3d-2) = 50 and f2 = 3(d-2)(4d-3) = 78 at d = 4.
    const bool fhat = f_hat(4, 3) == 84 && f_hat(4, 3) == Rat(-3 * 50 + 3 * 78);
    if (!(gamma33 && gamma44 && c4 && a2 && fhat)) {
        detail = "spot values diverged";
        return false;
    }
    detail = "gamma(3,3), gamma(4,4), c_4, a_2, f_hat(4,3) cross-checked";
    return true;
}

// Criterion 4: exact polynomial sweep to 10^4 under five seconds.
bool criterion_4(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    const PolynomialSuiteReport suite = polynomial_inequality_suite(10000);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (!suite.all_hold || suite.families.size() != 6) {
        detail = "polynomial inequality failed";
        return false;
    }
    if (seconds >= 5.0) {
        detail = "took " + std::to_string(seconds) + " s";
        return false;
    }
    detail = "six families to 10^4 in " + std::to_string(seconds) + " s";
    return true;
}

// Criterion 5: inequality-based and pairing-based classification agree on
// random classes, facet sets included.
bool criterion_5(std::string& detail) {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> num(-60, 60);
    std::uniform_int_distribution<int> den(1, 9);
    for (const int genus : {3, 5, 10, 23}) {
        const auto facets = all_facets(genus);
        std::uniform_int_distribution<int> pick(
            0, static_cast<int>(facets.size()) - 1);
        for (int trial = 0; trial < 10000; ++trial) {
            std::vector<Rat> b;
            for (int i = 0; i < boundary_slots(genus); ++i) {
                b.push_back(make_rat(num(rng), den(rng)));
            }
            Rat a = make_rat(num(rng), den(rng));
            if (trial % 5 == 0) {
                // Land exactly on a facet so active sets get exercised.
                const int facet = facets[pick(rng)];
                a = facet == facet_nonneg_a
                        ? Rat(0)
                        : facet_bound_coefficient(genus, facet) * b[facet];
            }
            const DivisorClass divisor = make_divisor(genus, a, b);
            const auto classed = classify_moriwaki(divisor);
            std::vector<int> violated;
            std::vector<int> active;
            for (const int facet : facets) {
                const Rat pairing =
                    intersect(divisor, dual_curve(genus, facet));
                if (pairing < 0) {
                    violated.push_back(facet);
                } else if (pairing == 0) {
                    active.push_back(facet);
                }
            }
            if (classed.violated != violated || classed.active != active) {
                detail = "facet sets diverged at genus " +
                         std::to_string(genus) + ", trial " +
                         std::to_string(trial);
                return false;
            }
        }
    }
    detail = "4 x 10^4 random classes, facet sets identical";
    return true;
}

int rank_of(std::vector<std::vector<Rat>> rows) {
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    int rank = 0;
    std::size_t lead = 0;
    for (std::size_t r = 0; r < rows.size() && lead < cols; ++lead) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][lead] == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[pivot]);
        for (std::size_t other = 0; other < rows.size(); ++other) {
            if (other != r && rows[other][lead] != 0) {
                const Rat factor = rows[other][lead] / rows[r][lead];
                for (std::size_t c = lead; c < cols; ++c) {
                    rows[other][c] -= factor * rows[r][c];
                }
            }
        }
        ++r;
        ++rank;
    }
    return rank;
}

std::vector<Rat> facet_normal(int genus, int facet) {
    // Coordinates (a, b_0, ..., b_floor(g/2)); the facet inequality is
    // normal . (a, b) >= 0.
    std::vector<Rat> normal(1 + boundary_slots(genus), Rat(0));
    normal[0] = 1;
    if (facet != facet_nonneg_a) {
        normal[1 + facet] = -facet_bound_coefficient(genus, facet);
    }
    return normal;
}

// Criterion 6: simplicial structure; every candidate extremal ray sits on
// exactly dimension-minus-one independent facets.
bool criterion_6(std::string& detail) {
    for (int genus = 3; genus <= 60; ++genus) {
        const int slots = boundary_slots(genus);
        const int dimension = slots + 1;
        const auto facets = all_facets(genus);
        if (static_cast<int>(facets.size()) != dimension) {
            detail = "facet count off at genus " + std::to_string(genus);
            return false;
        }
        std::vector<std::vector<Rat>> normals;
        for (const int facet : facets) {
            normals.push_back(facet_normal(genus, facet));
        }
        if (rank_of(normals) != dimension) {
            detail = "facet normals degenerate at genus " +
                     std::to_string(genus);
            return false;
        }
        std::vector<DivisorClass> rays;
        for (int i = 0; i < slots; ++i) {
            rays.push_back(delta_component(genus, i));
        }
        rays.push_back(moriwaki_divisor(genus));
        if (static_cast<int>(rays.size()) != dimension) {
            detail = "ray count off at genus " + std::to_string(genus);
            return false;
        }
        for (const auto& ray : rays) {
            const auto classed = classify_moriwaki(ray);
            if (!classed.violated.empty() ||
                static_cast<int>(classed.active.size()) != slots) {
                detail = "ray misses the facet count at genus " +
                         std::to_string(genus);
                return false;
            }
            std::vector<std::vector<Rat>> active;
            for (const int facet : classed.active) {
                active.push_back(facet_normal(genus, facet));
            }
            if (rank_of(active) != slots) {
                detail = "active normals degenerate at genus " +
                         std::to_string(genus);
                return false;
            }
        }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            for (std::size_t j = i + 1; j < rays.size(); ++j) {
                if (proportional_to(rays[i], rays[j]).has_value()) {
                    detail = "proportional rays at genus " +
                             std::to_string(genus);
                    return false;
                }
            }
        }
    }
    detail = "genus 3..60: simplicial with the expected rays";
    return true;
}

// Criterion 7: regime trichotomy against strict interiority on a fine grid,
// plus the two frozen thresholds and exact proportionality at the threshold.
bool criterion_7(std::string& detail) {
    if (alpha_threshold(3) != make_rat(17, 28) ||
        alpha_threshold(22) != make_rat(37, 90)) {
        detail = "threshold spot values off";
        return false;
    }
    const Config config = default_config();
    for (int genus = 3; genus <= 100; ++genus) {
        for (int j = 0; j <= 1000; ++j) {
            const Rat alpha = make_rat(j, 1000);
            const auto result = classify_alpha(genus, alpha, config);
            const auto position = classify_moriwaki(k_alpha(genus, alpha));
            const bool iso = result.regime == AlphaRegime::IsoOverMg;
            const bool interior =
                position.verdict == MoriwakiVerdict::StrictInterior;
            if (iso != interior) {
                detail = "regime mismatch at genus " + std::to_string(genus) +
                         ", alpha " + rat_str(alpha);
                return false;
            }
        }
        const Rat star = alpha_threshold(genus);
        std::vector<Rat> b(boundary_slots(genus), Rat(genus));
        const DivisorClass target =
            make_divisor(genus, Rat(8 * genus + 4), b);
        const auto factor = proportional_to(k_alpha(genus, star), target);
        if (!factor || *factor != make_rat(13, 8 * genus + 4)) {
            detail = "threshold ray not proportional at genus " +
                     std::to_string(genus);
            return false;
        }
    }
    detail = "genus 3..100, alpha grid j/1000";
    return true;
}

// Criterion 8: canonical class outside with Delta0 violated; obstruction
// report through the CLI with a negative pairing.
bool criterion_8(std::string& detail) {
    for (int genus = 3; genus <= 100; ++genus) {
        const auto classed = classify_moriwaki(canonical_divisor(genus));
        if (classed.verdict != MoriwakiVerdict::Outside ||
            classed.violated != std::vector<int>{0}) {
            detail = "canonical class not Outside/{Delta0} at genus " +
                     std::to_string(genus);
            return false;
        }
    }
    const RunResult result = run_cli("obstruction -g 22 K");
    if (result.exit_code != 0) {
        detail = "obstruction exit code " + std::to_string(result.exit_code);
        return false;
    }
    json report;
    try {
        report = json::parse(result.out);
    } catch (const std::exception& err) {
        detail = std::string("unparseable report: ") + err.what();
        return false;
    }
    const auto& outputs = report.at("outputs");
    if (outputs.at("verdict") != "NoZariskiDecomposition" ||
        outputs.at("witness_facet") != "Delta0") {
        detail = "wrong verdict or witness facet";
        return false;
    }
    const Rat pairing = rat_of(outputs.at("pairing"));
    if (pairing != -74 || !(pairing < 0)) {
        detail = "pairing is " + rat_str(pairing);
        return false;
    }
    detail = "Outside/{Delta0} through genus 100; pairing -74 at genus 22";
    return true;
}

// Criterion 9: byte-stable section CSV against the golden file.
bool criterion_9(std::string& detail) {
    const RunResult result = run_cli("section -g 24 --csv");
    if (result.exit_code != 0) {
        detail = "exit code " + std::to_string(result.exit_code);
        return false;
    }
    const std::string expected = read_file(golden_dir + "/section_g24.csv");
    if (expected.empty()) {
        detail = "golden file missing";
        return false;
    }
    if (result.out != expected) {
        detail = "CSV bytes diverge from the golden file";
        return false;
    }
    detail = "byte-identical to the golden file";
    return true;
}

// Criterion 10: the full battery twice, byte-identical output each time.
bool criterion_10(std::string& detail) {
    const std::vector<std::string> battery = {
        "classify -g 3 K",
        "classify -g 10 M",
        "certify-big --range 3..40",
        "audit-petri --d-max 30",
        "section -g 24",
        "section -g 24 --csv",
        "section -g 24 --svg",
        "section -g 4",
        "alpha -g 3 17/28",
        "alpha -g 22 1/3",
        "obstruction -g 22",
    };
    for (const std::string& args : battery) {
        const RunResult first = run_cli(args);
        const RunResult second = run_cli(args);
        if (first.exit_code != second.exit_code || first.out != second.out) {
            detail = "nondeterministic output for: " + args;
            return false;
        }
        if (first.exit_code != 0) {
            detail = "battery command failed: " + args;
            return false;
        }
    }
    detail = std::to_string(battery.size()) + " commands, two runs each";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <cli-binary> <golden-dir>\n";
        return 2;
    }
    cli_path = argv[1];
    golden_dir = argv[2];

    using Criterion = bool (*)(std::string&);
    const std::pair<const char*, Criterion> criteria[] = {
        {"bigness certificates 3..500 via CLI", criterion_1},
        {"gamma chain nonnegativity to d=200", criterion_2},
        {"spot values two ways", criterion_3},
        {"polynomial suite to 10^4", criterion_4},
        {"duality equivalence on random classes", criterion_5},
        {"simplicial facet/ray structure 3..60", criterion_6},
        {"threshold regime consistency", criterion_7},
        {"canonical obstruction", criterion_8},
        {"golden section CSV", criterion_9},
        {"determinism battery", criterion_10},
    };

    bool all_pass = true;
    int index = 1;
    for (const auto& [label, fn] : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = fn(detail);
        } catch (const std::exception& err) {
            detail = std::string("exception: ") + err.what();
        }
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << index
                  << " (" << label << "): " << detail << "\n";
        all_pass = all_pass && ok;
        ++index;
    }
    std::cout << (all_pass ? "acceptance: all criteria hold"
                           : "acceptance: FAILURES above")
              << "\n";
    return all_pass ? 0 : 1;
}
