#include <catch2/catch_amalgamated.hpp>

#include "moricone/petri.hpp"

using namespace moricone;

TEST_CASE("chain base is the shifted Catalan number") {
    CHECK(chain_base(2) == 1);
    CHECK(chain_base(3) == 2);
    CHECK(chain_base(4) == 5);
    CHECK(chain_base(5) == 14);
    CHECK(chain_base(6) == 42);
    CHECK_THROWS_AS(chain_base(1), DomainError);
}

TEST_CASE("gamma values at small levels") {
    CHECK(gamma(3, 3) == 4);
    CHECK(gamma(4, 3) == 10);
    CHECK(gamma(4, 4) == make_rat(89, 3));
    CHECK(gamma(5, 3) == 28);
    CHECK(gamma(5, 4) == make_rat(167, 2));
    CHECK(gamma(5, 5) == 167);
    CHECK_THROWS_AS(gamma(4, 5), DomainError);
    CHECK_THROWS_AS(gamma(4, 2), DomainError);
}

TEST_CASE("gamma_row agrees with elementwise gamma") {
    for (int k = 3; k <= 30; ++k) {
        const auto row = gamma_row(k);
        REQUIRE(static_cast<int>(row.size()) == k - 2);
        for (int i = 3; i <= k; ++i) {
            CHECK(row[i - 3] == gamma(k, i));
        }
    }
    CHECK_THROWS_AS(gamma_row(2), DomainError);
}

TEST_CASE("closed form of the fourth chain increment") {
    CHECK(c4_closed_form(4) == make_rat(59, 6));
    for (int k = 4; k <= 40; ++k) {
        CHECK(c4_closed_form(k) == (gamma(k, 4) - gamma(k, 3)) / 2);
    }
    CHECK_THROWS_AS(c4_closed_form(3), DomainError);
}

TEST_CASE("truncated witness coefficients") {
    CHECK(f_hat(4, 3) == 84);
    CHECK(f_hat(5, 3) == 186);
    CHECK(f_hat(5, 4) == 190);
    CHECK_THROWS_AS(f_hat(3, 3), DomainError);
    CHECK_THROWS_AS(f_hat(5, 5), DomainError);
    CHECK_THROWS_AS(f_hat(5, 2), DomainError);
}

TEST_CASE("strict slope bound on the truncated coefficients") {
    const Ecco1Report vac = check_ecco1(3);
    CHECK(vac.vacuous);
    CHECK(vac.all_hold);
    CHECK(vac.checks.empty());

    const Ecco1Report r4 = check_ecco1(4);
    REQUIRE(r4.checks.size() == 1);
    CHECK(r4.checks[0].i == 3);
    CHECK(r4.checks[0].lhs == 84);
    CHECK(r4.checks[0].rhs == make_rat(846, 13));
    CHECK(r4.checks[0].holds);
    CHECK(r4.all_hold);
    CHECK_FALSE(r4.vacuous);

    const Ecco1Report r5 = check_ecco1(5);
    REQUIRE(r5.checks.size() == 2);
    CHECK(r5.checks[1].i == 4);
    CHECK(r5.checks[1].lhs == 190);
    CHECK(r5.checks[1].rhs == make_rat(2384, 17));
    CHECK(r5.all_hold);

    for (int d = 3; d <= 120; ++d) {
        CHECK(check_ecco1(d).all_hold);
    }
    CHECK_THROWS_AS(check_ecco1(2), DomainError);
}

TEST_CASE("weight values and their first-difference factorization") {
    CHECK(v_weight(6, 2) == make_rat(1, 2));
    for (int k = 4; k <= 40; ++k) {
        for (int h = 2; h <= k - 1; ++h) {
            const Rat diff = v_weight(k, h) - v_weight(k, h - 1);
            CHECK(diff == c_weight_factor(k, h) * Rat(n_quadratic(k, h)));
        }
    }
    CHECK_THROWS_AS(v_weight(5, 0), DomainError);
    CHECK_THROWS_AS(v_weight(5, 5), DomainError);
}

TEST_CASE("endpoint ladders and their exact update identities") {
    CHECK(ladder_a(2) ==
          make_rat(factorial(10) * factorial(3) * factorial(2),
                   factorial(6) * factorial(6)));
    CHECK(ladder_a(2) == 84);
    CHECK(ladder_a_primed(2) == make_rat(990, 7));

    for (int h = 3; h <= 60; ++h) {
        CHECK(ladder_s(h) == ladder_a(h - 1));
        CHECK(ladder_s_primed(h) == ladder_a_primed(h - 1));
        CHECK(ladder_a(h) - ladder_a(h - 1) ==
              ladder_s(h) * (ladder_t(h) - 1));
        CHECK(ladder_a_primed(h) - ladder_a_primed(h - 1) ==
              ladder_s_primed(h) * (ladder_t_primed(h) - 1));
        CHECK(ladder_t(h) == ladder_a(h) / ladder_a(h - 1));
        CHECK(ladder_t_primed(h) == ladder_a_primed(h) / ladder_a_primed(h - 1));
        const Int hh = h;
        CHECK((ladder_t(h) >= 1) ==
              (56 * hh * hh * hh + 91 * hh * hh + hh - 4 >= 0));
        CHECK((ladder_t_primed(h) >= 1) ==
              (56 * hh * hh * hh + 215 * hh * hh + 207 * hh + 72 >= 0));
    }
    CHECK_THROWS_AS(ladder_a(1), DomainError);
    CHECK_THROWS_AS(ladder_t(2), DomainError);
}

TEST_CASE("parity tie-in between the base and the endpoint ladders") {
    for (int k = 6; k <= 60; ++k) {
        const int H = (k - 2) / 2;
        const Rat tied = (k % 2 == 0 ? ladder_a(H) : ladder_a_primed(H)) *
                         v_weight(k, H);
        CHECK(tied == chain_base(k));
    }
}

TEST_CASE("full reduction audit passes across levels") {
    const PetriAudit minimal = reduction_chain(3);
    CHECK(minimal.k == 3);
    CHECK(minimal.d == 4);
    CHECK(minimal.base == 2);
    CHECK(minimal.gamma_values == std::vector<Rat>{Rat(4)});
    CHECK(minimal.c_chain.empty());
    CHECK(minimal.d_steps.empty());
    CHECK(minimal.verdicts.all());

    const PetriAudit six = reduction_chain(6);
    CHECK(six.base == 42);
    CHECK(six.h_max == 2);
    CHECK(six.v_values == std::vector<Rat>{make_rat(1, 2)});
    REQUIRE_FALSE(six.d_steps.empty());
    CHECK(six.d_steps.back() == make_rat(83, 2));
    CHECK(six.verdicts.all());

    for (int k = 3; k <= 80; ++k) {
        CHECK(reduction_chain(k).verdicts.all());
    }
    CHECK_THROWS_AS(reduction_chain(2), DomainError);
}

TEST_CASE("approximate quadratic roots bracket the exact root") {
    // The approximants are accurate to 1/20 by construction; confirm that
    // N_{k,h} < 0 outside [k1, k2] and >= 0 strictly between the rounded
    // endpoints, for a couple of levels.
    for (int k : {8, 15, 30}) {
        const PetriAudit audit = reduction_chain(k);
        const Rat& k1 = audit.k1_approx;
        const Rat& k2 = audit.k2_approx;
        CHECK(k1 < k2);
        for (int h = 1; h <= 2 * k; ++h) {
            const Int n = n_quadratic(k, h);
            if (Rat(h) <= k1 - 1 || Rat(h) >= k2 + 1) {
                CHECK(n < 0);
            }
            if (Rat(h) >= k1 + 1 && Rat(h) <= k2 - 1) {
                CHECK(n >= 0);
            }
        }
    }
}

TEST_CASE("polynomial sweep reports the exact minima") {
    const PolynomialSuiteReport small = polynomial_inequality_suite(3);
    REQUIRE(small.families.size() == 6);
    CHECK(small.families[0].min_value == 3);
    CHECK(small.families[1].min_value == 6);
    CHECK(small.families[2].min_value == 39);
    CHECK(small.families[3].min_value == 39);
    CHECK(small.families[4].min_value == 810);
    CHECK(small.families[5].min_value == 1794);
    for (const auto& fam : small.families) {
        CHECK(fam.holds);
        CHECK(fam.min_arg == fam.lo);
    }
    CHECK(small.all_hold);

    const PolynomialSuiteReport big = polynomial_inequality_suite(100);
    CHECK(big.all_hold);
    // All six polynomials are increasing on their sweep ranges, so the
    // minimum stays pinned at the left endpoint.
    for (const auto& fam : big.families) {
        CHECK(fam.min_arg == fam.lo);
    }

    CHECK_THROWS_AS(polynomial_inequality_suite(2), DomainError);
}
