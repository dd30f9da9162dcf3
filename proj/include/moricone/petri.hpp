#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "moricone/rat.hpp"

namespace moricone {

inline Int factorial(int n) {
    if (n < 0) {
        throw DomainError("index-out-of-range",
                          "factorial of " + std::to_string(n));
    }
    thread_local std::vector<Int> cache{1, 1};
    while (static_cast<int>(cache.size()) <= n) {
        cache.push_back(cache.back() * static_cast<unsigned>(cache.size()));
    }
    return cache[n];
}

// Catalan number (2n)!/(n!(n+1)!).
inline Int catalan(int n) {
    return factorial(2 * n) / (factorial(n) * factorial(n + 1));
}

// Base step of the gamma chain on level k: (2k-2)!/(k!(k-1)!), an integer
// (the (k-1)-st Catalan number).
inline Rat chain_base(int k) {
    if (k < 2) {
        throw DomainError("index-out-of-range",
                          "chain base needs k >= 2, got " + std::to_string(k));
    }
    return Rat(catalan(k - 1));
}

// Weight v_h = (2h)!(2k-2-2h)! / ((h+1)! h! (k-h)! (k-h+1)!).
// The same quantity appears as the summand weight in gamma_i and as the
// even-step correction of the telescoped chain.
inline Rat v_weight(int k, int h) {
    if (h < 1 || h > k - 1) {
        throw DomainError("index-out-of-range",
                          "v_weight(k=" + std::to_string(k) +
                              ", h=" + std::to_string(h) + ")");
    }
    return make_rat(factorial(2 * h) * factorial(2 * k - 2 - 2 * h),
                    factorial(h + 1) * factorial(h) * factorial(k - h) *
                        factorial(k - h + 1));
}

// gamma_i = (i-1)(i-2) A_k - sum_{l=1}^{floor((i-2)/2)} 2(i-1-2l) v_l
// with A_k = (2k-2)!/(k!(k-1)!) and v_l = v_weight(k, l).
inline Rat gamma(int k, int i) {
    if (k < 2 || i < 3 || i > k) {
        throw DomainError("index-out-of-range",
                          "gamma(k=" + std::to_string(k) +
                              ", i=" + std::to_string(i) + ")");
    }
    Rat total = Rat((i - 1) * (i - 2)) * chain_base(k);
    for (int l = 1; l <= (i - 2) / 2; ++l) {
        total -= Rat(2 * (i - 1 - 2 * l)) * v_weight(k, l);
    }
    return total;
}

// All of gamma_3..gamma_k by direct evaluation, sharing one weight table.
inline std::vector<Rat> gamma_row(int k) {
    if (k < 3) {
        throw DomainError("index-out-of-range",
                          "gamma_row needs k >= 3, got " + std::to_string(k));
    }
    const Rat base = chain_base(k);
    std::vector<Rat> weights;  // v_weight(k, l) for l = 1..floor((k-2)/2)
    for (int l = 1; l <= (k - 2) / 2; ++l) {
        weights.push_back(v_weight(k, l));
    }
    std::vector<Rat> out;
    out.reserve(k - 2);
    for (int i = 3; i <= k; ++i) {
        Rat total = Rat((i - 1) * (i - 2)) * base;
        for (int l = 1; l <= (i - 2) / 2; ++l) {
            total -= Rat(2 * (i - 1 - 2 * l)) * weights[l - 1];
        }
        out.push_back(total);
    }
    return out;
}

// Closed form of the chain increment c_4: (2k-4)!/(k!(k-1)!) (2(2k-2)(2k-3)-1).
inline Rat c4_closed_form(int k) {
    if (k < 4) {
        throw DomainError("index-out-of-range",
                          "c4 closed form needs k >= 4, got " + std::to_string(k));
    }
    return make_rat(factorial(2 * k - 4) *
                        (2 * Int(2 * k - 2) * (2 * k - 3) - 1),
                    factorial(k) * factorial(k - 1));
}

// Truncated boundary coefficient of the Petri witness:
// f_hat_i = -i(i-2) f_1 + (i(i-1)/2) f_2, where f_1 = (2d-3)(3d-2) and
// f_2 = 3(d-2)(4d-3). Dropping the gamma_i/c tail makes this a valid lower
// bound for the true coefficient whenever gamma_i >= 0.
inline Rat f_hat(int d, int i) {
    if (d < 4 || i < 3 || i > d - 1) {
        throw DomainError("index-out-of-range",
                          "f_hat(d=" + std::to_string(d) +
                              ", i=" + std::to_string(i) + ")");
    }
    const Int f1 = Int(2 * d - 3) * (3 * d - 2);
    const Int f2 = 3 * Int(d - 2) * (4 * d - 3);
    return Rat(-Int(i) * (i - 2) * f1) + make_rat(Int(i) * (i - 1) * f2, 2);
}

struct Ecco1Check {
    int i = 0;
    Rat lhs;  // f_hat_i
    Rat rhs;  // (6d^2+d-6) i (2d-2-i) / (4d-3)
    bool holds = false;
};

struct Ecco1Report {
    int d = 0;
    std::vector<Ecco1Check> checks;  // i = 3..d-1
    bool all_hold = true;
    bool vacuous = false;  // d == 3 leaves no indices to check
};

// Strict lower-bound inequality for the truncated Petri coefficients:
// f_hat_i > (6d^2+d-6) i (2d-2-i) / (4d-3) for i = 3..d-1.
inline Ecco1Report check_ecco1(int d) {
    if (d < 3) {
        throw DomainError("d-too-small",
                          "ecco1 check needs d >= 3, got " + std::to_string(d));
    }
    Ecco1Report report;
    report.d = d;
    const Int slope_num = Int(6) * d * d + d - 6;
    for (int i = 3; i <= d - 1; ++i) {
        Ecco1Check check;
        check.i = i;
        check.lhs = f_hat(d, i);
        check.rhs = make_rat(slope_num * i * (2 * d - 2 - i), 4 * d - 3);
        check.holds = check.lhs > check.rhs;
        report.all_hold = report.all_hold && check.holds;
        report.checks.push_back(std::move(check));
    }
    report.vacuous = report.checks.empty();
    return report;
}

// Quadratic controlling the sign of v_h - v_{h-1}:
// N_{k,h} = -3k^2 + 13kh - 2k - 10h^2 + 6h - 2.
inline Int n_quadratic(int k, int h) {
    const Int K = k, H = h;
    return -3 * K * K + 13 * K * H - 2 * K - 10 * H * H + 6 * H - 2;
}

// Nonnegative factor in v_h - v_{h-1} = C_{k,h} N_{k,h}:
// C_{k,h} = 2(2h-2)!(2k-2h-2)! /
//           (h!(h-1)!(k-h+1)!(k-h)! (h+1)(k-h+2)(k-h+1)).
inline Rat c_weight_factor(int k, int h) {
    if (h < 1 || 2 * k - 2 * h - 2 < 0) {
        throw DomainError("index-out-of-range",
                          "c_weight_factor(k=" + std::to_string(k) +
                              ", h=" + std::to_string(h) + ")");
    }
    return make_rat(2 * factorial(2 * h - 2) * factorial(2 * k - 2 * h - 2),
                    factorial(h) * factorial(h - 1) * factorial(k - h + 1) *
                        factorial(k - h) * Int(h + 1) * (k - h + 2) *
                        (k - h + 1));
}

// Endpoint ladder for even k = 2h+2:
// a_h = (4h+2)! h! (h+1)! (h+2)! (h+3)! / ((2h+2)!^2 (2h+1)! (2h)!).
// Satisfies a_h = A_k / v_h at h = (k-2)/2.
inline Rat ladder_a(int h) {
    if (h < 2) {
        throw DomainError("index-out-of-range",
                          "ladder_a needs h >= 2, got " + std::to_string(h));
    }
    return make_rat(factorial(4 * h + 2) * factorial(h) * factorial(h + 1) *
                        factorial(h + 2) * factorial(h + 3),
                    factorial(2 * h + 2) * factorial(2 * h + 2) *
                        factorial(2 * h + 1) * factorial(2 * h));
}

// Endpoint ladder for odd k = 2h+3:
// a'_h = (4h+4)! h! (h+1)! (h+3)! (h+4)! / ((2h+3)!(2h+2)!(2h)!(2h+4)!).
inline Rat ladder_a_primed(int h) {
    if (h < 2) {
        throw DomainError("index-out-of-range",
                          "ladder_a_primed needs h >= 2, got " + std::to_string(h));
    }
    return make_rat(factorial(4 * h + 4) * factorial(h) * factorial(h + 1) *
                        factorial(h + 3) * factorial(h + 4),
                    factorial(2 * h + 3) * factorial(2 * h + 2) *
                        factorial(2 * h) * factorial(2 * h + 4));
}

// S_h = a_{h-1} written as a closed form.
inline Rat ladder_s(int h) {
    if (h < 3) {
        throw DomainError("index-out-of-range",
                          "ladder_s needs h >= 3, got " + std::to_string(h));
    }
    return make_rat(factorial(4 * h - 2) * factorial(h - 1) * factorial(h) *
                        factorial(h + 1) * factorial(h + 2),
                    factorial(2 * h) * factorial(2 * h) * factorial(2 * h - 1) *
                        factorial(2 * h - 2));
}

inline Rat ladder_s_primed(int h) {
    if (h < 3) {
        throw DomainError("index-out-of-range",
                          "ladder_s_primed needs h >= 3, got " + std::to_string(h));
    }
    return make_rat(factorial(4 * h) * factorial(h - 1) * factorial(h) *
                        factorial(h + 2) * factorial(h + 3),
                    factorial(2 * h + 1) * factorial(2 * h) *
                        factorial(2 * h - 2) * factorial(2 * h + 2));
}

// Exact ratio T_h = a_h / a_{h-1} =
// (4h+1)(4h-1)(h+2)(h+3) / (2(2h-1)(h+1)(2h+1)^2).
// T_h >= 1 is equivalent to 56h^3 + 91h^2 + h - 4 >= 0; the audit verifies
// that equivalence pointwise.
inline Rat ladder_t(int h) {
    if (h < 3) {
        throw DomainError("index-out-of-range",
                          "ladder_t needs h >= 3, got " + std::to_string(h));
    }
    return make_rat(Int(4 * h + 1) * (4 * h - 1) * (h + 2) * (h + 3),
                    2 * Int(2 * h - 1) * (h + 1) * (2 * h + 1) * (2 * h + 1));
}

// T'_h = a'_h / a'_{h-1} = (4h+3)(4h+1)(h+3)(h+4) / (2(2h+3)^2(2h-1)(h+2));
// T'_h >= 1 is equivalent to 56h^3 + 215h^2 + 207h + 72 >= 0.
inline Rat ladder_t_primed(int h) {
    if (h < 3) {
        throw DomainError("index-out-of-range",
                          "ladder_t_primed needs h >= 3, got " + std::to_string(h));
    }
    return make_rat(Int(4 * h + 3) * (4 * h + 1) * (h + 3) * (h + 4),
                    2 * Int(2 * h + 3) * (2 * h + 3) * (2 * h - 1) * (h + 2));
}

struct PetriAuditVerdicts {
    bool gamma3_positive = false;       // gamma_3 = 2 A_k > 0
    bool gammas_nonnegative = false;    // gamma_i >= 0 for i in 3..k
    bool chain_matches_closed_form = false;  // c_i = (i-2)A_k - sum v_l
    bool c4_nonnegative = false;        // and c_4 matches its factored form
    bool odd_steps_equal_base = false;  // d_i = A_k for odd i
    bool even_steps_base_minus_weight = false;  // d_i = A_k - v_h, i = 2h+2
    bool steps_nonnegative = false;     // every d_i >= 0
    bool weight_peak_at_ends = false;   // max v_h is attained at h=2 or h=H
    bool weight_diff_factorizes = false;  // v_h - v_{h-1} = C_{k,h} N_{k,h}
    bool weight_factor_nonnegative = false;  // C_{k,h} >= 0
    bool root_beyond_range = false;     // larger root of N_{k,.} exceeds H
    bool ladder_base_ge_one = false;    // a_2 >= 1 and a'_2 >= 1
    bool ladder_identity = false;       // a_h - a_{h-1} = S_h (T_h - 1)
    bool ladder_identity_primed = false;
    bool ladder_ratios_ge_one = false;  // T_h >= 1 over the swept range
    bool ladder_ratios_ge_one_primed = false;
    bool ladder_poly_equiv = false;     // (T_h >= 1) == (56h^3+91h^2+h-4 >= 0)
    bool ladder_poly_equiv_primed = false;
    bool ladders_nondecreasing = false;
    bool parity_tie_in = false;  // A_k = a_H v_H (k even), A_k = a'_H v_H (k odd)

    bool all() const {
        return gamma3_positive && gammas_nonnegative &&
               chain_matches_closed_form && c4_nonnegative &&
               odd_steps_equal_base && even_steps_base_minus_weight &&
               steps_nonnegative && weight_peak_at_ends &&
               weight_diff_factorizes && weight_factor_nonnegative &&
               root_beyond_range && ladder_base_ge_one && ladder_identity &&
               ladder_identity_primed && ladder_ratios_ge_one &&
               ladder_ratios_ge_one_primed && ladder_poly_equiv &&
               ladder_poly_equiv_primed && ladders_nondecreasing &&
               parity_tie_in;
    }
};

// Full replay of the telescoping argument that gamma_i >= 0:
// gamma_3 = 2A_k, c_i = (gamma_i - gamma_{i-1})/2, d_i = c_i - c_{i-1},
// d_i = A_k for odd i and A_k - v_h for even i = 2h+2, v_h peaks at the
// ends of 2..H, and the endpoint values reduce to the a_h / a'_h ladders.
struct PetriAudit {
    int d = 0;  // witness degree parameter; g = 2(d-1)
    int k = 0;  // k = d - 1
    int h_max = 0;  // H = floor((k-2)/2)
    Rat base;  // A_k = (2k-2)!/(k!(k-1)!)
    std::vector<Rat> gamma_values;     // i = 3..k, direct evaluation
    std::vector<Rat> c_chain;          // i = 4..k, (gamma_i - gamma_{i-1})/2
    std::vector<Rat> c_closed;         // i = 4..k, (i-2)A_k - sum_l v_l
    std::vector<Rat> d_steps;          // i = 5..k
    std::vector<Rat> v_values;         // h = 2..H
    std::vector<Rat> n_values;         // h = 3..H
    std::vector<Rat> c_factors;        // h = 3..H
    std::vector<Rat> a_ladder;         // h = 2..max(2,H)
    std::vector<Rat> a_ladder_primed;  // h = 2..max(2,H)
    std::vector<Rat> s_ladder;         // h = 3..max(2,H)
    std::vector<Rat> s_ladder_primed;
    std::vector<Rat> t_ladder;
    std::vector<Rat> t_ladder_primed;
    // Rational approximants of the roots of N_{k,h} = 0 in h, accurate to
    // 1/20 via the floor integer square root. The root_beyond_range verdict
    // never uses these; it compares in exact integer arithmetic.
    Rat k1_approx;
    Rat k2_approx;
    PetriAuditVerdicts verdicts;
};

inline PetriAudit reduction_chain(int k) {
    if (k < 3) {
        throw DomainError("k-too-small",
                          "reduction chain needs k >= 3, got " + std::to_string(k));
    }
    PetriAudit audit;
    audit.k = k;
    audit.d = k + 1;
    audit.h_max = (k - 2) / 2;
    audit.base = chain_base(k);
    audit.gamma_values = gamma_row(k);
    const int H = audit.h_max;
    const int Hl = std::max(2, H);

    std::vector<Rat> weights;  // v_weight(k, l) for l = 1..H
    for (int l = 1; l <= H; ++l) {
        weights.push_back(v_weight(k, l));
    }
    for (int h = 2; h <= H; ++h) {
        audit.v_values.push_back(weights[h - 1]);
    }

    auto& verdicts = audit.verdicts;
    verdicts.gamma3_positive =
        audit.gamma_values[0] == 2 * audit.base && audit.gamma_values[0] > 0;
    verdicts.gammas_nonnegative =
        std::all_of(audit.gamma_values.begin(), audit.gamma_values.end(),
                    [](const Rat& x) { return x >= 0; });

    verdicts.chain_matches_closed_form = true;
    Rat weight_prefix = 0;  // sum of v_l for l <= floor((i-2)/2)
    int prefix_upto = 0;
    for (int i = 4; i <= k; ++i) {
        const Rat chain =
            (audit.gamma_values[i - 3] - audit.gamma_values[i - 4]) / 2;
        while (prefix_upto < (i - 2) / 2) {
            weight_prefix += weights[prefix_upto];
            ++prefix_upto;
        }
        const Rat closed = Rat(i - 2) * audit.base - weight_prefix;
        verdicts.chain_matches_closed_form =
            verdicts.chain_matches_closed_form && chain == closed;
        audit.c_chain.push_back(chain);
        audit.c_closed.push_back(closed);
    }

    verdicts.c4_nonnegative =
        k < 4 || (audit.c_closed[0] >= 0 &&
                  audit.c_closed[0] == c4_closed_form(k));

    verdicts.odd_steps_equal_base = true;
    verdicts.even_steps_base_minus_weight = true;
    verdicts.steps_nonnegative = true;
    for (int i = 5; i <= k; ++i) {
        const Rat step = audit.c_chain[i - 4] - audit.c_chain[i - 5];
        if (i % 2 == 1) {
            verdicts.odd_steps_equal_base =
                verdicts.odd_steps_equal_base && step == audit.base;
        } else {
            const Rat expected = audit.base - weights[(i - 2) / 2 - 1];
            verdicts.even_steps_base_minus_weight =
                verdicts.even_steps_base_minus_weight && step == expected;
        }
        verdicts.steps_nonnegative = verdicts.steps_nonnegative && step >= 0;
        audit.d_steps.push_back(step);
    }

    if (k >= 6) {
        const Rat peak = *std::max_element(audit.v_values.begin(),
                                           audit.v_values.end());
        verdicts.weight_peak_at_ends =
            peak == std::max(audit.v_values.front(), audit.v_values.back());
    } else {
        verdicts.weight_peak_at_ends = true;
    }

    verdicts.weight_diff_factorizes = true;
    verdicts.weight_factor_nonnegative = true;
    for (int h = 3; h <= H; ++h) {
        const Rat n_val = Rat(n_quadratic(k, h));
        const Rat c_val = c_weight_factor(k, h);
        verdicts.weight_diff_factorizes =
            verdicts.weight_diff_factorizes &&
            audit.v_values[h - 2] - audit.v_values[h - 3] == c_val * n_val;
        verdicts.weight_factor_nonnegative =
            verdicts.weight_factor_nonnegative && c_val >= 0;
        audit.n_values.push_back(n_val);
        audit.c_factors.push_back(c_val);
    }

    // Roots of N_{k,h} = 0 in h: (13k+6 -+ sqrt(49k^2+76k-44)) / 20.
    const Int disc = Int(49) * k * k + 76 * k - 44;
    const Int root_floor = isqrt_floor(disc);
    audit.k1_approx = make_rat(Int(13) * k + 6 - root_floor, 20);
    audit.k2_approx = make_rat(Int(13) * k + 6 + root_floor, 20);
    if (k >= 6) {
        // k_2 > H iff sqrt(disc) > 20H - 13k - 6, tested by exact squaring.
        const Int rhs = Int(20) * H - 13 * k - 6;
        verdicts.root_beyond_range = rhs < 0 || disc > rhs * rhs;
    } else {
        verdicts.root_beyond_range = true;
    }

    for (int h = 2; h <= Hl; ++h) {
        audit.a_ladder.push_back(ladder_a(h));
        audit.a_ladder_primed.push_back(ladder_a_primed(h));
    }
    verdicts.ladder_base_ge_one =
        audit.a_ladder[0] >= 1 && audit.a_ladder_primed[0] >= 1;

    verdicts.ladder_identity = true;
    verdicts.ladder_identity_primed = true;
    verdicts.ladder_ratios_ge_one = true;
    verdicts.ladder_ratios_ge_one_primed = true;
    verdicts.ladder_poly_equiv = true;
    verdicts.ladder_poly_equiv_primed = true;
    for (int h = 3; h <= Hl; ++h) {
        const Rat s_val = ladder_s(h);
        const Rat sp_val = ladder_s_primed(h);
        const Rat t_val = ladder_t(h);
        const Rat tp_val = ladder_t_primed(h);
        const Rat& a_cur = audit.a_ladder[h - 2];
        const Rat& a_prev = audit.a_ladder[h - 3];
        const Rat& ap_cur = audit.a_ladder_primed[h - 2];
        const Rat& ap_prev = audit.a_ladder_primed[h - 3];
        verdicts.ladder_identity = verdicts.ladder_identity &&
                                   a_cur - a_prev == s_val * (t_val - 1);
        verdicts.ladder_identity_primed =
            verdicts.ladder_identity_primed &&
            ap_cur - ap_prev == sp_val * (tp_val - 1);
        verdicts.ladder_ratios_ge_one =
            verdicts.ladder_ratios_ge_one && t_val >= 1;
        verdicts.ladder_ratios_ge_one_primed =
            verdicts.ladder_ratios_ge_one_primed && tp_val >= 1;
        const Int hh = h;
        verdicts.ladder_poly_equiv =
            verdicts.ladder_poly_equiv &&
            (t_val >= 1) == (56 * hh * hh * hh + 91 * hh * hh + hh - 4 >= 0);
        verdicts.ladder_poly_equiv_primed =
            verdicts.ladder_poly_equiv_primed &&
            (tp_val >= 1) ==
                (56 * hh * hh * hh + 215 * hh * hh + 207 * hh + 72 >= 0);
        audit.s_ladder.push_back(s_val);
        audit.s_ladder_primed.push_back(sp_val);
        audit.t_ladder.push_back(t_val);
        audit.t_ladder_primed.push_back(tp_val);
    }

    verdicts.ladders_nondecreasing =
        std::is_sorted(audit.a_ladder.begin(), audit.a_ladder.end()) &&
        std::is_sorted(audit.a_ladder_primed.begin(),
                       audit.a_ladder_primed.end());

    if (k >= 6 && H >= 2) {
        const Rat& v_last = audit.v_values.back();
        if (k % 2 == 0) {
            verdicts.parity_tie_in =
                audit.base == audit.a_ladder[H - 2] * v_last;
        } else {
            verdicts.parity_tie_in =
                audit.base == audit.a_ladder_primed[H - 2] * v_last;
        }
    } else {
        verdicts.parity_tie_in = true;
    }

    return audit;
}

struct PolynomialFamilyReport {
    std::string name;
    char variable = 'd';
    long long lo = 0;
    long long hi = 0;
    bool strict = false;  // true: value > 0 required; false: value >= 0
    bool holds = true;
    long long min_arg = 0;  // argument attaining the minimal value
    Int min_value;
};

struct PolynomialSuiteReport {
    long long d_max = 0;
    std::vector<PolynomialFamilyReport> families;
    bool all_hold = true;
};

// Exact sweep of the six cubic/quadratic inequalities the reduction relies
// on. Strict families must stay positive, the others nonnegative.
inline PolynomialSuiteReport polynomial_inequality_suite(long long d_max) {
    if (d_max < 3) {
        throw DomainError("d-max-too-small",
                          "polynomial suite needs d_max >= 3, got " +
                              std::to_string(d_max));
    }
    struct Family {
        const char* name;
        char variable;
        long long lo;
        bool strict;
        Int c3, c2, c1, c0;
    };
    const Family families[] = {
        {"2d^2-7d+6", 'd', 3, true, 0, 2, -7, 6},
        {"2d^3-9d^2+13d-6", 'd', 3, true, 2, -9, 13, -6},
        {"24d^3-124d^2+203d-102", 'd', 3, true, 24, -124, 203, -102},
        {"8d^3-29d^2+32d-12", 'd', 3, true, 8, -29, 32, -12},
        {"56h^3+91h^2+h-4", 'h', 2, false, 56, 91, 1, -4},
        {"56h^3+215h^2+207h+72", 'h', 2, false, 56, 215, 207, 72},
    };
    PolynomialSuiteReport report;
    report.d_max = d_max;
    for (const auto& family : families) {
        PolynomialFamilyReport fam;
        fam.name = family.name;
        fam.variable = family.variable;
        fam.lo = family.lo;
        fam.hi = d_max;
        fam.strict = family.strict;
        bool first = true;
        for (long long x = family.lo; x <= d_max; ++x) {
            const Int value =
                ((family.c3 * x + family.c2) * x + family.c1) * x + family.c0;
            const bool ok = family.strict ? value > 0 : value >= 0;
            fam.holds = fam.holds && ok;
            if (first || value < fam.min_value) {
                fam.min_value = value;
                fam.min_arg = x;
                first = false;
            }
        }
        report.all_hold = report.all_hold && fam.holds;
        report.families.push_back(std::move(fam));
    }
    return report;
}

}  // namespace moricone
