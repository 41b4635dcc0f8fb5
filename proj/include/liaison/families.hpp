#pragma once

#include "liaison/linkage.hpp"

namespace liaison {

namespace detail {
inline Polynomial mono3(const RingPtr& ring, int ex, int ey, int ez) {
    return Polynomial::monomial(ring, Monomial({ex, ey, ez}), ring->one());
}
inline void require3(const RingPtr& ring) {
    if (ring->nvars() != 3) throw input_error("family constructors require 3 variables");
}
} // namespace detail

struct FamilyParams {
    int n = 4;
    std::optional<std::array<int, 4>> c;  // c_1..c_4; defaults to (1, n, n+3, 2n+3)
    std::optional<Polynomial> ell1, ell2, f1, f2, f3, f4;
};

/// I(n) = (xz, yz, z^(2n+4), x^n, y^(n+3)) for n >= 4.
inline Ideal make_I(int n, const RingPtr& ring) {
    detail::require3(ring);
    if (n < 4) throw input_error("family parameter n must be at least 4");
    using detail::mono3;
    return Ideal(ring, {mono3(ring, 1, 0, 1), mono3(ring, 0, 1, 1), mono3(ring, 0, 0, 2 * n + 4),
                        mono3(ring, n, 0, 0), mono3(ring, 0, n + 3, 0)});
}

/// The witness CI (yz, x^(n+1), y^(2n+4) - z^(2n+4)) of type (2, n+1, 2n+4).
inline CompleteIntersection j_link_ci(int n, const RingPtr& ring) {
    using detail::mono3;
    return CompleteIntersection(
        ring, {mono3(ring, 0, 1, 1), mono3(ring, n + 1, 0, 0),
               mono3(ring, 0, 2 * n + 4, 0) - mono3(ring, 0, 0, 2 * n + 4)});
}

/// The minimal-type witness CI (yz, x^n, y^(2n+4) - z^(2n+4)) of type (2, n, 2n+4).
inline CompleteIntersection l_link_ci(int n, const RingPtr& ring) {
    using detail::mono3;
    return CompleteIntersection(
        ring, {mono3(ring, 0, 1, 1), mono3(ring, n, 0, 0),
               mono3(ring, 0, 2 * n + 4, 0) - mono3(ring, 0, 0, 2 * n + 4)});
}

/// J(n) = (yz, x^(n+1), y^(2n+4) - z^(2n+4)) : I(n).
inline Ideal make_J(int n, const RingPtr& ring) {
    return direct_link(j_link_ci(n, ring), make_I(n, ring));
}

/// L(n) = (yz, x^n, y^(2n+4) - z^(2n+4)) : I(n), a minimal link of I(n).
inline Ideal make_L(int n, const RingPtr& ring) {
    Ideal base = make_I(n, ring);
    try {
        return direct_link(l_link_ci(n, ring), base);
    } catch (const input_error&) {
        // cannot happen for n >= 4; fall back to a generic minimal-type witness
        Rng rng(0);
        return direct_link(construct_generic_ci(base, grade_jump_values(base), rng), base);
    }
}

/// J'(n) = (x^2, y^(2n+1), z^(2n+4), y^n z, x y^(n-1) z, x y z^(n+1)).
inline Ideal make_Jprime(int n, const RingPtr& ring) {
    detail::require3(ring);
    if (n < 4) throw input_error("family parameter n must be at least 4");
    using detail::mono3;
    return Ideal(ring, {mono3(ring, 2, 0, 0), mono3(ring, 0, 2 * n + 1, 0),
                        mono3(ring, 0, 0, 2 * n + 4), mono3(ring, 0, n, 1),
                        mono3(ring, 1, n - 1, 1), mono3(ring, 1, 1, n + 1)});
}

/// The HMNU construction I = l_2·I_1 + (f_2, f_3) with I_1 = (l_1, f_1, f_4).
/// All hypotheses are validated computationally; defaults reproduce I(n).
inline Ideal make_hmnu(const FamilyParams& params, const RingPtr& ring) {
    detail::require3(ring);
    int n = params.n;
    std::array<int, 4> c = params.c.value_or(std::array<int, 4>{1, n, n + 3, 2 * n + 3});
    auto fail = [](const std::string& which) {
        throw input_error("HMNU hypothesis violated: " + which);
    };
    if (!(4 <= c[0] + 3)) fail("4 <= c_1 + 3");
    if (!(c[0] + 3 <= c[1])) fail("c_1 + 3 <= c_2");
    if (!(c[1] < c[2])) fail("c_2 < c_3");
    if (!(c[2] < c[3])) fail("c_3 < c_4");
    if (c[0] == 2) fail("c_1 != 2");
    if (!(c[1] + c[2] <= std::min(2, c[0]) + c[3])) fail("c_2 + c_3 <= min{2, c_1} + c_4");

    using detail::mono3;
    Polynomial ell1 = params.ell1.value_or(mono3(ring, 0, 1, 0));           // y
    Polynomial f1 = params.f1.value_or(mono3(ring, c[0], 0, 0));            // x^c1
    Polynomial f4 = params.f4.value_or(mono3(ring, 0, 0, c[3]));            // z^c4
    Polynomial f2 = params.f2.value_or(mono3(ring, c[1], 0, 0));            // x^c2
    Polynomial f3 = params.f3.value_or(mono3(ring, 0, c[2], 0));            // y^c3
    Polynomial ell2 = params.ell2.value_or(mono3(ring, 0, 0, 1));           // z

    auto check_degree = [&](const Polynomial& f, int d, const std::string& name) {
        if (f.is_zero() || !f.is_homogeneous() || f.degree() != d)
            throw input_error("HMNU form " + name + " must be homogeneous of degree " +
                              std::to_string(d));
    };
    check_degree(ell1, 1, "l_1");
    check_degree(ell2, 1, "l_2");
    check_degree(f1, c[0], "f_1");
    check_degree(f2, c[1], "f_2");
    check_degree(f3, c[2], "f_3");
    check_degree(f4, c[3], "f_4");

    auto regular = [&](std::vector<Polynomial> seq, const std::string& which) {
        Ideal t(ring, seq);
        if (t.grade() != static_cast<int>(seq.size()))
            fail(which + " must be a regular sequence");
    };
    regular({f1, f4, ell1}, "f_1, f_4, l_1");
    Ideal i1(ring, {ell1, f1, f4});
    if (!i1.contains(f2)) fail("f_2 in I_1");
    if (!i1.contains(f3)) fail("f_3 in I_1");
    regular({f2, f3}, "f_2, f_3");
    regular({ell1, f2}, "l_1, f_2");
    regular({ell2, f2, f3}, "l_2, f_2, f_3");

    return (ell2 * i1) + Ideal(ring, {f2, f3});
}

// ---------------------------------------------------------------------------
// Betti pattern classes
// ---------------------------------------------------------------------------

enum class PatternKind { diamond, star, starstar };

struct BettiPattern {
    PatternKind kind;
    int n;
};

inline BettiTable table_from_shifts(const std::vector<int>& s1, const std::vector<int>& s2,
                                    const std::vector<int>& s3, int grade = 3) {
    BettiTable t;
    t.grade = grade;
    t.entries[{0, 0}] = 1;
    for (int j : s1) ++t.entries[{1, j}];
    for (int j : s2) ++t.entries[{2, j}];
    for (int j : s3) ++t.entries[{3, j}];
    return t;
}

/// The displayed table of the minimal-type link resolution.
inline BettiTable diamond_table(int n) {
    return table_from_shifts({2, n, n, n + 2, 2 * n + 4},
                             {n + 1, n + 1, n + 3, 2 * n + 2, 2 * n + 5, 3 * n + 3},
                             {2 * n + 3, 3 * n + 4});
}

/// The displayed table of the non-SBL class.
inline BettiTable star_table(int n) {
    return table_from_shifts({2, n + 1, n + 1, n + 3, 2 * n + 4},
                             {n + 2, n + 2, n + 4, 2 * n + 3, 2 * n + 6, 2 * n + 6, 3 * n + 4},
                             {2 * n + 4, 2 * n + 7, 3 * n + 5});
}

/// The displayed table of I(n) itself.
inline BettiTable i_table(int n) {
    return table_from_shifts({2, 2, n, n + 3, 2 * n + 4},
                             {3, n + 1, n + 4, 2 * n + 3, 2 * n + 5, 2 * n + 5},
                             {2 * n + 4, 2 * n + 6});
}

struct PatternMatch {
    bool matches = false;
    long s = 0;  // starstar only
    long t = 0;  // starstar only
};

inline PatternMatch match_pattern(const BettiTable& table, PatternKind kind, int n) {
    PatternMatch out;
    switch (kind) {
    case PatternKind::diamond:
        out.matches = (table == diamond_table(n));
        return out;
    case PatternKind::star:
        out.matches = (table == star_table(n));
        return out;
    case PatternKind::starstar: {
        long s = table.beta(1, 2 * n + 2);
        long t = table.beta(1, 2 * n + 5);
        if (table.beta(2, 2 * n + 2) != s || table.beta(2, 2 * n + 5) != t) return out;
        BettiTable expected = star_table(n);
        if (s) {
            expected.entries[{1, 2 * n + 2}] = s;
            expected.entries[{2, 2 * n + 2}] += s;
        }
        if (t) {
            expected.entries[{1, 2 * n + 5}] = t;
            expected.entries[{2, 2 * n + 5}] += t;
        }
        out.matches = (table == expected);
        out.s = s;
        out.t = t;
        return out;
    }
    }
    return out;
}

inline PatternMatch satisfies_pattern(const Ideal& ideal, PatternKind kind, int n) {
    if (ideal.grade() != 3) throw input_error("pattern matching requires a grade-3 ideal");
    return match_pattern(betti_table(ideal), kind, n);
}

/// The explicit Thm-5.5 chain for J'(n); terminal CI is (x, y^(n-2), z^n).
inline std::vector<ChainStepInput> jprime_paper_steps(int n, const RingPtr& ring) {
    using detail::mono3;
    auto step = [&](int ex, int ey, int ez) {
        return ChainStepInput::of_gens({mono3(ring, ex, 0, 0), mono3(ring, 0, ey, 0),
                                        mono3(ring, 0, 0, ez)});
    };
    return {step(2, 2 * n + 1, 2 * n + 4), step(2, 2 * n, 2 * n + 3),
            step(2, n - 1, 2 * n + 3), step(1, n - 1, 2 * n + 3)};
}

} // namespace liaison
