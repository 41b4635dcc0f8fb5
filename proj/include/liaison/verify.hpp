#pragma once

#include <functional>
#include <sstream>

#include "liaison/inverse.hpp"
#include "liaison/koszul.hpp"
#include "liaison/families.hpp"

namespace liaison {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;  // failure diagnostics
};

namespace verify_detail {

inline Polynomial random_form(const RingPtr& ring, int degree, Rng& rng) {
    std::vector<Term> terms;
    for (const auto& m : monomials_of_degree(ring->nvars(), degree, ring->order()))
        terms.push_back({m, rng.field_element(*ring)});
    Polynomial f(ring, std::move(terms));
    return f.is_zero() ? Polynomial::monomial(ring, Monomial::variable(0, ring->nvars(), degree),
                                              ring->one())
                       : f;
}

inline Ideal random_monomial_ideal(const RingPtr& ring, Rng& rng, int max_deg, int count) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < count; ++k) {
        int d = 1 + static_cast<int>(rng.next() % max_deg);
        Monomial m(ring->nvars());
        for (int s = 0; s < d; ++s)
            m = m * Monomial::variable(static_cast<int>(rng.next() % ring->nvars()),
                                       ring->nvars());
        gens.push_back(Polynomial::monomial(ring, m, ring->one()));
    }
    return Ideal(ring, gens);
}

/// All links the per-n suite exercises, with their defining data.
struct SuiteLink {
    std::string name;
    Ideal source;
    CompleteIntersection ci;
    Ideal link;
};

inline std::vector<SuiteLink> suite_links(int n, const RingPtr& ring) {
    std::vector<SuiteLink> out;
    Ideal i_n = make_I(n, ring);
    out.push_back({"J-link", i_n, j_link_ci(n, ring), make_J(n, ring)});
    out.push_back({"L-link", i_n, l_link_ci(n, ring), make_L(n, ring)});
    Ideal jp = make_Jprime(n, ring);
    Ideal current = jp;
    auto steps = jprime_paper_steps(n, ring);
    for (std::size_t k = 0; k < steps.size(); ++k) {
        CompleteIntersection c(ring, *steps[k].explicit_gens);
        Ideal link = direct_link(c, current);
        out.push_back({"chain-" + std::to_string(k), current, c, link});
        current = link;
    }
    using detail::mono3;
    CompleteIntersection cprime(
        ring, {mono3(ring, 2, 0, 0), mono3(ring, 0, n, 1),
               mono3(ring, 0, 2 * n + 4, 0) - mono3(ring, 0, 0, 2 * n + 4)});
    out.push_back({"Cprime-link", jp, cprime, direct_link(cprime, jp)});
    return out;
}

} // namespace verify_detail

/// Runs the paper-reproduction criteria at the given n. All twelve criteria
/// run when n = 4; the n-independent randomized criteria and the fixed-n
/// paper displays are skipped for larger n exactly as specified per
/// criterion (3 and 7 cover n in {4, 5}; the rest cover n in {4, 5, 6}).
inline std::vector<CriterionResult> verify_paper(int n, std::uint64_t seed) {
    using namespace verify_detail;
    const RingPtr ring = Ring::make(3);
    const RingPtr dual = ring->dual();
    std::vector<CriterionResult> results;
    auto run = [&](const std::string& name, const std::function<void(std::ostringstream&)>& f) {
        CriterionResult r;
        r.name = name;
        std::ostringstream detail;
        try {
            f(detail);
            r.pass = detail.str().empty();
        } catch (const std::exception& e) {
            detail << "exception: " << e.what();
            r.pass = false;
        }
        r.detail = detail.str();
        results.push_back(std::move(r));
    };
    auto tag = [&](int c, const std::string& what) {
        return "criterion " + std::to_string(c) + " (n=" + std::to_string(n) + "): " + what;
    };

    Ideal I = make_I(n, ring);
    Ideal J = make_J(n, ring);
    Ideal L = make_L(n, ring);
    Ideal Jp = make_Jprime(n, ring);

    run(tag(1, "Betti table of I equals the displayed resolution"), [&](std::ostringstream& d) {
        if (!(betti_table(I) == i_table(n))) d << "table mismatch for I(" << n << ")";
    });

    run(tag(2, "Betti tables of J and L equal their displayed resolutions"),
        [&](std::ostringstream& d) {
            if (!(betti_table(J) == star_table(n))) d << "table mismatch for J(" << n << "); ";
            if (!(betti_table(L) == diamond_table(n))) d << "table mismatch for L(" << n << ")";
        });

    if (n <= 5)
        run(tag(3, "lambda and CM type of L and of a generic link of J"),
            [&](std::ostringstream& d) {
                long lam = lambda_count(L);
                long cm = betti_table(L).cm_type();
                if (lam != 1 || cm != 2)
                    d << "L: lambda=" << lam << " cm=" << cm << " (want 1, 2); ";
                Rng rng(seed + 3);
                CompleteIntersection c =
                    construct_generic_ci(J, CIType({2, n + 1, 2 * n + 4}), rng);
                Ideal iprime = direct_link(c, J);
                long lam2 = lambda_count(iprime);
                long cm2 = betti_table(iprime).cm_type();
                if (lam2 != 1 || cm2 != 2)
                    d << "I': lambda=" << lam2 << " cm=" << cm2 << " (want 1, 2)";
            });

    run(tag(4, "grade jumps of I and J"), [&](std::ostringstream& d) {
        CIType ji = grade_jump_values(I);
        CIType jj = grade_jump_values(J);
        if (ji != CIType({2, n, 2 * n + 4})) d << "jumps(I)=" << ji.str() << "; ";
        if (jj != CIType({2, n + 1, 2 * n + 4})) d << "jumps(J)=" << jj.str();
    });

    run(tag(5, "explicit chain from J' is sequentially bounded to (x, y^(n-2), z^n)"),
        [&](std::ostringstream& d) {
            Rng rng(seed + 5);
            ChainReport rep = verify_chain(Jp, jprime_paper_steps(n, ring), rng);
            if (!rep.sequentially_bounded) d << "chain not sequentially bounded; ";
            if (!rep.terminal_is_ci) d << "terminal is not a complete intersection; ";
            Ideal expected(ring, {detail::mono3(ring, 1, 0, 0), detail::mono3(ring, 0, n - 2, 0),
                                  detail::mono3(ring, 0, 0, n)});
            if (!equal(rep.steps.back().link, expected))
                d << "terminal differs from (x, y^" << n - 2 << ", z^" << n << ")";
        });

    run(tag(6, "J and J' have the same Hilbert function"), [&](std::ostringstream& d) {
        int cap = J.socle_bound() + 1;
        cap = std::max(cap, Jp.socle_bound() + 1);
        auto hj = J.hilbert_function(cap);
        auto hp = Jp.hilbert_function(cap);
        for (int j = 0; j <= cap; ++j)
            if (hj.value(j) != hp.value(j)) {
                d << "HF differs at degree " << j << ": " << hj.value(j) << " vs "
                  << hp.value(j);
                break;
            }
    });

    if (n <= 5)
        run(tag(7, "inverse systems of I, C', and C':J' match the displayed generators"),
            [&](std::ostringstream& d) {
                using detail::mono3;
                auto dual_mono = [&](int ex, int ey, int ez) {
                    return Polynomial::monomial(dual, Monomial({ex, ey, ez}), dual->one());
                };
                InverseSystem inv_i = InverseSystem::of_ideal(I);
                InverseSystem want_i = InverseSystem::from_generators(
                    {dual_mono(n - 1, n + 2, 0), dual_mono(0, 0, 2 * n + 3)}, ring);
                if (!same_system(inv_i, want_i)) d << "I^{-1} mismatch; ";
                if (!equal(annihilate(inv_i), I)) d << "ann(I^{-1}) != I; ";

                CompleteIntersection cprime(
                    ring, {mono3(ring, 2, 0, 0), mono3(ring, 0, n, 1),
                           mono3(ring, 0, 2 * n + 4, 0) - mono3(ring, 0, 0, 2 * n + 4)});
                InverseSystem inv_c = InverseSystem::of_ideal(cprime.ideal());
                InverseSystem want_c = InverseSystem::from_generators(
                    {dual_mono(1, 3 * n + 3, 0) + dual_mono(1, n - 1, 2 * n + 4)}, ring);
                if (!same_system(inv_c, want_c)) d << "(C')^{-1} mismatch; ";
                if (!equal(annihilate(inv_c), cprime.ideal())) d << "ann((C')^{-1}) != C'; ";

                InverseSystem link_dual = link_dual_generators(cprime, Jp);
                InverseSystem want_l = InverseSystem::from_generators(
                    {dual_mono(0, 0, 2 * n + 3), dual_mono(0, n - 2, n + 3),
                     dual_mono(1, n + 2, 0)},
                    ring);
                if (!same_system(link_dual, want_l)) d << "(C':J')^{-1} mismatch; ";
                Ideal iprime = direct_link(cprime, Jp);
                InverseSystem inv_ip = InverseSystem::of_ideal(iprime);
                if (!same_system(link_dual, inv_ip)) d << "link dual != colon dual; ";
                for (int j = 0; j <= inv_ip.top_degree() + 1; ++j)
                    if (inv_ip.dimension(j) != iprime.hilbert_function(j).value(j)) {
                        d << "dim (I')^{-1}_" << j << " != HF";
                        break;
                    }
            });

    run(tag(8, "Hilbert function link formula on every suite link"),
        [&](std::ostringstream& d) {
            for (const auto& sl : suite_links(n, ring)) {
                if (!sl.source.is_m_primary()) continue;
                if (!hf_link_formula_holds(sl.source, sl.ci, sl.link))
                    d << "HF formula fails for " << sl.name << "; ";
            }
        });

    run(tag(9, "Ferrand cones minimalize to the colon tables with the predicted trims"),
        [&](std::ostringstream& d) {
            for (const auto& sl : suite_links(n, ring)) {
                FerrandCone fc = ferrand_cone(sl.source, sl.ci);
                if (!(fc.minimalized.betti() == betti_table(sl.link))) {
                    d << sl.name << ": cone table != colon table; ";
                    continue;
                }
                // shared-generator count: CI members that are weak associates
                int shared = 0;
                for (const auto& g : sl.ci.generators())
                    if (is_weak_associate(g, sl.source)) ++shared;
                if (static_cast<int>(fc.trims.d3_unit_rows.size()) != shared)
                    d << sl.name << ": d3 unit rows " << fc.trims.d3_unit_rows.size()
                      << " != shared generators " << shared << "; ";
                // minimal-Koszul-pair count among CI generators
                SyzygyAnalyzer an(sl.source);
                int pairs = 0;
                const auto& g = sl.ci.generators();
                for (int i = 0; i < 3; ++i)
                    for (int j = i + 1; j < 3; ++j)
                        if (an.pair_is_minimal(g[i], g[j])) ++pairs;
                if (static_cast<int>(fc.trims.d2_unit_rows.size()) != pairs)
                    d << sl.name << ": d2 unit rows " << fc.trims.d2_unit_rows.size()
                      << " != minimal Koszul pairs " << pairs << "; ";
            }
        });

    run(tag(10, "double-link involution and ghost double-link bounds"),
        [&](std::ostringstream& d) {
            for (const auto& sl : suite_links(n, ring)) {
                if (sl.link.is_unit()) continue;
                if (!equal(direct_link(sl.ci, sl.link), sl.source)) {
                    d << sl.name << ": C : (C : I) != I; ";
                }
            }
            if (n == 4) {
                Rng rng(seed + 10);
                BettiTable tj = betti_table(J);
                int done = 0, guard = 0;
                while (done < 10 && guard < 200) {
                    ++guard;
                    // respect the grade jumps of J: a_2 >= n+1, a_3 >= 2n+4
                    int a1 = 3 + static_cast<int>(rng.next() % 2);
                    int a2 = n + 1 + static_cast<int>(rng.next() % 3);
                    int a3 = 2 * n + 4 + static_cast<int>(rng.next() % 3);
                    std::optional<GhostDoubleLink> ghost;
                    try {
                        ghost = try_ghost_double_link(J, CIType({a1, a2, a3}), rng);
                    } catch (const genericity_error&) {
                        continue;
                    }
                    if (!ghost) continue;
                    ++done;
                    BettiTable t2 = betti_table(ghost->result);
                    for (int i = 1; i <= 2; ++i)
                        for (int aj : {a1, a2, a3}) {
                            long lo = tj.beta(i, aj), hi = lo + 1;
                            long got = t2.beta(i, aj);
                            if (got < lo || got > hi)
                                d << "ghost bound fails at (i=" << i << ", j=" << aj << "); ";
                        }
                    for (const auto& [k, v] : t2.entries)
                        if (k.first == 3 && v != tj.beta(3, k.second))
                            d << "ghost changed beta_3 at j=" << k.second << "; ";
                    for (const auto& [k, v] : tj.entries)
                        if (k.first == 3 && v != t2.beta(3, k.second))
                            d << "ghost lost beta_3 at j=" << k.second << "; ";
                }
                if (done < 10) d << "only " << done << " ghost double links realized; ";
            }
        });

    if (n == 4)
        run(tag(11, "Koszul-homology oracle equals the resolution pipeline"),
            [&](std::ostringstream& d) {
                for (const Ideal& x : {I, J, L, Jp}) {
                    BettiTable direct = betti_table(x);
                    int cap = 0;
                    for (const auto& [k, v] : direct.entries) {
                        (void)v;
                        cap = std::max(cap, k.second);
                    }
                    auto oracle = koszul_betti_oracle(x, cap);
                    if (!(oracle.table == direct)) {
                        d << "oracle mismatch on a family instance; ";
                        break;
                    }
                }
                Rng rng(seed + 11);
                for (int t = 0; t < 20; ++t) {
                    Ideal x = random_monomial_ideal(ring, rng, 6, 4);
                    if (x.is_unit()) { --t; continue; }
                    BettiTable direct = betti_table(x);
                    int cap = 0;
                    for (const auto& [k, v] : direct.entries) {
                        (void)v;
                        cap = std::max(cap, k.second);
                    }
                    auto oracle = koszul_betti_oracle(x, cap);
                    if (!(oracle.table == direct)) {
                        d << "oracle mismatch on a random monomial ideal; ";
                        break;
                    }
                }
            });

    if (n == 4)
        run(tag(12, "linear Koszul pairs, the construct-Koszul trigger, Gorenstein symmetry, "
                    "and the socle-shift bound"),
            [&](std::ostringstream& d) {
                Rng rng(seed + 12);
                // Lemma: for z regular on R/I, every (z, f_i) is a minimal pair in (I, z)
                for (int t = 0; t < 5; ++t) {
                    std::vector<Polynomial> gens;
                    int count = 2 + static_cast<int>(rng.next() % 2);
                    for (int k = 0; k < count; ++k) {
                        Monomial m(3);
                        int deg = 1 + static_cast<int>(rng.next() % 4);
                        for (int s = 0; s < deg; ++s)
                            m = m * Monomial::variable(static_cast<int>(rng.next() % 2), 3);
                        gens.push_back(Polynomial::monomial(ring, m, ring->one()));
                    }
                    Ideal base(ring, gens);
                    if (base.is_unit()) { --t; continue; }
                    Polynomial ell = Polynomial::variable(ring, 2);
                    Ideal with_ell = base + Ideal(ring, {ell});
                    SyzygyAnalyzer an(with_ell);
                    for (const auto& f : base.minimal_generators())
                        if (with_ell.contains(f) &&
                            is_weak_associate(f, with_ell) && !an.pair_is_minimal(ell, f)) {
                            d << "(l, f) not a minimal Koszul pair; ";
                            break;
                        }
                }
                // Cor trigger: x^(n+1) ∈ mI forces the complementary pair in J
                const auto& cj = j_link_ci(n, ring).generators();
                FpVec coords = minimal_generator_coordinates(cj[1], I);
                for (std::uint32_t c : coords)
                    if (c != 0) d << "degree n+1 slot is not in mI; ";
                SyzygyAnalyzer an_j(J);
                if (!an_j.pair_is_minimal(cj[0], cj[2]))
                    d << "construct-Koszul pair is not minimal in C : I; ";
                // Gorenstein symmetry of random CI quotients; principal duals
                for (int t = 0; t < 5; ++t) {
                    std::vector<int> type{1 + static_cast<int>(rng.next() % 3),
                                          1 + static_cast<int>(rng.next() % 4),
                                          1 + static_cast<int>(rng.next() % 5)};
                    std::vector<Polynomial> fs;
                    for (int dd : type) fs.push_back(random_form(ring, dd, rng));
                    std::optional<CompleteIntersection> c;
                    try {
                        c.emplace(ring, fs);
                    } catch (const input_error&) {
                        --t;
                        continue;
                    }
                    int s = c->type().total() - 3;
                    auto hf = c->quotient_hilbert();
                    for (int j = 0; j <= s; ++j)
                        if ((j < static_cast<int>(hf.size()) ? hf[j] : 0) !=
                            (s - j < static_cast<int>(hf.size()) ? hf[s - j] : 0)) {
                            d << "CI Hilbert function not symmetric; ";
                            break;
                        }
                    if (InverseSystem::of_ideal(c->ideal()).minimal_generators().size() != 1)
                        d << "CI inverse system not principal; ";
                }
                // max socle shift bound for every witness produced here
                for (const Ideal& x : {I, J, L}) {
                    Rng wr(seed + 99);
                    GradeJumps gj = grade_jumps(x, wr);
                    int m = betti_table(x).max_socle_shift();
                    if (gj.jumps.total() < m) d << "witness type total below M; ";
                    if (gj.jumps.total() == m && !is_complete_intersection(x))
                        d << "witness meets M on a non-CI; ";
                }
            });

    return results;
}

} // namespace liaison
