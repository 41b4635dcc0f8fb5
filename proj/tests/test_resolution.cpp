#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "liaison/koszul.hpp"

using namespace liaison;

namespace {
const RingPtr R3 = Ring::make(3);
Ideal ii(const std::string& s) { return Ideal::from_text(s, R3); }

std::multiset<int> shifts_of(const BettiTable& t, int i) {
    std::multiset<int> out;
    for (const auto& [k, v] : t.entries)
        if (k.first == i)
            for (long c = 0; c < v; ++c) out.insert(k.second);
    return out;
}

Ideal random_monomial_ideal(std::mt19937_64& rng, int max_deg, int count) {
    std::uniform_int_distribution<int> deg(1, max_deg);
    std::vector<Polynomial> gens;
    for (int k = 0; k < count; ++k) {
        int d = deg(rng);
        Monomial m(3);
        for (int step = 0; step < d; ++step)
            m = m * Monomial::variable(static_cast<int>(rng() % 3), 3);
        gens.push_back(Polynomial::monomial(R3, m, R3->one()));
    }
    return Ideal(R3, gens);
}
} // namespace

TEST_CASE("syzygies of simple presentations") {
    SECTION("[x y] has the single Koszul syzygy of degree 2") {
        PolyMatrix pres{{parse_polynomial("x", R3), parse_polynomial("y", R3)}};
        auto s = syzygies(pres, FreeModule{{0}}, R3);
        REQUIRE(s.module.rank() == 1);
        CHECK(s.module.shifts[0] == 2);
    }
    SECTION("[x^2 xy] has one syzygy of degree 3") {
        PolyMatrix pres{{parse_polynomial("x^2", R3), parse_polynomial("x*y", R3)}};
        auto s = syzygies(pres, FreeModule{{0}}, R3);
        REQUIRE(s.module.rank() == 1);
        CHECK(s.module.shifts[0] == 3);
    }
    SECTION("inconsistent grading is rejected") {
        PolyMatrix pres{{parse_polynomial("x", R3)}, {parse_polynomial("y^2", R3)}};
        CHECK_THROWS_AS(syzygies(pres, FreeModule{{0, 0}}, R3), input_error);
    }
}

TEST_CASE("resolution of a principal ideal") {
    auto res = free_resolution(ii("x"));
    REQUIRE(res.length() == 1);
    CHECK(res.modules[1].shifts == std::vector<int>{1});
    CHECK(res.is_complex());
}

TEST_CASE("complete intersections resolve by the Koszul complex") {
    // type (2,5,12): step shifts {2,5,12}, {7,14,17}, {19}
    auto res = free_resolution(ii("x^2, y^5, z^12"));
    REQUIRE(res.length() == 3);
    auto t = res.betti();
    CHECK(shifts_of(t, 1) == std::multiset<int>{2, 5, 12});
    CHECK(shifts_of(t, 2) == std::multiset<int>{7, 14, 17});
    CHECK(shifts_of(t, 3) == std::multiset<int>{19});
    CHECK(res.is_complex());

    auto res2 = free_resolution(ii("x + y, y^3 - x*z*y, z^5"));
    auto t2 = res2.betti();
    CHECK(shifts_of(t2, 1) == std::multiset<int>{1, 3, 5});
    CHECK(shifts_of(t2, 2) == std::multiset<int>{4, 6, 8});
    CHECK(shifts_of(t2, 3) == std::multiset<int>{9});
}

TEST_CASE("resolution of the irrelevant maximal ideal") {
    auto t = betti_table(Ideal::maximal(R3));
    CHECK(t.beta(0, 0) == 1);
    CHECK(t.beta(1, 1) == 3);
    CHECK(t.beta(2, 2) == 3);
    CHECK(t.beta(3, 3) == 1);
    CHECK(t.cm_type() == 1);
    CHECK(t.deviation() == 0);
}

TEST_CASE("minimal resolution of I(4) matches the displayed table") {
    Ideal I = ii("x*z, y*z, z^12, x^4, y^7");
    auto res = free_resolution(I);
    CHECK(res.is_complex());
    CHECK(!res.has_constant_entry());
    auto t = res.betti();
    CHECK(shifts_of(t, 1) == std::multiset<int>{2, 2, 4, 7, 12});
    CHECK(shifts_of(t, 2) == std::multiset<int>{3, 5, 8, 11, 13, 13});
    CHECK(shifts_of(t, 3) == std::multiset<int>{12, 14});

    BettiTable bt = betti_table(I);
    CHECK(bt.cm_type() == 2);
    CHECK(bt.deviation() == 2);
    CHECK(bt.max_socle_shift() == 14);
    CHECK(bt.totals() == std::vector<long>{1, 5, 6, 2});
}

TEST_CASE("minimalize leaves a minimal complex unchanged") {
    auto res = free_resolution(ii("x*z, y*z, z^12, x^4, y^7"));
    auto before = res.betti();
    auto after = minimalize(res).betti();
    CHECK(before == after);
}

TEST_CASE("minimalize cancels padded identity summands") {
    // pad the Koszul resolution of (x, y) with a trivial R(-3) <- R(-3) pair
    Ideal I = ii("x, y");
    auto res = free_resolution(I);
    REQUIRE(res.length() == 2);
    Polynomial one = Polynomial::constant(R3, R3->one());
    Polynomial zero = Polynomial::zero(R3);
    // F_2' = F_2 ⊕ R(-3), F_1' = F_1 ⊕ R(-3); d_2' = [d_2 0; 0 1], d_1' = [d_1 0]
    res.modules[2].shifts.push_back(3);
    res.modules[1].shifts.push_back(3);
    res.diffs[1][0].push_back(zero);
    res.diffs[1][1].push_back(zero);
    res.diffs[1].push_back({zero, one});
    res.diffs[0][0].push_back(zero);
    REQUIRE(res.is_complex());
    auto trimmed = minimalize(res);
    CHECK(trimmed.is_complex());
    CHECK(trimmed.betti() == betti_table(I));
    // idempotence
    CHECK(minimalize(trimmed).betti() == trimmed.betti());
}

TEST_CASE("betti numbers are independent of generator permutations") {
    std::vector<std::string> orders = {
        "x*z, y*z, z^12, x^4, y^7",
        "y^7, x^4, z^12, y*z, x*z",
        "z^12, x*z, y^7, y*z, x^4",
    };
    auto ref = betti_table(ii(orders[0]));
    for (const auto& s : orders) CHECK(betti_table(ii(s)) == ref);
}

TEST_CASE("koszul oracle on the residue field") {
    auto k = koszul_betti_oracle(Ideal::maximal(R3), 4);
    CHECK(k.complete);
    for (int i = 0; i <= 3; ++i) CHECK(k.table.beta(i, i) == binomial(3, i));
    CHECK(k.table.entries.size() == 4);
}

TEST_CASE("koszul oracle agrees with the resolution pipeline on I(4)") {
    Ideal I = ii("x*z, y*z, z^12, x^4, y^7");
    BettiTable direct = betti_table(I);
    auto k = koszul_betti_oracle(I, koszul_default_cap(I));
    CHECK(k.complete);
    CHECK(k.table == direct);
}

TEST_CASE("oracle equivalence on random monomial ideals") {
    std::mt19937_64 rng(20240831);
    int done = 0;
    while (done < 20) {
        Ideal I = random_monomial_ideal(rng, 6, 4);
        if (I.is_unit()) continue;
        BettiTable direct = betti_table(I);
        int cap = 0;
        for (const auto& [k, v] : direct.entries) {
            (void)v;
            cap = std::max(cap, k.second);
        }
        auto oracle = koszul_betti_oracle(I, cap);
        CHECK(oracle.table == direct);
        ++done;
    }
}

TEST_CASE("rank alternating sum vanishes for m-primary ideals") {
    for (const std::string s : {"x^2, y^2, z^2", "x*z, y*z, z^12, x^4, y^7",
                                "x^2, y^3, z^4, x*y*z"}) {
        Ideal I = ii(s);
        REQUIRE(I.is_m_primary());
        auto totals = betti_table(I).totals();
        long alt = 0;
        for (std::size_t i = 0; i < totals.size(); ++i)
            alt += (i % 2 == 0 ? totals[i] : -totals[i]);
        CHECK(alt == 0);
    }
}
