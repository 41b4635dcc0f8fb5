#include <catch_amalgamated.hpp>

#include "liaison/ideal.hpp"

using namespace liaison;

namespace {
const RingPtr R3 = Ring::make(3);
Polynomial pp(const std::string& s) { return parse_polynomial(s, R3); }
std::vector<Polynomial> gens(const std::string& s) { return parse_generators(s, R3); }

bool same_set(std::vector<Polynomial> a, std::vector<Polynomial> b) {
    if (a.size() != b.size()) return false;
    for (const auto& f : a) {
        bool found = false;
        for (const auto& g : b)
            if (f == g) { found = true; break; }
        if (!found) return false;
    }
    return true;
}
} // namespace

TEST_CASE("groebner basis of already-reduced inputs") {
    CHECK(same_set(groebner_basis(gens("x, y"), R3), gens("x, y")));
    // monomial ideals are self-Groebner
    CHECK(same_set(groebner_basis(gens("x*z, y*z, z^12, x^4, y^7"), R3),
                   gens("x*z, y*z, z^12, x^4, y^7")));
}

TEST_CASE("groebner basis with one new S-pair element") {
    // the S-pair of yz and y^12 - z^12 reduces to z^13
    auto gb = groebner_basis(gens("y*z, x^5, y^12 - z^12"), R3);
    CHECK(same_set(gb, gens("y*z, x^5, y^12 - z^12, z^13")));
}

TEST_CASE("groebner idempotence") {
    for (const std::string s :
         {"y*z, x^5, y^12 - z^12", "x^2 + y*z, y^2 - x*z, x*y + z^2", "x, y",
          "x*z - y^2, y*z - x^2"}) {
        auto g1 = groebner_basis(gens(s), R3);
        auto g2 = groebner_basis(g1, R3);
        CHECK(same_set(g1, g2));
    }
}

TEST_CASE("normal form examples and certificates") {
    SECTION("x^2 against {x}") {
        auto nf = normal_form(pp("x^2"), gens("x"));
        CHECK(nf.remainder.is_zero());
        CHECK(nf.quotients[0] == pp("x"));
    }
    SECTION("y^2 against {x}") {
        auto nf = normal_form(pp("y^2"), gens("x"));
        CHECK(nf.remainder == pp("y^2"));
    }
    SECTION("z^13 against a non-Groebner set stays nonzero") {
        auto nf = normal_form(pp("z^13"), gens("y*z, x^5, y^12 - z^12"));
        CHECK(!nf.remainder.is_zero());
    }
}

TEST_CASE("membership consistency: certificate re-expands") {
    auto basis = groebner_basis(gens("x^2 + y*z, y^2 - x*z, x*y + z^2"), R3);
    std::uint64_t s = 42;
    auto rnd_poly = [&](int deg) {
        auto monos = monomials_of_degree(3, deg, R3->order());
        std::vector<Term> terms;
        for (const auto& m : monos) {
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            if (s % 3 == 0) terms.push_back({m, R3->element(static_cast<std::int64_t>(s % 7) - 3)});
        }
        return Polynomial(R3, terms);
    };
    for (int deg = 2; deg <= 6; ++deg) {
        Polynomial f = rnd_poly(deg);
        auto nf = normal_form(f, basis);
        Polynomial recomposed = nf.remainder;
        for (std::size_t k = 0; k < basis.size(); ++k)
            recomposed = recomposed + nf.quotients[k] * basis[k];
        CHECK(recomposed == f);
        // no remainder term divisible by a lead term
        for (const auto& t : nf.remainder.terms())
            for (const auto& g : basis) CHECK(!g.lead_monomial().divides(t.mono));
    }
}

TEST_CASE("module syzygies via tracked groebner") {
    SECTION("Koszul syzygy of [x y]") {
        std::vector<ModVec> cols{ModVec::from_column({pp("x")}, R3),
                                 ModVec::from_column({pp("y")}, R3)};
        auto t = tracked_groebner(cols, FreeModule{{0}});
        REQUIRE(t.syzygies.size() == 1);
        const auto& s = t.syzygies[0];
        // s is (-y, x) up to a unit
        CHECK(s[0] * pp("x") + s[1] * pp("y") == Polynomial::zero(R3));
        CHECK(s[0].degree() == 1);
        CHECK(s[1].degree() == 1);
    }
    SECTION("syzygy of [x^2 xy] has degree 3") {
        std::vector<ModVec> cols{ModVec::from_column({pp("x^2")}, R3),
                                 ModVec::from_column({pp("x*y")}, R3)};
        auto t = tracked_groebner(cols, FreeModule{{0}});
        REQUIRE(t.syzygies.size() == 1);
        const auto& s = t.syzygies[0];
        CHECK(s[0] * pp("x^2") + s[1] * pp("x*y") == Polynomial::zero(R3));
        CHECK(s[0].degree() + 2 == 3);
    }
    SECTION("representations recombine to basis elements") {
        auto g = gens("x^2 - y*z, x*y + z^2");
        std::vector<ModVec> cols;
        for (const auto& f : g) cols.push_back(ModVec::from_column({f}, R3));
        auto t = tracked_groebner(cols, FreeModule{{0}});
        REQUIRE(!t.basis.empty());
        for (std::size_t k = 0; k < t.basis.size(); ++k) {
            Polynomial h = t.basis[k].to_column(1)[0];
            Polynomial sum = Polynomial::zero(R3);
            for (std::size_t j = 0; j < g.size(); ++j) sum = sum + t.reps[k][j] * g[j];
            CHECK(sum == h);
        }
        for (const auto& syz : t.syzygies) {
            Polynomial sum = Polynomial::zero(R3);
            for (std::size_t j = 0; j < g.size(); ++j) sum = sum + syz[j] * g[j];
            CHECK(sum.is_zero());
        }
    }
}
