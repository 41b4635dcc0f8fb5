#include <catch_amalgamated.hpp>

#include <random>

#include "liaison/ideal.hpp"

using namespace liaison;

namespace {
const RingPtr R3 = Ring::make(3);
Ideal ii(const std::string& s) { return Ideal::from_text(s, R3); }
Polynomial pp(const std::string& s) { return parse_polynomial(s, R3); }

Monomial random_monomial(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(1, max_deg);
    int d = deg(rng);
    Monomial m(3);
    for (int step = 0; step < d; ++step) m = m * Monomial::variable(static_cast<int>(rng() % 3), 3);
    return m;
}
} // namespace

TEST_CASE("ideal construction guards") {
    CHECK_THROWS_AS(Ideal(R3, {Polynomial::zero(R3)}), input_error);
    CHECK_THROWS_AS(ii("x + 1"), input_error);
    Ideal unit = ii("3");
    CHECK(unit.is_unit());
    CHECK(unit.colon(ii("x")).is_unit());
    Ideal z = Ideal::zero(R3);
    CHECK(z.is_zero_ideal());
    CHECK(z.dimension_and_grade() == std::pair<int, int>{3, 0});
}

TEST_CASE("colon examples") {
    CHECK(equal(ii("x^2, y^2").colon(pp("x")), ii("x, y^2")));
    // C : C = (1)
    for (const std::string s : {"x^2, y^2", "x*z, y*z, z^12, x^4, y^7", "x + y, y^2"}) {
        Ideal c = ii(s);
        CHECK(c.colon(c).is_unit());
    }
    CHECK(equal(ii("x*z, y*z, z^12, x^4, y^7").colon(pp("z")), ii("x, y, z^11")));
    CHECK_THROWS_AS(ii("x").colon(Ideal::zero(R3)), input_error);
}

TEST_CASE("colon agrees with brute-force monomial colon") {
    std::mt19937_64 rng(7001);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Monomial> monos;
        int count = 2 + static_cast<int>(rng() % 3);
        for (int k = 0; k < count; ++k) monos.push_back(random_monomial(rng, 6));
        std::vector<Polynomial> gens;
        for (const auto& m : monos) gens.push_back(Polynomial::monomial(R3, m, R3->one()));
        Ideal I(R3, gens);
        Monomial g = random_monomial(rng, 5);
        // componentwise: I : g is generated by m / gcd(m, g)
        std::vector<Polynomial> expected;
        for (const auto& m : monos)
            expected.push_back(Polynomial::monomial(R3, m.quotient(gcd(m, g)), R3->one()));
        Ideal brute(R3, expected);
        CHECK(equal(I.colon(Polynomial::monomial(R3, g, R3->one())), brute));
    }
}

TEST_CASE("colon by an ideal intersects the generator colons") {
    Ideal I = ii("x^2*y, y^2*z");
    Ideal J = ii("x*y, z");
    Ideal c = I.colon(J);
    // brute force: intersection of colons
    Ideal c1 = I.colon(pp("x*y"));
    Ideal c2 = I.colon(pp("z"));
    CHECK(equal(c, intersect(c1, c2)));
    // membership sanity: f*J ⊆ I for every generator f of the result
    for (const auto& f : c.generators())
        for (const auto& g : J.generators()) CHECK(I.contains(f * g));
}

TEST_CASE("intersection examples") {
    CHECK(equal(intersect(ii("x"), ii("y")), ii("x*y")));
    CHECK(equal(intersect(ii("x, y"), ii("z")), ii("x*z, y*z")));
}

TEST_CASE("hilbert function examples") {
    SECTION("zero ideal gives binomial coefficients") {
        auto hf = Ideal::zero(R3).hilbert_function(6);
        for (int j = 0; j <= 6; ++j) CHECK(hf.value(j) == (j + 1) * (j + 2) / 2);
        CHECK(hf.krull_dim == 3);
    }
    SECTION("complete intersection of type (2,5,12)") {
        auto hf = ii("x^2, y^5, z^12").hilbert_function(20);
        // coefficients of (1+t)(1+...+t^4)(1+...+t^11)
        std::vector<long> expected(40, 0);
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 4; ++b)
                for (int c = 0; c <= 11; ++c) ++expected[a + b + c];
        for (int j = 0; j <= 20; ++j) CHECK(hf.value(j) == (j < 40 ? expected[j] : 0));
        CHECK(hf.krull_dim == 0);
    }
}

TEST_CASE("dimension and grade") {
    CHECK(ii("x, y").dimension_and_grade() == std::pair<int, int>{1, 2});
    CHECK(ii("x*z, y*z").dimension_and_grade() == std::pair<int, int>{2, 1});
    CHECK(ii("x^2, y^9, z^12, y^4*z, x*y^3*z, x*y*z^5").dimension_and_grade() ==
          std::pair<int, int>{0, 3});
    CHECK(ii("x*z, y*z, x^4").dimension_and_grade() == std::pair<int, int>{1, 2});
    // unit ideal flagged with dimension -1
    CHECK(ii("5").dimension_and_grade().first == -1);
    // a non-monomial instance: grade computed through the initial ideal
    CHECK(ii("x^2 - y*z, y^2 - x*z").grade() == 2);
}

TEST_CASE("grade bounds and complete intersections") {
    // grade <= generator count; equality for complete intersections
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<Polynomial> gens;
        int count = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k < count; ++k)
            gens.push_back(Polynomial::monomial(R3, random_monomial(rng, 5), R3->one()));
        Ideal I(R3, gens);
        if (I.is_unit()) continue;
        CHECK(I.grade() <= static_cast<int>(I.generators().size()));
    }
    CHECK(ii("x^3, y^4, z^5").grade() == 3);
    CHECK(ii("x^3, y^4").grade() == 2);
}

TEST_CASE("socle computations") {
    SECTION("(x, y, z) has one socle class in degree 0") {
        auto s = Ideal::maximal(R3).socle_generators();
        REQUIRE(s.size() == 1);
        CHECK(s[0].degree() == 0);
    }
    SECTION("(x^2, y^2, z^2) has the socle class xyz") {
        auto s = ii("x^2, y^2, z^2").socle_generators();
        REQUIRE(s.size() == 1);
        CHECK(s[0].monic() == pp("x*y*z"));
    }
    SECTION("I(4) has two socle classes") {
        auto s = ii("x*z, y*z, z^12, x^4, y^7").socle_generators();
        CHECK(s.size() == 2);
    }
    SECTION("non-m-primary input is rejected") {
        CHECK_THROWS_AS(ii("x, y").socle_generators(), input_error);
    }
}

TEST_CASE("minimal generators and truncation") {
    SECTION("redundant generator is dropped") {
        Ideal I = ii("x, y^2, x^2 + y^2");
        auto mins = I.minimal_generators();
        REQUIRE(mins.size() == 2);
        CHECK(mins[0] == pp("x"));
        CHECK(mins[1] == pp("y^2"));
    }
    SECTION("truncation examples") {
        CHECK(equal(ii("x, y^2").truncated(1), ii("x")));
        Ideal I4 = ii("x*z, y*z, z^12, x^4, y^7");
        CHECK(equal(I4.truncated(2), ii("x*z, y*z")));
        CHECK(I4.truncated(4).grade() == 2);  // (xz, yz, x^4): two lines
        CHECK(equal(I4.truncated(12), I4));
    }
    SECTION("truncation below the least generator degree is the zero ideal") {
        CHECK(ii("x^2, y^2").truncated(1).is_zero_ideal());
    }
}

TEST_CASE("representation over generators") {
    Ideal I = ii("x*z, y*z, z^12, x^4, y^7");
    for (const std::string s : {"x^5*z - y^8", "z^13", "x^4*y^7"}) {
        Polynomial f = pp(s);
        REQUIRE(I.contains(f));
        auto rep = I.representation(f);
        Polynomial sum = Polynomial::zero(R3);
        for (std::size_t j = 0; j < rep.size(); ++j) sum = sum + rep[j] * I.generators()[j];
        CHECK(sum == f);
    }
    CHECK_THROWS_AS(I.representation(pp("z^11")), input_error);
}
