#include <catch_amalgamated.hpp>

#include "liaison/parse.hpp"

using namespace liaison;

namespace {
const RingPtr R3 = Ring::make(3);
Polynomial pp(const std::string& s) { return parse_polynomial(s, R3); }
} // namespace

TEST_CASE("prime field arithmetic") {
    const std::uint32_t p = 32003;
    Fp a(12345, p), b(31999, p);
    CHECK((a + b).value() == (12345ull + 31999ull) % p);
    CHECK((a - b).value() == (12345ull + p - 31999ull) % p);
    CHECK((a * b).value() == 12345ull * 31999ull % p);
    CHECK((a * a.inverse()).is_one());
    CHECK((-a + a).is_zero());
    CHECK(Fp(-1, p).value() == p - 1);
    CHECK_THROWS_AS(Fp(0, p).inverse(), input_error);

    // field axioms on a pseudo-random sample
    std::uint64_t s = 1;
    for (int i = 0; i < 200; ++i) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        Fp x(static_cast<std::int64_t>(s % p), p);
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        Fp y(static_cast<std::int64_t>(s % p), p);
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        Fp z(static_cast<std::int64_t>(s % p), p);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y) * z == x * (y * z));
        if (!x.is_zero()) CHECK(x / x == Fp(1, p));
    }
}

TEST_CASE("modulus must be prime") {
    CHECK_THROWS_AS(Ring::make(3, 32004), input_error);
    CHECK_NOTHROW(Ring::make(3, 2));
    CHECK_NOTHROW(Ring::make(3, 101));
}

TEST_CASE("monomial basics") {
    Monomial a({2, 1, 0}), b({1, 3, 2});
    CHECK(a.degree() == 3);
    CHECK((a * b).exponents() == ExpVec{3, 4, 2});
    CHECK(lcm(a, b).exponents() == ExpVec{2, 3, 2});
    CHECK(gcd(a, b).exponents() == ExpVec{1, 1, 0});
    CHECK(!a.divides(b));
    CHECK(gcd(a, b).divides(a));
    CHECK(a.divides(lcm(a, b)));
    CHECK(lcm(a, b).quotient(a).exponents() == ExpVec{0, 2, 2});
}

TEST_CASE("grevlex order properties") {
    auto ord = MonomialOrder::grevlex(3);
    Monomial x = Monomial::variable(0, 3), y = Monomial::variable(1, 3),
             z = Monomial::variable(2, 3);
    CHECK(ord.greater(x, y));
    CHECK(ord.greater(y, z));
    // y^12 > z^12 under grevlex with x > y > z
    CHECK(ord.greater(Monomial({0, 12, 0}), Monomial({0, 0, 12})));
    // degree-compatible
    CHECK(ord.greater(Monomial({0, 0, 2}), Monomial({1, 0, 0})));
    // x*z vs y^2: grevlex tie-break
    CHECK(ord.greater(Monomial({0, 2, 0}), Monomial({1, 0, 1})));

    // total order refining divisibility, multiplicative, 1 minimal
    auto all = monomials_of_degree(3, 3, ord);
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(ord.greater(all[i], Monomial(3)));
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            CHECK(ord.greater(all[i], all[j]));
            Monomial m({1, 2, 0});
            CHECK(ord.greater(all[i] * m, all[j] * m));
        }
    }
    // divisibility refinement across degrees
    Monomial m1({1, 1, 0}), m2({1, 1, 1});
    CHECK(m1.divides(m2));
    CHECK(ord.less(m1, m2));
}

TEST_CASE("grlex differs from grevlex") {
    auto gl = MonomialOrder::grlex(3);
    auto grl = MonomialOrder::grevlex(3);
    // x*z vs y^2: grlex says x wins immediately
    CHECK(gl.greater(Monomial({1, 0, 1}), Monomial({0, 2, 0})));
    CHECK(grl.less(Monomial({1, 0, 1}), Monomial({0, 2, 0})));
}

TEST_CASE("polynomial arithmetic and normalization") {
    Polynomial f = pp("x^2 + 2*x*y + y^2");
    Polynomial g = pp("x + y");
    CHECK(g * g == f);
    CHECK((f - f).is_zero());
    CHECK(f.is_homogeneous());
    CHECK(!pp("x + 1").is_homogeneous());
    CHECK(pp("x - x").is_zero());
    CHECK(f.degree() == 2);
    CHECK(f.lead_monomial() == Monomial({2, 0, 0}));
    Polynomial h = pp("y^12 - z^12");
    CHECK(h.lead_monomial() == Monomial({0, 12, 0}));
    CHECK(h.term_count() == 2);
}

TEST_CASE("parser round trips and errors") {
    for (const std::string s :
         {"x*z", "y^12 - z^12", "3*x*y*z^5", "x^2 + 2*x*y + y^2", "x", "z^12",
          "2*x - 3*y", "x^4"}) {
        Polynomial f = pp(s);
        CHECK(pp(f.str()) == f);
    }
    CHECK(pp("  y ^ 12  -  z ^ 12 ") == pp("y^12-z^12"));
    CHECK_THROWS_AS(pp("w^2"), input_error);
    CHECK_THROWS_AS(pp("x +"), input_error);
    CHECK_THROWS_AS(pp("x ** y"), input_error);
    CHECK_THROWS_AS(pp(""), input_error);
    CHECK_THROWS_AS(parse_generators("x, x + 1", R3), input_error);
    CHECK_THROWS_AS(parse_generators("x, 0", R3), input_error);
    auto gens = parse_generators("x*z, y*z, z^12, x^4, y^7", R3);
    CHECK(gens.size() == 5);
    CHECK(gens[3] == pp("x^4"));

    // parse error positions are reported
    try {
        pp("x^2 + w");
        FAIL("expected parse error");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("position 6") != std::string::npos);
    }
}

TEST_CASE("balanced coefficient printing") {
    Polynomial h = pp("y^12 - z^12");
    CHECK(h.str() == "y^12 - z^12");
    CHECK(pp("3*x*y*z^5").str() == "3*x*y*z^5");
    CHECK(pp("x - x + z").str() == "z");
}

TEST_CASE("variable override and precedence") {
    auto ring = Ring::make(2, kDefaultModulus, MonomialOrder::grevlex(2), {"a", "b"});
    Polynomial f = parse_polynomial("a^2*b - b^3", ring);
    CHECK(f.lead_monomial() == Monomial({2, 1}));
    CHECK(f.str() == "a^2*b - b^3");
}
