#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/generators.hpp"
#include "terracini/polynomial.hpp"

using namespace terracini;

TEST_CASE("rationals are always canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational(5).is_integer());
    CHECK_FALSE(Rational(5, 3).is_integer());
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(-1, 2) + Rational(1, 2) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::from_string("40") == Rational(40));
    CHECK(Rational::from_string("-4/6") == Rational(-2, 3));
    CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("2.5"), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic matches hand expansion") {
    Poly d = Poly::var(Sym::d), g = Poly::var(Sym::g);
    Poly p = (d - g - Poly(3)) * (d - g - Poly(4));
    Poly expected = d * d - Poly(2) * d * g - Poly(7) * d + g * g + Poly(7) * g + Poly(12);
    CHECK(p == expected);
    CHECK(p.str() == "d^2 - 2*d*g + g^2 - 7*d + 7*g + 12");

    CHECK((p * Poly(0)).is_zero());
    CHECK(p * Poly(1) == p);
    CHECK((p - p).is_zero());
    CHECK(Poly().str() == "0");
}

TEST_CASE("falling factorial") {
    CHECK(falling_factorial(0) == Poly(1));
    CHECK(falling_factorial(1) == Poly::var(Sym::g));
    Poly g = Poly::var(Sym::g);
    CHECK(falling_factorial(2) == g * (g - Poly(1)));

    for (int i = 0; i <= 5; ++i) {
        Poly ff = falling_factorial(i);
        CHECK(ff.degree_in(Sym::g) == i);
        for (int gv = 0; gv < i; ++gv)
            CHECK(ff.evaluate({{Sym::g, Rational(gv)}}).is_zero());
        for (int gv = i; gv <= i + 4; ++gv) {
            long want = 1;
            for (int k = 0; k < i; ++k) want *= gv - k;
            CHECK(ff.evaluate({{Sym::g, Rational(gv)}}) == Rational(want));
        }
    }
}

TEST_CASE("substitution") {
    Poly d = Poly::var(Sym::d), g = Poly::var(Sym::g);
    Poly t = Poly(2) * (d - g - Poly(3)) * (d - g - Poly(4)) + Poly(8) * g * (d - Poly(5));
    CHECK(t.evaluate({{Sym::d, Rational(8)}, {Sym::g, Rational(0)}}) == Rational(40));
    CHECK(t.evaluate({{Sym::d, Rational(4)}, {Sym::g, Rational(0)}}) == Rational(0));
    CHECK(Poly().evaluate({}) == Rational(0));

    // Partial substitution keeps the remaining symbol.
    Poly partial = t.substitute({{Sym::g, Rational(0)}});
    CHECK(partial.variables() == std::vector<Sym>{Sym::d});
    CHECK_THROWS_AS(t.evaluate({{Sym::d, Rational(8)}}), std::domain_error);
}

TEST_CASE("ring axioms on random triples") {
    testgen::Gen gen(20240601);
    std::vector<Sym> vars{Sym::d, Sym::g, Sym::t1, Sym::t2};
    for (int it = 0; it < 1000; ++it) {
        Poly a = gen.poly(vars), b = gen.poly(vars), c = gen.poly(vars);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Poly());
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    testgen::Gen gen(7771);
    std::vector<Sym> vars{Sym::d, Sym::g, Sym::t1, Sym::t2};
    for (int it = 0; it < 300; ++it) {
        Poly a = gen.poly(vars), b = gen.poly(vars);
        std::map<Sym, Rational> at;
        for (Sym v : vars) at[v] = gen.rational();
        CHECK((a * b).evaluate(at) == a.evaluate(at) * b.evaluate(at));
        CHECK((a + b).evaluate(at) == a.evaluate(at) + b.evaluate(at));
    }
}

TEST_CASE("canonical text is deterministic and graded") {
    Poly d = Poly::var(Sym::d), g = Poly::var(Sym::g);
    Poly t = Poly(2) * (d - g - Poly(3)) * (d - g - Poly(4)) + Poly(8) * g * (d - Poly(5));
    CHECK(t.str() == "2*d^2 + 4*d*g + 2*g^2 - 14*d - 26*g + 24");
    CHECK((-d).str() == "-d");
    CHECK((Rational(4, 3) * Poly::var(Sym::d, 3)).str() == "4/3*d^3");
    CHECK((d * g - Poly(1)).str() == "d*g - 1");
}

TEST_CASE("coefficient extraction round-trips") {
    testgen::Gen gen(99);
    for (int it = 0; it < 100; ++it) {
        Poly p = gen.poly({Sym::t1, Sym::t2}, 6, 4);
        CHECK(Poly::from_coeffs(p.coeffs_in(Sym::t2), Sym::t2) == p);
    }
}
