#include <doctest.h>

#include "qdeform/rational.hpp"
#include "test_util.hpp"

using namespace qdeform;
using testutil::random_nonzero_rational;
using testutil::random_poly;
using testutil::random_rational;

namespace {
Rational R(const char* s) { return Rational::parse(s); }
}  // namespace

TEST_CASE("polynomial basics over GF(2)") {
    Gf2Poly p = Gf2Poly::with_terms({0, 2, 3});
    CHECK(p.str() == "1+t^2+t^3");
    CHECK(p.degree() == 3);
    CHECK(p.valuation() == 0);
    CHECK((p + p).is_zero());

    Gf2Poly q = Gf2Poly::parse("1 + t");
    CHECK((p * q).str() == "1+t+t^2+t^4");
    auto [quo, rem] = (p * q).divmod(q);
    CHECK(quo == p);
    CHECK(rem.is_zero());
    CHECK(gcd(p * q, q) == q);

    CHECK_THROWS_AS(Gf2Poly::zero().valuation(), std::domain_error);
    CHECK_THROWS_AS(Gf2Poly::parse("t^"), std::invalid_argument);
    CHECK_THROWS_AS(Gf2Poly::parse("u"), std::invalid_argument);
    CHECK_THROWS_AS(Gf2Poly::parse(""), std::invalid_argument);
    CHECK(Gf2Poly::parse("0").is_zero());
    CHECK(Gf2Poly::parse("t+t").is_zero());
}

TEST_CASE("rational addition cancels in characteristic 2") {
    CHECK((R("t") + R("t")).is_zero());
    CHECK((R("1/(1+t)") + R("t/(1+t)")).is_one());
}

TEST_CASE("rational addition cross-multiplies and reduces") {
    // oracle: clear denominators with only polynomial arithmetic
    Rational x = R("t+t^2");
    Rational y = R("1/(1+t)");
    Rational sum = x + y;
    Gf2Poly lhs = sum.num() * (x.den() * y.den());
    Gf2Poly rhs = (x.num() * y.den() + y.num() * x.den()) * sum.den();
    CHECK(lhs == rhs);
    CHECK(sum == R("(1+t+t^3)/(1+t)"));
}

TEST_CASE("rational multiplication and inverse") {
    CHECK((R("1+t") * R("1/(1+t)")).is_one());
    CHECK(R("t") * R("t") == R("t^2"));
    CHECK(R("(t+t^2+t^3)/(1+t)") * R("1+t") == R("t+t^2+t^3"));
    CHECK_THROWS_AS(Rational::zero().inv(), std::domain_error);
}

TEST_CASE("t-adic valuation") {
    CHECK(Rational::zero().valuation().is_infinite());
    CHECK(R("(t+t^2+t^3)/(1+t)").valuation() == 1);
    CHECK(R("1/t^2").valuation() == -2);
    CHECK(Valuation::infinity() > 100);
    CHECK(Valuation::infinity() >= 1);
    CHECK(Valuation::finite(-2) < 0);
}

TEST_CASE("series expansion") {
    Series s = R("1/(1+t)").expand(4);
    CHECK(s.poly() == Gf2Poly::with_terms({0, 1, 2, 3}));
    CHECK(R("t+t^2").expand(4).poly() == Gf2Poly::with_terms({1, 2}));
    CHECK_THROWS_AS(R("1/t").expand(4), std::domain_error);
    CHECK_THROWS_AS(Series(Gf2Poly::t(), 4).inv(), std::domain_error);
}

TEST_CASE("evaluation at t=0") {
    CHECK(R("1/(1+t)").at_zero() == Gf2::one());
    CHECK(R("(t+t^2+t^3)/(1+t)").at_zero() == Gf2::zero());
    CHECK(R("1+t^2+t^3").at_zero() == Gf2::one());
    CHECK_THROWS_AS(R("1/t").at_zero(), std::domain_error);
}

TEST_CASE("1-units") {
    CHECK(R("1+t^2+t^3").is_one_unit());
    CHECK(R("1/(1+t)").is_one_unit());
    CHECK_FALSE(R("t").is_one_unit());
    CHECK_FALSE(Rational::zero().is_one_unit());
}

TEST_CASE("parser accepts the worked-example inputs and rejects junk") {
    CHECK(R("(t+t^2+t^3)/(1+t)") == Rational(Gf2Poly::with_terms({1, 2, 3}),
                                             Gf2Poly::with_terms({0, 1})));
    CHECK(R(" 1 + t + t^2 ") == Rational(Gf2Poly::with_terms({0, 1, 2})));
    CHECK(R("1/(1+t)").den() == Gf2Poly::with_terms({0, 1}));
    CHECK_THROWS_AS(R("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(R("1/(1+t"), std::invalid_argument);
    CHECK_THROWS_AS(R("a+b"), std::invalid_argument);
    CHECK_THROWS_AS(R("1/2/3"), std::invalid_argument);
}

TEST_CASE("field axioms on random samples") {
    for (int i = 0; i < 1000; ++i) {
        Rational a = random_rational(), b = random_rational(), c = random_rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + a).is_zero());
        if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    }
}

TEST_CASE("valuation is additive on products") {
    for (int i = 0; i < 300; ++i) {
        Rational a = random_nonzero_rational(), b = random_nonzero_rational();
        CHECK((a * b).valuation() == a.valuation() + b.valuation());
    }
}

TEST_CASE("series expansion is truncation-consistent") {
    for (int i = 0; i < 200; ++i) {
        Rational a = random_rational();
        if (a.valuation() < 0) a = a.inv();  // flip to nonnegative valuation
        if (a.valuation() < 0) continue;
        Series big = a.expand(12);
        Series small = a.expand(5);
        CHECK(big.truncated(5) == small);
    }
}

TEST_CASE("evaluation at t=0 is a ring homomorphism") {
    for (int i = 0; i < 300; ++i) {
        Rational a = random_rational(), b = random_rational();
        if (a.valuation() < 0 || b.valuation() < 0) continue;
        CHECK((a + b).at_zero() == a.at_zero() + b.at_zero());
        CHECK((a * b).at_zero() == a.at_zero() * b.at_zero());
    }
}

TEST_CASE("canonical form: equal values have equal representations") {
    for (int i = 0; i < 300; ++i) {
        Gf2Poly p = random_poly(5);
        Gf2Poly q = testutil::random_nonzero_poly(5);
        Gf2Poly g = testutil::random_nonzero_poly(4);
        CHECK(Rational(p, q) == Rational(p * g, q * g));
    }
}

TEST_CASE("printing round-trips through the parser") {
    for (int i = 0; i < 300; ++i) {
        Rational a = random_rational();
        CHECK(Rational::parse(a.str()) == a);
    }
}
