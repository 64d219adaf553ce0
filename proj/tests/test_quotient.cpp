#include <doctest.h>

#include "qdeform/quotient.hpp"
#include "test_util.hpp"

using namespace qdeform;
using testutil::random_rational;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

// Independent expansion of pi(x)(x+c)(x+d) by the symmetric-function
// formulas; the production code multiplies polynomials instead.
std::array<Rational, 5> modulus_coeffs_oracle(const DeformationParams& p) {
    Rational cd = p.c * p.d;
    Rational cpd = p.c + p.d;
    return {p.b * cd,                      // constant
            p.a * cd + p.b * cpd,          // x
            cd + p.a * cpd + p.b,          // x^2
            p.a + cpd,                     // x^3
            Rational::one()};
}

QuotientElement random_element(const std::shared_ptr<const QuotientRing>& ring) {
    return ring->element({random_rational(4), random_rational(4), random_rational(4),
                          random_rational(4)});
}

}  // namespace

TEST_CASE("modulus construction") {
    DeformationParams p = example_params();
    XPoly pt = build_modulus(p);
    std::array<Rational, 5> oracle = modulus_coeffs_oracle(p);

    CHECK(pt.degree() == 4);
    CHECK(pt.is_monic());
    for (std::size_t i = 0; i < 5; ++i) CHECK(pt.coeff(i) == oracle[i]);

    SUBCASE("specializes to x^4 + 1 at t = 0") {
        for (std::size_t i = 0; i <= 4; ++i) {
            CHECK(pt.coeff(i).valuation() >= 0);
            Gf2 want = (i == 0 || i == 4) ? Gf2::one() : Gf2::zero();
            CHECK(pt.coeff(i).at_zero() == want);
        }
    }
    SUBCASE("cubic coefficient is a + c + d = w") {
        CHECK(pt.coeff(3) == p.a + p.c + p.d);
        CHECK(pt.coeff(3) == p.w);
        CHECK(pt.coeff(3) == R("t"));
    }
    SUBCASE("constant coefficient is b c d") { CHECK(pt.coeff(0) == p.b * p.c * p.d); }
}

TEST_CASE("reduction modulo the modulus") {
    DeformationParams p = example_params();
    auto ring = QuotientRing::make(build_modulus(p));

    CHECK(ring->reduce(XPoly::monomial(Rational::one(), 3)).coords() ==
          std::array<Rational, 4>{Rational::zero(), Rational::zero(), Rational::zero(),
                                  Rational::one()});
    CHECK(ring->reduce(ring->modulus()).is_zero());

    SUBCASE("x^4 reduces to the modulus tail") {
        std::array<Rational, 5> oracle = modulus_coeffs_oracle(p);
        QuotientElement x4 = ring->reduce(XPoly::monomial(Rational::one(), 4));
        for (std::size_t i = 0; i < 4; ++i) CHECK(x4.coords()[i] == oracle[i]);
    }
    SUBCASE("reduce is compatible with lift") {
        for (int i = 0; i < 50; ++i) {
            QuotientElement v = random_element(ring);
            CHECK(ring->reduce(ring->lift(v)) == v);
        }
    }
    SUBCASE("reduction is additive") {
        XPoly f = XPoly::monomial(R("1+t"), 6) + XPoly::monomial(R("1/(1+t)"), 2);
        XPoly g = XPoly::monomial(R("t^2"), 5) + XPoly::one();
        CHECK(ring->reduce(f + g) == ring->reduce(f) + ring->reduce(g));
    }
    SUBCASE("bad moduli are rejected") {
        CHECK_THROWS_AS(QuotientRing::make(XPoly::monomial(R("t"), 4)), std::domain_error);
        CHECK_THROWS_AS(QuotientRing::make(XPoly::monomial(Rational::one(), 3)),
                        std::domain_error);
    }
}

TEST_CASE("quotient multiplication") {
    DeformationParams p = example_params();
    auto ring = QuotientRing::make(build_modulus(p));

    CHECK(ring->x() * ring->x() ==
          ring->element({Rational::zero(), Rational::zero(), Rational::one(),
                         Rational::zero()}));

    IdempotentTriple e = compute_idempotents(ring, p);
    CHECK((e.e1 * e.e2).is_zero());

    for (int i = 0; i < 20; ++i) {
        QuotientElement u = random_element(ring);
        CHECK(u * ring->one() == u);
    }

    SUBCASE("ring axioms on random samples") {
        for (int i = 0; i < 400; ++i) {
            QuotientElement u = random_element(ring), v = random_element(ring),
                            w = random_element(ring);
            CHECK(u * v == v * u);
            CHECK((u * v) * w == u * (v * w));
            CHECK(u * (v + w) == u * v + u * w);
            CHECK((u + u).is_zero());
        }
    }

    SUBCASE("mixed contexts are rejected") {
        XPoly other = XPoly::monomial(Rational::one(), 4) + XPoly(R("1+t"));
        auto ring2 = QuotientRing::make(other);
        CHECK_THROWS_AS(ring->x() * ring2->x(), std::logic_error);
    }
}

TEST_CASE("idempotent triple") {
    DeformationParams p = example_params();
    auto ring = QuotientRing::make(build_modulus(p));
    IdempotentTriple e = compute_idempotents(ring, p);
    IdempotentChecks c = check_idempotents(ring, e);

    CHECK(c.idempotent[0]);
    CHECK(c.idempotent[1]);
    CHECK(c.idempotent[2]);
    CHECK(c.orthogonal);
    CHECK(c.complete);
    CHECK(c.rank == std::array<std::size_t, 3>{2, 1, 1});
    CHECK(c.ok());

    SUBCASE("e1 in closed form: (x^3 + a x^2 + b x + a)/a") {
        CHECK(e.e1.coords() ==
              std::array<Rational, 4>{Rational::one(), p.b / p.a, Rational::one(),
                                      p.a.inv()});
    }
    SUBCASE("idempotents live over k((t)), not over k[[t]]") {
        bool negative_val = false;
        for (const Rational& r : e.e1.coords())
            if (r.valuation() < 0) negative_val = true;
        CHECK(negative_val);
    }
    SUBCASE("degenerate parameters are rejected") {
        DeformationParams bad = p;
        bad.d = bad.c;
        CHECK_THROWS_AS(compute_idempotents(ring, bad), std::domain_error);
        DeformationParams bad2 = p;
        bad2.a = Rational::zero();
        CHECK_THROWS_AS(compute_idempotents(ring, bad2), std::domain_error);
    }
}

TEST_CASE("separability of polynomials") {
    DeformationParams p = example_params();
    XPoly x4_1 = XPoly::monomial(Rational::one(), 4) + XPoly::one();
    CHECK_FALSE(is_separable(x4_1));
    CHECK(is_separable(build_modulus(p)));
    XPoly xc({p.c, Rational::one()});
    XPoly xd({p.d, Rational::one()});
    CHECK(is_separable(xc * xd));
    CHECK_THROWS_AS(is_separable(XPoly::zero()), std::invalid_argument);
}

TEST_CASE("irreducibility semidecision") {
    DeformationParams p = example_params();

    SUBCASE("the example pi has no residue roots") {
        CHECK(irreducibility_check(build_pi(p), 2).status == RootSearchStatus::Irreducible);
        CHECK(irreducibility_check(build_pi(p), 8).status == RootSearchStatus::Irreducible);
    }

    SUBCASE("a square splits with an exact root") {
        // x^2 + (1+t)^2 has the double root 1+t
        XPoly sq({R("1+t") * R("1+t"), Rational::zero(), Rational::one()});
        RootSearch r = irreducibility_check(sq, 2);
        CHECK(r.status == RootSearchStatus::ReducibleWithRoot);
        REQUIRE(r.root.has_value());
        CHECK(*r.root == R("1+t"));
    }

    SUBCASE("escalation resolves a shallow false positive") {
        // x^2 + 1 + t^3: u = 1 is a root modulo t^2 but nothing lifts,
        // and modulo t^4 no residue root survives
        XPoly q({R("1+t^3"), Rational::zero(), Rational::one()});
        CHECK(irreducibility_check(q, 2).status == RootSearchStatus::Unknown);
        CHECK(irreducibility_check(q, 4).status == RootSearchStatus::Irreducible);
    }

    SUBCASE("hypothesis violations are rejected") {
        XPoly unit_a({p.b, Rational::one(), Rational::one()});  // a = 1 is a unit
        CHECK_THROWS_AS(irreducibility_check(unit_a, 2), std::domain_error);
        XPoly bad_b({R("t"), p.a, Rational::one()});  // b = t is not a 1-unit
        CHECK_THROWS_AS(irreducibility_check(bad_b, 2), std::domain_error);
        CHECK_THROWS_AS(irreducibility_check(build_pi(p), 0), std::invalid_argument);
        CHECK_THROWS_AS(irreducibility_check(build_pi(p), 25), std::invalid_argument);
        CHECK_THROWS_AS(irreducibility_check(build_modulus(p), 2), std::domain_error);
    }
}
