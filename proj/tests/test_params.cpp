#include <doctest.h>

#include "qdeform/params.hpp"
#include "qdeform/pipeline.hpp"
#include "qdeform/quotient.hpp"
#include "test_util.hpp"

using namespace qdeform;

namespace {
Rational R(const char* s) { return Rational::parse(s); }
}  // namespace

TEST_CASE("the worked example tuple") {
    DeformationParams p = example_params();
    CHECK(p.a == R("(t+t^2+t^3)/(1+t)"));
    CHECK(p.b == R("1+t^2+t^3"));
    CHECK(p.c == R("1/(1+t)"));
    CHECK(p.d == R("1+t+t^2"));
    CHECK(p.w == R("t"));
    CHECK(p.z == R("t"));

    ValidationReport rep = validate(p);
    CHECK(rep.ok());
    for (const ValidationEntry& e : rep.entries) CHECK_MESSAGE(e.pass, e.name);
    CHECK(rep.find("coefficient-system") != nullptr);
}

TEST_CASE("validation failures are reported by name") {
    SUBCASE("c = d degenerates the idempotents") {
        DeformationParams p = example_params();
        p.d = p.c;
        ValidationReport rep = validate(p);
        CHECK_FALSE(rep.ok());
        REQUIRE(rep.find("c-neq-d") != nullptr);
        CHECK_FALSE(rep.find("c-neq-d")->pass);
    }
    SUBCASE("w = 0 contradicts the coefficient system") {
        DeformationParams p = example_params();
        p.w = Rational::zero();
        p.a = p.w + p.c + p.d;
        p.b = p.w * p.c + p.w * p.d + p.c * p.d;
        ValidationReport rep = validate(p);
        CHECK_FALSE(rep.ok());
        CHECK_FALSE(rep.find("cubic-identity")->pass);
        CHECK_FALSE(rep.find("coefficient-system")->pass);
    }
    SUBCASE("a unit a fails the valuation hypothesis") {
        DeformationParams p = example_params();
        p.a = R("1+t");
        ValidationReport rep = validate(p);
        CHECK_FALSE(rep.find("a-valuation")->pass);
    }
    SUBCASE("z must be a nonzero non-unit") {
        DeformationParams p = example_params();
        p.z = Rational::zero();
        CHECK_FALSE(validate(p).find("z-nonzero")->pass);
        p.z = Rational::one();
        CHECK_FALSE(validate(p).find("z-valuation")->pass);
    }
}

TEST_CASE("w, c and d are exactly the roots of x pi(x) + a") {
    DeformationParams p = example_params();
    XPoly cubic = XPoly::x() * build_pi(p) + XPoly(p.a);
    CHECK(cubic(p.w).is_zero());
    CHECK(cubic(p.c).is_zero());
    CHECK(cubic(p.d).is_zero());
    CHECK_FALSE(cubic(Rational::zero()).is_zero());
}

TEST_CASE("the direct identity and the coefficient system agree") {
    // both formulations of the cubic identity accept/reject together
    for (int i = 0; i < 150; ++i) {
        DeformationParams p;
        p.w = testutil::random_rational(3);
        p.c = testutil::random_rational(3);
        p.d = testutil::random_rational(3);
        p.a = p.w + p.c + p.d;
        // half the time, an honest b; otherwise a perturbed one
        p.b = p.w * p.c + p.w * p.d + p.c * p.d;
        if (i % 2 == 1) p.b += R("t^4");
        p.z = R("t");
        ValidationReport rep = validate(p);
        const ValidationEntry* direct = rep.find("cubic-identity");
        const ValidationEntry* system = rep.find("coefficient-system");
        REQUIRE(direct != nullptr);
        REQUIRE(system != nullptr);
        CHECK(direct->pass == system->pass);
    }
}

TEST_CASE("polynomial search") {
    SUBCASE("degree bound 0 leaves nothing") {
        SearchResult r = search_params(0, 10);
        CHECK(r.found.empty());
        CHECK(r.candidates_tested == 2);
        CHECK(r.example_reaccepted);
    }
    SUBCASE("degree bound 3 is provably empty") {
        // a = w+c+d = wcd forces deg w + deg c + deg d <= max degree, so two
        // of the three must be constants, which the hypotheses rule out
        SearchResult r = search_params(3, 10);
        CHECK(r.found.empty());
        CHECK(r.candidates_tested == 1024);
        CHECK(r.example_reaccepted);
    }
    SUBCASE("degree bound is capped") {
        CHECK_THROWS_AS(search_params(9, 1), std::invalid_argument);
    }
}

TEST_CASE("validation is sufficient for the whole pipeline") {
    // every tuple the search accepts must drive the full chain to green;
    // the worked example anchors the property
    SearchResult r = search_params(3, 10);
    std::vector<DeformationParams> tuples = r.found;
    tuples.push_back(example_params());

    // the cubic identity is symmetric in (w, c, d), so swapping c and d
    // (which swaps e2 and e3) gives a second valid tuple
    DeformationParams swapped = example_params();
    std::swap(swapped.c, swapped.d);
    tuples.push_back(swapped);

    // solving w = (c+d)/(1+cd) for fresh c, d yields a tuple whose a has
    // valuation 2; its pi needs the escalated root search (inconclusive
    // modulo t^2, irreducible modulo t^8)
    DeformationParams deep = parse_params_text(
        "c = 1/(1+t)\nd = 1+t+t^2+t^3\nw = t^2/(1+t)\n");
    CHECK(deep.a == R("t^2+t^3"));
    CHECK(deep.a.valuation() == 2);
    tuples.push_back(deep);

    for (const DeformationParams& p : tuples) {
        REQUIRE(validate(p).ok());
        VerificationReport rep = run_verification(p);
        CHECK_MESSAGE(rep.all_pass(), p.str());
    }
}

TEST_CASE("params files") {
    SUBCASE("a and b are derived when omitted") {
        DeformationParams p = parse_params_text(
            "# worked example, derived form\n"
            "c = 1/(1+t)\n"
            "d = 1+t+t^2\n"
            "w = t\n");
        DeformationParams ex = example_params();
        CHECK(p.a == ex.a);
        CHECK(p.b == ex.b);
        CHECK(p.z == R("t"));
        CHECK(p.series_precision == 16);
    }
    SUBCASE("explicit keys win") {
        DeformationParams p = parse_params_text(
            "a = (t+t^2+t^3)/(1+t)\nb = 1+t^2+t^3\nc = 1/(1+t)\nd = 1+t+t^2\nw = t\n"
            "z = t^3\nprecision = 12\n");
        CHECK(p.z == R("t^3"));
        CHECK(p.series_precision == 12);
        CHECK(validate(p).ok());
    }
    SUBCASE("malformed documents are rejected") {
        CHECK_THROWS_AS(parse_params_text("c = 1\nd = 1+t\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_params_text("c = 1\nc = t\nd = 1\nw = t\n"),
                        std::invalid_argument);
        CHECK_THROWS_AS(parse_params_text("q = 1\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_params_text("c : 1\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_params_text("c = )t(\nd = 1\nw = t\n"),
                        std::invalid_argument);
        CHECK_THROWS_AS(load_params_file("/nonexistent/params"), std::invalid_argument);
    }
    SUBCASE("serialization round-trips") {
        DeformationParams p = example_params();
        CHECK(parse_params_text(p.str()) == p);
    }
}
