#include <doctest.h>

#include "qdeform/deformation.hpp"
#include "test_util.hpp"

using namespace qdeform;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

std::size_t slot(std::size_t sigma, std::size_t tau) { return sigma % 4 + 4 * (tau % 2); }

}  // namespace

TEST_CASE("the quaternion group table") {
    GroupTable t = GroupTable::quaternion();

    SUBCASE("presentation relations") {
        std::size_t sigma = slot(1, 0), tau = slot(0, 1);
        // sigma^4 = 1
        std::size_t s4 = sigma;
        for (int i = 0; i < 3; ++i) s4 = t.mul(s4, sigma);
        CHECK(s4 == slot(0, 0));
        // tau sigma = sigma^3 tau
        CHECK(t.mul(tau, sigma) == t.mul(slot(3, 0), tau));
        CHECK(t.mul(tau, sigma) == slot(3, 1));
        // sigma^2 = tau^2
        CHECK(t.mul(sigma, sigma) == t.mul(tau, tau));
        CHECK(t.mul(tau, tau) == slot(2, 0));
    }
    SUBCASE("it is a group") {
        // unit
        for (std::size_t g = 0; g < 8; ++g) {
            CHECK(t.mul(0, g) == g);
            CHECK(t.mul(g, 0) == g);
        }
        // associativity
        for (std::size_t a = 0; a < 8; ++a)
            for (std::size_t b = 0; b < 8; ++b)
                for (std::size_t c = 0; c < 8; ++c)
                    CHECK(t.mul(t.mul(a, b), c) == t.mul(a, t.mul(b, c)));
        // inverses (cancellation)
        for (std::size_t g = 0; g < 8; ++g) {
            bool has_inverse = false;
            for (std::size_t h = 0; h < 8; ++h)
                if (t.mul(g, h) == 0 && t.mul(h, g) == 0) has_inverse = true;
            CHECK(has_inverse);
        }
    }
}

TEST_CASE("multiplication in the deformed algebra") {
    auto ctx = DeformationContext::make(example_params());
    const DeformationParams& p = ctx->params();

    SUBCASE("x * x lands on the x^2 slot") {
        AlgebraElement sq = ctx->x() * ctx->x();
        CHECK(sq == ctx->basis(2));
    }
    SUBCASE("y * y = z x pi(x) y + x^2 + a x") {
        AlgebraElement yy = ctx->y() * ctx->y();
        QuotientElement even = ctx->ring()->reduce(
            XPoly::x() * XPoly::x() + XPoly::x().scaled(p.a));
        QuotientElement odd = ctx->ring()->reduce((XPoly::x() * build_pi(p)).scaled(p.z));
        CHECK(yy == ctx->element(even, odd));
    }
    SUBCASE("y * x = eta(x) y") {
        AlgebraElement yx = ctx->y() * ctx->x();
        CHECK(yx == ctx->element(ctx->ring()->zero(), ctx->eta()->generator_image()));
    }
    SUBCASE("the unit is neutral") {
        for (std::size_t i = 0; i < 8; ++i) {
            CHECK(ctx->one() * ctx->basis(i) == ctx->basis(i));
            CHECK(ctx->basis(i) * ctx->one() == ctx->basis(i));
        }
    }
}

TEST_CASE("structure constants") {
    auto ctx = DeformationContext::make(example_params());
    StructureConstants sc = StructureConstants::compute(ctx);
    const DeformationParams& p = ctx->params();

    SUBCASE("flatness certificate") { CHECK(sc.flatness_violations().empty()); }

    SUBCASE("row of the unit") {
        for (std::size_t j = 0; j < 8; ++j) CHECK(sc.at(0, j) == ctx->basis(j));
    }

    SUBCASE("x * x^3 is the reduction of x^4, by the coefficient formulas") {
        Rational cd = p.c * p.d, cpd = p.c + p.d;
        std::array<Rational, 8> expected{p.b * cd,
                                         p.a * cd + p.b * cpd,
                                         cd + p.a * cpd + p.b,
                                         p.a + cpd,
                                         Rational::zero(),
                                         Rational::zero(),
                                         Rational::zero(),
                                         Rational::zero()};
        CHECK(sc.at(1, 3).coords() == expected);
    }
}

TEST_CASE("specialization at t = 0 reproduces the group table") {
    auto ctx = DeformationContext::make(example_params());
    StructureConstants sc = StructureConstants::compute(ctx);
    GroupTable table = GroupTable::quaternion();

    TableComparison cmp = specialize_at_zero(sc, table);
    CHECK(cmp.match);
    CHECK(cmp.mismatches.empty());

    SUBCASE("tau sigma lands on sigma^3 tau") { CHECK(table.mul(slot(0, 1), slot(1, 0)) == slot(3, 1)); }
    SUBCASE("tau tau lands on sigma^2") { CHECK(table.mul(slot(0, 1), slot(0, 1)) == slot(2, 0)); }
}

TEST_CASE("deformation cochains") {
    auto ctx = DeformationContext::make(example_params());
    StructureConstants sc = StructureConstants::compute(ctx);
    PsiTable psi = PsiTable::extract(sc, 8);
    GroupTable table = GroupTable::quaternion();

    SUBCASE("order zero is the group table") {
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j)
                CHECK(psi.group_product_mask(i, j) ==
                      static_cast<std::uint8_t>(1u << table.mul(i, j)));
    }

    SUBCASE("products of low sigma powers are undeformed") {
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b) {
                if (a + b >= 4) continue;
                for (unsigned o = 1; o <= 8; ++o) CHECK(psi.psi(a, b, o) == 0);
            }
    }

    SUBCASE("first-order cochain of (tau, tau)") {
        // independent route: expand the coordinates of y*y directly
        AlgebraElement yy = ctx->basis(4) * ctx->basis(4);
        std::array<Rational, 8> c = yy.coords();
        std::uint8_t mask = 0;
        for (std::size_t r = 0; r < 8; ++r)
            if (c[r].expand(2).coeff(1)) mask |= static_cast<std::uint8_t>(1u << r);
        CHECK(psi.psi(4, 4, 1) == mask);
        // frozen value: slots x, x*y, x^3*y
        CHECK(mask == ((1u << 1) | (1u << 5) | (1u << 7)));
    }

    SUBCASE("orders beyond the table are unknown, not zero") {
        CHECK_THROWS_AS(psi.psi(4, 4, 9), std::out_of_range);
        CHECK_THROWS_AS(psi.psi(4, 4, 0), std::out_of_range);
    }
}

TEST_CASE("first-order cocycle identity") {
    auto ctx = DeformationContext::make(example_params());
    StructureConstants sc = StructureConstants::compute(ctx);
    PsiTable psi = PsiTable::extract(sc, 2);
    GroupTable table = GroupTable::quaternion();

    CHECK(cocycle_check(psi, table).ok);

    SUBCASE("the zero cochain is a cocycle") {
        CHECK(cocycle_check(PsiTable::all_zero(1), table).ok);
    }
    SUBCASE("a single flipped bit breaks the identity") {
        PsiTable bad = psi.perturbed(4, 4, 1, 0);
        CocycleReport rep = cocycle_check(bad, table);
        CHECK_FALSE(rep.ok);
        CHECK(rep.failures > 0);
    }
}

TEST_CASE("exact associativity on all basis triples") {
    auto ctx = DeformationContext::make(example_params());
    AssociativityReport rep = associativity_check(ctx);
    CHECK(rep.ok);
    CHECK(rep.failures == 0);

    SUBCASE("spot checks") {
        AlgebraElement tau = ctx->basis(4), sigma = ctx->basis(1);
        CHECK((tau * tau) * sigma == tau * (tau * sigma));
        CHECK((ctx->one() * tau) * sigma == ctx->one() * (tau * sigma));
    }
}

TEST_CASE("context plumbing") {
    auto ctx = DeformationContext::make(example_params());
    CHECK_THROWS_AS(ctx->basis(8), std::out_of_range);

    DeformationParams other = example_params();
    other.z = R("t^2");
    auto ctx2 = DeformationContext::make(other);
    CHECK_THROWS_AS(ctx->x() * ctx2->x(), std::logic_error);

    DeformationParams bad = example_params();
    bad.d = bad.c;
    CHECK_THROWS_AS(DeformationContext::make(bad), std::invalid_argument);
}
