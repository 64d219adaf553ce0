#include "qdeform/quotient.hpp"

#include <stdexcept>

#include "qdeform/linalg.hpp"

namespace qdeform {

namespace {

void require_same_ring(const QuotientElement& a, const QuotientElement& b) {
    if (!a.ring()->same_ring(*b.ring()))
        throw std::logic_error("QuotientElement: mixed quotient-ring contexts");
}

XPoly linear_factor(const Rational& root_shift) {
    // x + r
    return XPoly({root_shift, Rational::one()});
}

}  // namespace

bool QuotientElement::is_zero() const {
    for (const Rational& r : c_)
        if (!r.is_zero()) return false;
    return true;
}

QuotientElement QuotientElement::operator+(const QuotientElement& o) const {
    require_same_ring(*this, o);
    std::array<Rational, 4> r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = c_[i] + o.c_[i];
    return QuotientElement(ring_, std::move(r));
}

QuotientElement QuotientElement::operator*(const QuotientElement& o) const {
    require_same_ring(*this, o);
    return ring_->mul(*this, o);
}

QuotientElement QuotientElement::scaled(const Rational& s) const {
    std::array<Rational, 4> r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = c_[i] * s;
    return QuotientElement(ring_, std::move(r));
}

bool QuotientElement::operator==(const QuotientElement& o) const {
    return ring_->same_ring(*o.ring_) && c_ == o.c_;
}

std::string QuotientElement::str() const {
    static const char* names[4] = {"1", "x", "x^2", "x^3"};
    std::string s;
    for (std::size_t i = 0; i < 4; ++i) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (c_[i].is_one())
            s += names[i];
        else
            s += "(" + c_[i].str() + ")*" + names[i];
    }
    return s.empty() ? "0" : s;
}

QuotientRing::QuotientRing(XPoly modulus) : modulus_(std::move(modulus)) {}

std::shared_ptr<const QuotientRing> QuotientRing::make(XPoly modulus) {
    if (modulus.degree() != 4) throw std::domain_error("QuotientRing: modulus must have degree 4");
    if (!modulus.is_monic()) throw std::domain_error("QuotientRing: modulus must be monic");
    auto ring = std::shared_ptr<QuotientRing>(new QuotientRing(std::move(modulus)));
    // x^4 = modulus tail (char 2), then x^5 = x*x^4, x^6 = x*x^5 reduced.
    std::array<Rational, 4> tail;
    for (std::size_t i = 0; i < 4; ++i) tail[i] = ring->modulus_.coeff(i);
    ring->xpow_[0] = tail;
    for (std::size_t k = 1; k < 3; ++k) {
        const std::array<Rational, 4>& prev = ring->xpow_[k - 1];
        std::array<Rational, 4> next{Rational::zero(), prev[0], prev[1], prev[2]};
        for (std::size_t i = 0; i < 4; ++i) next[i] = next[i] + tail[i] * prev[3];
        ring->xpow_[k] = next;
    }
    return ring;
}

bool QuotientRing::same_ring(const QuotientRing& o) const {
    return this == &o || modulus_ == o.modulus_;
}

QuotientElement QuotientRing::zero() const {
    return element({Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()});
}

QuotientElement QuotientRing::one() const {
    return element({Rational::one(), Rational::zero(), Rational::zero(), Rational::zero()});
}

QuotientElement QuotientRing::x() const {
    return element({Rational::zero(), Rational::one(), Rational::zero(), Rational::zero()});
}

QuotientElement QuotientRing::element(std::array<Rational, 4> coords) const {
    return QuotientElement(shared_from_this(), std::move(coords));
}

QuotientElement QuotientRing::reduce(const XPoly& p) const {
    XPoly r = p % modulus_;
    std::array<Rational, 4> c;
    for (std::size_t i = 0; i < 4; ++i) c[i] = r.coeff(i);
    return element(std::move(c));
}

XPoly QuotientRing::lift(const QuotientElement& v) const {
    std::vector<Rational> c(v.coords().begin(), v.coords().end());
    return XPoly(std::move(c));
}

QuotientElement QuotientRing::mul(const QuotientElement& a, const QuotientElement& b) const {
    std::array<Rational, 7> prod;
    prod.fill(Rational::zero());
    for (std::size_t i = 0; i < 4; ++i) {
        if (a.coords()[i].is_zero()) continue;
        for (std::size_t j = 0; j < 4; ++j)
            prod[i + j] += a.coords()[i] * b.coords()[j];
    }
    std::array<Rational, 4> r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = prod[i];
    for (std::size_t k = 0; k < 3; ++k) {
        if (prod[4 + k].is_zero()) continue;
        for (std::size_t i = 0; i < 4; ++i) r[i] += prod[4 + k] * xpow_[k][i];
    }
    return element(std::move(r));
}

XPoly build_pi(const DeformationParams& p) {
    return XPoly({p.b, p.a, Rational::one()});
}

XPoly build_modulus(const DeformationParams& p) {
    return build_pi(p) * linear_factor(p.c) * linear_factor(p.d);
}

IdempotentTriple compute_idempotents(const std::shared_ptr<const QuotientRing>& ring,
                                     const DeformationParams& p) {
    if (p.a.is_zero()) throw std::domain_error("idempotents: a must be nonzero");
    if (p.c == p.d) throw std::domain_error("idempotents: c and d must differ");
    XPoly pi = build_pi(p);
    XPoly cubic = linear_factor(p.w) * linear_factor(p.c) * linear_factor(p.d);
    Rational inv_a = p.a.inv();
    Rational inv_acd = (p.a * (p.c + p.d)).inv();
    QuotientElement e1 = ring->reduce(cubic).scaled(inv_a);
    QuotientElement e2 = ring->reduce(pi * linear_factor(p.d)).scaled(p.c * inv_acd);
    QuotientElement e3 = ring->reduce(pi * linear_factor(p.c)).scaled(p.d * inv_acd);
    return IdempotentTriple{e1, e2, e3};
}

bool IdempotentChecks::ok() const {
    return idempotent[0] && idempotent[1] && idempotent[2] && orthogonal && complete &&
           rank[0] == 2 && rank[1] == 1 && rank[2] == 1;
}

IdempotentChecks check_idempotents(const std::shared_ptr<const QuotientRing>& ring,
                                   const IdempotentTriple& e) {
    std::array<const QuotientElement*, 3> es{&e.e1, &e.e2, &e.e3};
    IdempotentChecks out{};
    for (std::size_t i = 0; i < 3; ++i) out.idempotent[i] = (*es[i] * *es[i]) == *es[i];
    out.orthogonal = true;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j && !(*es[i] * *es[j]).is_zero()) out.orthogonal = false;
    out.complete = (e.e1 + e.e2 + e.e3) == ring->one();
    // rank of v -> e_i * v over the basis {1, x, x^2, x^3}
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<std::vector<Rational>> m;
        QuotientElement xp = ring->one();
        for (std::size_t col = 0; col < 4; ++col) {
            QuotientElement img = *es[i] * xp;
            m.push_back(std::vector<Rational>(img.coords().begin(), img.coords().end()));
            xp = xp * ring->x();
        }
        out.rank[i] = matrix_rank(std::move(m), RationalOps{});
    }
    return out;
}

bool is_separable(const XPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("is_separable: zero polynomial");
    return gcd(p, p.derivative()).degree() == 0;
}

RootSearch irreducibility_check(const XPoly& pi, unsigned precision) {
    if (precision < 1 || precision > 24)
        throw std::invalid_argument("irreducibility_check: precision must be in [1, 24]");
    if (pi.degree() != 2 || !pi.is_monic())
        throw std::domain_error("irreducibility_check: expected monic x^2 + a*x + b");
    const Rational& a = pi.coeff(1);
    const Rational& b = pi.coeff(0);
    if (a.valuation() < 1)
        throw std::domain_error("irreducibility_check: coefficient of x must have valuation >= 1");
    if (!b.is_one_unit())
        throw std::domain_error("irreducibility_check: constant term must be a 1-unit");

    Series sa = a.expand(precision);
    Series sb = b.expand(precision);
    bool residue_root_seen = false;
    // candidates u = 1 + c_1 t + ... + c_{N-1} t^{N-1}
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (precision - 1)); ++m) {
        Gf2Poly u_poly = Gf2Poly::from_bits((m << 1) | 1);
        Series u(u_poly, precision);
        Series residue = u * u + sa * u + sb;
        if (!residue.is_zero()) continue;
        residue_root_seen = true;
        // try the residue itself as an exact root
        Rational u_exact{u_poly};
        Rational exact_value = u_exact * u_exact + a * u_exact + b;
        if (exact_value.is_zero()) {
            return RootSearch{RootSearchStatus::ReducibleWithRoot, u_exact,
                              "exact root " + u_exact.str()};
        }
    }
    if (!residue_root_seen)
        return RootSearch{RootSearchStatus::Irreducible, std::nullopt,
                          "no root modulo t^" + std::to_string(precision)};
    return RootSearch{RootSearchStatus::Unknown, std::nullopt,
                      "residue roots modulo t^" + std::to_string(precision) +
                          " exist but none lifts exactly"};
}

}  // namespace qdeform
