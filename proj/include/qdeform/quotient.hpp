#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>

#include "qdeform/params.hpp"
#include "qdeform/poly.hpp"

namespace qdeform {

class QuotientRing;

// Element of F[x]/<p_t(x)>, F = GF(2)(t): four coordinates on the basis
// {1, x, x^2, x^3}. Elements carry their ring so mixed-context arithmetic
// is rejected.
class QuotientElement {
  public:
    QuotientElement(std::shared_ptr<const QuotientRing> ring, std::array<Rational, 4> coords)
        : ring_(std::move(ring)), c_(std::move(coords)) {}

    const std::array<Rational, 4>& coords() const { return c_; }
    const Rational& coord(std::size_t i) const { return c_.at(i); }
    const std::shared_ptr<const QuotientRing>& ring() const { return ring_; }

    bool is_zero() const;

    QuotientElement operator+(const QuotientElement& o) const;
    QuotientElement operator*(const QuotientElement& o) const;
    QuotientElement scaled(const Rational& s) const;

    bool operator==(const QuotientElement& o) const;

    std::string str() const;

  private:
    std::shared_ptr<const QuotientRing> ring_;
    std::array<Rational, 4> c_;
};

// The quotient F[x]/<p_t(x)> for a monic modulus of degree 4. Products are
// reduced through a precomputed table of x^4, x^5, x^6 in the basis.
class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
  public:
    static std::shared_ptr<const QuotientRing> make(XPoly modulus);

    const XPoly& modulus() const { return modulus_; }

    QuotientElement zero() const;
    QuotientElement one() const;
    QuotientElement x() const;
    QuotientElement element(std::array<Rational, 4> coords) const;
    // Remainder of p modulo the modulus, expressed in the basis.
    QuotientElement reduce(const XPoly& p) const;
    XPoly lift(const QuotientElement& v) const;

    QuotientElement mul(const QuotientElement& a, const QuotientElement& b) const;

    bool same_ring(const QuotientRing& o) const;

  private:
    explicit QuotientRing(XPoly modulus);
    XPoly modulus_;
    std::array<std::array<Rational, 4>, 3> xpow_;  // x^4, x^5, x^6 reduced
};

// p_t(x) = pi(x) (x+c) (x+d) with pi(x) = x^2 + a x + b.
XPoly build_modulus(const DeformationParams& p);
XPoly build_pi(const DeformationParams& p);

struct IdempotentTriple {
    QuotientElement e1, e2, e3;
};

// e1 = (x+w)(x+c)(x+d)/a, e2 = c(x+d)pi(x)/(a(c+d)), e3 = d(x+c)pi(x)/(a(c+d)).
// Requires a != 0 and c != d.
IdempotentTriple compute_idempotents(const std::shared_ptr<const QuotientRing>& ring,
                                     const DeformationParams& p);

struct IdempotentChecks {
    std::array<bool, 3> idempotent;   // e_i^2 = e_i
    bool orthogonal;                  // e_i e_j = 0 for i != j
    bool complete;                    // e1+e2+e3 = 1
    std::array<std::size_t, 3> rank;  // rank of multiplication-by-e_i
    bool ok() const;
};

IdempotentChecks check_idempotents(const std::shared_ptr<const QuotientRing>& ring,
                                   const IdempotentTriple& e);

// gcd(p, p') = 1; the formal derivative kills even-degree terms in
// characteristic 2, so x^4+1 comes out inseparable.
bool is_separable(const XPoly& p);

enum class RootSearchStatus { Irreducible, ReducibleWithRoot, Unknown };

struct RootSearch {
    RootSearchStatus status;
    std::optional<Rational> root;  // exact verified root when reducible
    std::string detail;
};

// Semidecision for pi = x^2 + a x + b with val(a) >= 1 and b a 1-unit:
// any root in k((t)) must be a 1-unit, so searching residues mod t^N with
// constant term 1 is exhaustive. No residue root => Irreducible. A residue
// root that lifts to an exact rational root => ReducibleWithRoot; a residue
// root that does not lift => Unknown. N is capped at 24 (2^(N-1) candidates).
RootSearch irreducibility_check(const XPoly& pi, unsigned precision);

}  // namespace qdeform
