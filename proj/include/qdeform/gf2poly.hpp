#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qdeform/gf2.hpp"

namespace qdeform {

// Polynomial in t over GF(2), bit-packed: bit i of word i/64 is the
// coefficient of t^i. Always canonical: no trailing zero words, so two
// polynomials are equal iff their word vectors are equal.
class Gf2Poly {
  public:
    Gf2Poly() = default;

    static Gf2Poly zero() { return {}; }
    static Gf2Poly one() { return monomial(0); }
    static Gf2Poly t() { return monomial(1); }
    static Gf2Poly monomial(unsigned exp);
    // Polynomial with the given exponent set, e.g. {0,2,3} -> 1+t^2+t^3.
    static Gf2Poly with_terms(std::initializer_list<unsigned> exps);
    // Low `nbits` coefficients taken from the bits of `mask`.
    static Gf2Poly from_bits(std::uint64_t mask);

    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return words_.size() == 1 && words_[0] == 1; }

    // Degree of the zero polynomial is -1.
    int degree() const;
    // Index of the lowest nonzero coefficient; requires a nonzero polynomial.
    int valuation() const;
    bool coeff(unsigned exp) const;
    Gf2 at_zero() const { return Gf2(coeff(0)); }

    Gf2Poly operator+(const Gf2Poly& o) const;
    Gf2Poly& operator+=(const Gf2Poly& o);
    Gf2Poly operator*(const Gf2Poly& o) const;
    Gf2Poly& operator*=(const Gf2Poly& o) { return *this = *this * o; }

    // Multiply by t^k.
    Gf2Poly shifted_up(unsigned k) const;

    // Quotient and remainder; divisor must be nonzero.
    std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& divisor) const;
    Gf2Poly operator/(const Gf2Poly& o) const { return divmod(o).first; }
    Gf2Poly operator%(const Gf2Poly& o) const { return divmod(o).second; }

    bool operator==(const Gf2Poly&) const = default;

    // "1+t^2+t^3" with ascending exponents; "0" for zero.
    std::string str() const;
    // Accepts sums of monomials 0 | 1 | t | t^k, whitespace-insensitive.
    static Gf2Poly parse(std::string_view text);

  private:
    void trim_();
    std::vector<std::uint64_t> words_;
};

Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

}  // namespace qdeform
