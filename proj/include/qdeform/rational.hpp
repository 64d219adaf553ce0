#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qdeform/gf2.hpp"
#include "qdeform/gf2poly.hpp"
#include "qdeform/series.hpp"

namespace qdeform {

// t-adic valuation with a distinguished +infinity (the valuation of 0).
class Valuation {
  public:
    static Valuation infinity() { return Valuation(true, 0); }
    static Valuation finite(int v) { return Valuation(false, v); }

    bool is_infinite() const { return inf_; }
    int value() const {
        if (inf_) throw std::domain_error("Valuation: infinite has no finite value");
        return v_;
    }

    Valuation operator+(const Valuation& o) const {
        if (inf_ || o.inf_) return infinity();
        return finite(v_ + o.v_);
    }

    bool operator==(const Valuation&) const = default;
    std::strong_ordering operator<=>(const Valuation& o) const {
        if (inf_ && o.inf_) return std::strong_ordering::equal;
        if (inf_) return std::strong_ordering::greater;
        if (o.inf_) return std::strong_ordering::less;
        return v_ <=> o.v_;
    }
    bool operator==(int x) const { return !inf_ && v_ == x; }
    std::partial_ordering operator<=>(int x) const {
        if (inf_) return std::partial_ordering::greater;
        return v_ <=> x;
    }

    std::string str() const { return inf_ ? "+inf" : std::to_string(v_); }

  private:
    Valuation(bool inf, int v) : v_(v), inf_(inf) {}
    int v_;
    bool inf_;
};

// Element of GF(2)(t): a reduced fraction of polynomials in t. Over GF(2)
// the reduced form is unique (the only unit is 1), so equality of values
// is equality of representations.
class Rational {
  public:
    Rational() : num_(), den_(Gf2Poly::one()) {}
    Rational(const Gf2Poly& num) : num_(num), den_(Gf2Poly::one()) {}
    Rational(Gf2Poly num, Gf2Poly den);

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(Gf2Poly::one()); }
    static Rational t() { return Rational(Gf2Poly::t()); }
    // Grammar: poly, or poly "/" poly, each optionally parenthesized;
    // poly is a '+'-separated list of 0 | 1 | t | t^k.
    static Rational parse(std::string_view text);

    const Gf2Poly& num() const { return num_; }
    const Gf2Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    Rational operator+(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational operator*(const Rational& o) const;
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational inv() const;
    Rational operator/(const Rational& o) const { return *this * o.inv(); }

    bool operator==(const Rational&) const = default;

    Valuation valuation() const;
    // Constant term of the power-series expansion; requires valuation >= 0.
    Gf2 at_zero() const;
    // Power-series expansion modulo t^precision; requires valuation >= 0.
    Series expand(unsigned precision) const;
    // True iff congruent to 1 modulo t.
    bool is_one_unit() const;

    std::string str() const;

  private:
    void reduce_();
    Gf2Poly num_, den_;
};

static_assert(char2_field<Rational>);

}  // namespace qdeform
