#pragma once

#include <string>

#include "qdeform/gf2poly.hpp"

namespace qdeform {

// Truncated power series over GF(2): a polynomial known modulo t^N.
// All arithmetic stays closed modulo t^precision; combining two series
// uses the smaller precision.
class Series {
  public:
    Series(Gf2Poly coeffs, unsigned precision);

    static Series zero(unsigned precision) { return Series({}, precision); }
    static Series one(unsigned precision);

    unsigned precision() const { return prec_; }
    bool coeff(unsigned exp) const;
    bool is_zero() const { return coeffs_.is_zero(); }

    Series operator+(const Series& o) const;
    Series operator*(const Series& o) const;
    // Multiplicative inverse; requires constant term 1.
    Series inv() const;

    Series truncated(unsigned precision) const;

    // Equal iff same precision and same coefficients.
    bool operator==(const Series&) const = default;

    const Gf2Poly& poly() const { return coeffs_; }
    std::string str() const;

  private:
    Gf2Poly coeffs_;  // degree < prec_
    unsigned prec_;
};

}  // namespace qdeform
