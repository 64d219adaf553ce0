#include "qdeform/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdeform {

namespace {
Gf2Poly truncate_poly(const Gf2Poly& p, unsigned prec) {
    // keep exponents < prec
    Gf2Poly r;
    for (int e = 0; e <= p.degree() && e < static_cast<int>(prec); ++e)
        if (p.coeff(static_cast<unsigned>(e))) r += Gf2Poly::monomial(static_cast<unsigned>(e));
    return r;
}
}  // namespace

Series::Series(Gf2Poly coeffs, unsigned precision) : prec_(precision) {
    if (precision == 0) throw std::invalid_argument("Series: precision must be positive");
    coeffs_ = truncate_poly(coeffs, precision);
}

Series Series::one(unsigned precision) { return Series(Gf2Poly::one(), precision); }

bool Series::coeff(unsigned exp) const {
    if (exp >= prec_) throw std::out_of_range("Series: coefficient beyond precision");
    return coeffs_.coeff(exp);
}

Series Series::operator+(const Series& o) const {
    unsigned p = std::min(prec_, o.prec_);
    return Series(coeffs_ + o.coeffs_, p);
}

Series Series::operator*(const Series& o) const {
    unsigned p = std::min(prec_, o.prec_);
    return Series(coeffs_ * o.coeffs_, p);
}

Series Series::inv() const {
    if (!coeffs_.coeff(0))
        throw std::domain_error("Series: inverse requires constant term 1");
    // inv[n] = sum_{j=1..n} a[j] * inv[n-j]  (char 2)
    Gf2Poly r = Gf2Poly::one();
    for (unsigned n = 1; n < prec_; ++n) {
        bool bit = false;
        for (unsigned j = 1; j <= n; ++j)
            if (coeffs_.coeff(j) && r.coeff(n - j)) bit = !bit;
        if (bit) r += Gf2Poly::monomial(n);
    }
    return Series(r, prec_);
}

Series Series::truncated(unsigned precision) const {
    if (precision > prec_)
        throw std::invalid_argument("Series: cannot raise precision by truncation");
    return Series(coeffs_, precision);
}

std::string Series::str() const {
    return coeffs_.str() + " + O(t^" + std::to_string(prec_) + ")";
}

}  // namespace qdeform
