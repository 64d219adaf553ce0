#include "qdeform/rational.hpp"

#include <cctype>

namespace qdeform {

Rational::Rational(Gf2Poly num, Gf2Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    reduce_();
}

void Rational::reduce_() {
    if (num_.is_zero()) {
        den_ = Gf2Poly::one();
        return;
    }
    Gf2Poly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    if (is_zero() || o.is_zero()) return zero();
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::inv() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(den_, num_);
}

Valuation Rational::valuation() const {
    if (is_zero()) return Valuation::infinity();
    return Valuation::finite(num_.valuation() - den_.valuation());
}

Gf2 Rational::at_zero() const {
    Valuation v = valuation();
    if (v < 0) throw std::domain_error("Rational: evaluation at t=0 needs valuation >= 0");
    if (v > 0) return Gf2::zero();
    return Gf2::one();  // reduced fraction of valuation 0 over GF(2) has num(0)=den(0)=1
}

Series Rational::expand(unsigned precision) const {
    if (valuation() < 0)
        throw std::domain_error("Rational: series expansion needs valuation >= 0");
    Series n(num_, precision);
    Series d(den_, precision);
    return n * d.inv();
}

bool Rational::is_one_unit() const {
    return valuation() == 0 && at_zero() == Gf2::one();
}

std::string Rational::str() const {
    if (den_.is_one()) return num_.str();
    auto wrap = [](const Gf2Poly& p) {
        std::string s = p.str();
        return s.find('+') == std::string::npos ? s : "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
}

Rational Rational::parse(std::string_view text) {
    // split on a single top-level '/'
    std::size_t depth = 0, slash = std::string_view::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(')
            ++depth;
        else if (c == ')') {
            if (depth == 0) throw std::invalid_argument("Rational: unbalanced ')'");
            --depth;
        } else if (c == '/' && depth == 0) {
            if (slash != std::string_view::npos)
                throw std::invalid_argument("Rational: more than one '/'");
            slash = i;
        }
    }
    if (depth != 0) throw std::invalid_argument("Rational: unbalanced '('");

    auto strip = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        // peel parentheses enclosing the whole operand
        while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
            int d = 0;
            bool whole = true;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] == '(') ++d;
                if (s[i] == ')') {
                    --d;
                    if (d == 0 && i + 1 != s.size()) whole = false;
                }
            }
            if (!whole) break;
            s.remove_prefix(1);
            s.remove_suffix(1);
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        }
        return s;
    };

    if (slash == std::string_view::npos) return Rational(Gf2Poly::parse(strip(text)));
    Gf2Poly num = Gf2Poly::parse(strip(text.substr(0, slash)));
    Gf2Poly den = Gf2Poly::parse(strip(text.substr(slash + 1)));
    if (den.is_zero()) throw std::invalid_argument("Rational: division by zero polynomial");
    return Rational(num, den);
}

}  // namespace qdeform
