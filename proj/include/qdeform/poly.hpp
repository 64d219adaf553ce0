#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdeform/gf2.hpp"
#include "qdeform/rational.hpp"

namespace qdeform {

// Dense polynomial over a field of characteristic 2, canonical form with
// no trailing zero coefficients.
template <char2_field F>
class Poly {
  public:
    Poly() = default;
    explicit Poly(F constant) {
        c_.push_back(std::move(constant));
        trim_();
    }
    explicit Poly(std::vector<F> ascending_coeffs) : c_(std::move(ascending_coeffs)) { trim_(); }

    static Poly zero() { return {}; }
    static Poly one() { return Poly(F::one()); }
    static Poly x() { return monomial(F::one(), 1); }
    static Poly monomial(F coeff, std::size_t deg) {
        Poly p;
        if (!coeff.is_zero()) {
            p.c_.assign(deg + 1, F::zero());
            p.c_[deg] = std::move(coeff);
        }
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == F::one(); }
    const F& coeff(std::size_t i) const {
        static const F kZero = F::zero();
        return i < c_.size() ? c_[i] : kZero;
    }
    const F& leading() const {
        if (c_.empty()) throw std::domain_error("Poly: leading coefficient of zero");
        return c_.back();
    }

    Poly operator+(const Poly& o) const {
        std::vector<F> r(std::max(c_.size(), o.c_.size()), F::zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return Poly(std::move(r));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<F> r(c_.size() + o.c_.size() - 1, F::zero());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return Poly(std::move(r));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const F& s) const {
        std::vector<F> r = c_;
        for (F& e : r) e = e * s;
        return Poly(std::move(r));
    }

    std::pair<Poly, Poly> divmod(const Poly& divisor) const {
        if (divisor.is_zero()) throw std::domain_error("Poly: division by zero");
        Poly r = *this;
        if (r.degree() < divisor.degree()) return {Poly::zero(), r};
        F lead_inv = divisor.leading().inv();
        std::vector<F> q(static_cast<std::size_t>(r.degree() - divisor.degree()) + 1, F::zero());
        while (!r.is_zero() && r.degree() >= divisor.degree()) {
            std::size_t k = static_cast<std::size_t>(r.degree() - divisor.degree());
            F factor = r.leading() * lead_inv;
            q[k] = factor;
            r += divisor.scaled(factor) * monomial(F::one(), k);
        }
        return {Poly(std::move(q)), r};
    }
    Poly operator/(const Poly& o) const { return divmod(o).first; }
    Poly operator%(const Poly& o) const { return divmod(o).second; }

    // Formal derivative; in characteristic 2 even-degree terms vanish.
    Poly derivative() const {
        std::vector<F> r;
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.push_back(i % 2 == 1 ? c_[i] : F::zero());
        return Poly(std::move(r));
    }

    F operator()(const F& at) const {
        F acc = F::zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
        return acc;
    }

    // Composition: substitute `inner` for the indeterminate.
    Poly composed(const Poly& inner) const {
        Poly acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + Poly(c_[i]);
        return acc;
    }

    bool operator==(const Poly&) const = default;

    std::string str(const char* var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            std::string cs = c_[i].str();
            bool one = c_[i] == F::one();
            if (i == 0) {
                s += cs;
            } else {
                if (!one) s += (cs.find('/') != std::string::npos || cs.find('+') != std::string::npos) ? "(" + cs + ")*" : cs + "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

  private:
    void trim_() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<F> c_;
};

// Monic gcd; gcd(p, 0) = p made monic.
template <char2_field F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && !a.is_monic()) a = a.scaled(a.leading().inv());
    return a;
}

using XPoly = Poly<Rational>;

}  // namespace qdeform
