#include "qdeform/gf2poly.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

namespace qdeform {

void Gf2Poly::trim_() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly Gf2Poly::monomial(unsigned exp) {
    Gf2Poly p;
    p.words_.resize(exp / 64 + 1, 0);
    p.words_[exp / 64] = std::uint64_t{1} << (exp % 64);
    return p;
}

Gf2Poly Gf2Poly::with_terms(std::initializer_list<unsigned> exps) {
    Gf2Poly p;
    for (unsigned e : exps) p += monomial(e);
    return p;
}

Gf2Poly Gf2Poly::from_bits(std::uint64_t mask) {
    Gf2Poly p;
    if (mask != 0) p.words_.push_back(mask);
    return p;
}

int Gf2Poly::degree() const {
    if (words_.empty()) return -1;
    return static_cast<int>(64 * (words_.size() - 1)) + 63 -
           std::countl_zero(words_.back());
}

int Gf2Poly::valuation() const {
    if (words_.empty()) throw std::domain_error("Gf2Poly: valuation of zero");
    for (std::size_t i = 0;; ++i)
        if (words_[i] != 0)
            return static_cast<int>(64 * i) + std::countr_zero(words_[i]);
}

bool Gf2Poly::coeff(unsigned exp) const {
    std::size_t w = exp / 64;
    if (w >= words_.size()) return false;
    return (words_[w] >> (exp % 64)) & 1;
}

Gf2Poly Gf2Poly::operator+(const Gf2Poly& o) const {
    Gf2Poly r = *this;
    r += o;
    return r;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
    trim_();
    return *this;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    Gf2Poly r;
    r.words_.assign(words_.size() + o.words_.size(), 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w != 0) {
            int b = std::countr_zero(w);
            w &= w - 1;
            // xor o shifted by 64*i + b into r
            unsigned shift = b;
            for (std::size_t j = 0; j < o.words_.size(); ++j) {
                r.words_[i + j] ^= o.words_[j] << shift;
                if (shift != 0)
                    r.words_[i + j + 1] ^= o.words_[j] >> (64 - shift);
            }
        }
    }
    r.trim_();
    return r;
}

Gf2Poly Gf2Poly::shifted_up(unsigned k) const {
    if (is_zero() || k == 0) return *this;
    Gf2Poly r;
    unsigned wshift = k / 64, bshift = k % 64;
    r.words_.assign(words_.size() + wshift + 1, 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        r.words_[i + wshift] ^= words_[i] << bshift;
        if (bshift != 0) r.words_[i + wshift + 1] ^= words_[i] >> (64 - bshift);
    }
    r.trim_();
    return r;
}

std::pair<Gf2Poly, Gf2Poly> Gf2Poly::divmod(const Gf2Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("Gf2Poly: division by zero");
    Gf2Poly q, r = *this;
    int dd = divisor.degree();
    while (!r.is_zero() && r.degree() >= dd) {
        unsigned k = static_cast<unsigned>(r.degree() - dd);
        q += monomial(k);
        r += divisor.shifted_up(k);
    }
    return {q, r};
}

Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
    while (!b.is_zero()) {
        Gf2Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::string Gf2Poly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int e = 0; e <= degree(); ++e) {
        if (!coeff(static_cast<unsigned>(e))) continue;
        if (!s.empty()) s += "+";
        if (e == 0)
            s += "1";
        else if (e == 1)
            s += "t";
        else
            s += "t^" + std::to_string(e);
    }
    return s;
}

Gf2Poly Gf2Poly::parse(std::string_view text) {
    Gf2Poly p;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    bool expect_term = true;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        char c = text[i];
        if (!expect_term) {
            if (c != '+')
                throw std::invalid_argument("Gf2Poly: expected '+' near \"" +
                                            std::string(text.substr(i)) + "\"");
            ++i;
            expect_term = true;
            continue;
        }
        if (c == '0') {
            ++i;
        } else if (c == '1') {
            p += one();
            ++i;
        } else if (c == 't') {
            ++i;
            unsigned exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw std::invalid_argument("Gf2Poly: exponent expected after '^'");
                exp = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    exp = exp * 10 + static_cast<unsigned>(text[i] - '0');
                    if (exp > 1u << 20)
                        throw std::invalid_argument("Gf2Poly: exponent too large");
                    ++i;
                }
            }
            p += monomial(exp);
        } else {
            throw std::invalid_argument("Gf2Poly: unexpected character '" +
                                        std::string(1, c) + "'");
        }
        expect_term = false;
    }
    if (expect_term)
        throw std::invalid_argument("Gf2Poly: empty or dangling term in \"" +
                                    std::string(text) + "\"");
    return p;
}

}  // namespace qdeform
