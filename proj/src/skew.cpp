#include "qdeform/skew.hpp"

#include <stdexcept>

namespace qdeform {

namespace {

std::vector<QuotientElement> basis_images(const std::shared_ptr<const QuotientRing>& ring,
                                          const QuotientElement& g) {
    std::vector<QuotientElement> img;
    img.push_back(ring->one());
    for (std::size_t i = 1; i < 4; ++i) img.push_back(img.back() * g);
    return img;
}

QuotientElement eval_images(const std::vector<QuotientElement>& img, const QuotientElement& v) {
    QuotientElement acc = img[0].ring()->zero();
    for (std::size_t i = 0; i < 4; ++i) acc = acc + img[i].scaled(v.coords()[i]);
    return acc;
}

}  // namespace

std::shared_ptr<const Automorphism> Automorphism::identity(
    std::shared_ptr<const QuotientRing> ring) {
    return from_generator_image(ring->x());
}

std::shared_ptr<const Automorphism> Automorphism::from_generator_image(QuotientElement image) {
    auto a = std::shared_ptr<Automorphism>(new Automorphism());
    a->ring_ = image.ring();
    a->images_ = basis_images(a->ring_, image);
    for (const QuotientElement& e : a->images_)
        a->images_sq_.push_back(eval_images(a->images_, e));
    a->involution_ = true;
    QuotientElement xp = a->ring_->one();
    for (std::size_t i = 0; i < 4; ++i) {
        if (!(a->images_sq_[i] == xp)) a->involution_ = false;
        xp = xp * a->ring_->x();
    }
    return a;
}

QuotientElement Automorphism::apply(const QuotientElement& v) const {
    if (!ring_->same_ring(*v.ring()))
        throw std::logic_error("Automorphism: element from another quotient ring");
    return eval_images(images_, v);
}

QuotientElement Automorphism::apply_power(const QuotientElement& v, std::size_t k) const {
    if (involution_) k %= 2;
    QuotientElement r = v;
    for (std::size_t i = 0; i < k; ++i) r = apply(r);
    return r;
}

bool Automorphism::same_twist(const Automorphism& o) const {
    return this == &o ||
           (ring_->same_ring(*o.ring_) && generator_image() == o.generator_image());
}

std::shared_ptr<const Automorphism> build_eta(const std::shared_ptr<const QuotientRing>& ring,
                                              const DeformationParams& p) {
    XPoly image = XPoly::x() * build_pi(p) + XPoly::x() + XPoly(p.a);
    return Automorphism::from_generator_image(ring->reduce(image));
}

EtaMembershipReport eta_well_defined(const Automorphism& eta, const DeformationParams& p) {
    EtaMembershipReport rep{};
    const std::shared_ptr<const QuotientRing>& ring = eta.ring();

    // p_t evaluated at eta(x) inside the quotient
    const XPoly& pt = ring->modulus();
    QuotientElement acc = ring->zero();
    for (std::size_t i = static_cast<std::size_t>(pt.degree()) + 1; i-- > 0;)
        acc = acc * eta.generator_image() + ring->one().scaled(pt.coeff(i));
    rep.modulus_maps_to_zero = acc.is_zero();

    // factor-by-factor membership in F[x], on the degree < 4 lift of eta(x)
    XPoly eta_poly = ring->lift(eta.generator_image());
    XPoly pi = build_pi(p);
    rep.pi_factor = (pi.composed(eta_poly) % pi).is_zero();
    XPoly xc({p.c, Rational::one()});
    XPoly xd({p.d, Rational::one()});
    rep.c_factor = ((eta_poly + XPoly(p.c)) % xc).is_zero();
    rep.d_factor = ((eta_poly + XPoly(p.d)) % xd).is_zero();
    return rep;
}

SkewPoly::SkewPoly(std::shared_ptr<const Automorphism> twist, std::vector<QuotientElement> coeffs)
    : twist_(std::move(twist)), c_(std::move(coeffs)) {
    for (const QuotientElement& e : c_)
        if (!e.ring()->same_ring(*twist_->ring()))
            throw std::logic_error("SkewPoly: coefficient from another quotient ring");
    trim_();
}

void SkewPoly::trim_() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

SkewPoly SkewPoly::zero(std::shared_ptr<const Automorphism> twist) {
    return SkewPoly(std::move(twist), {});
}

SkewPoly SkewPoly::constant(std::shared_ptr<const Automorphism> twist, QuotientElement c) {
    return SkewPoly(std::move(twist), {std::move(c)});
}

SkewPoly SkewPoly::y(std::shared_ptr<const Automorphism> twist) {
    auto ring = twist->ring();
    return SkewPoly(std::move(twist), {ring->zero(), ring->one()});
}

QuotientElement SkewPoly::coeff(std::size_t i) const {
    if (i < c_.size()) return c_[i];
    return twist_->ring()->zero();
}

bool SkewPoly::is_monic() const { return !c_.empty() && c_.back() == twist_->ring()->one(); }

namespace {
void require_same_twist(const SkewPoly& a, const SkewPoly& b) {
    if (!a.twist()->same_twist(*b.twist()))
        throw std::logic_error("SkewPoly: mixed twist contexts");
}
}  // namespace

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
    require_same_twist(*this, o);
    std::vector<QuotientElement> r;
    std::size_t n = std::max(c_.size(), o.c_.size());
    for (std::size_t i = 0; i < n; ++i) r.push_back(coeff(i) + o.coeff(i));
    return SkewPoly(twist_, std::move(r));
}

SkewPoly SkewPoly::operator*(const SkewPoly& o) const {
    require_same_twist(*this, o);
    if (is_zero() || o.is_zero()) return zero(twist_);
    std::vector<QuotientElement> r(c_.size() + o.c_.size() - 1, twist_->ring()->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r[i + j] = r[i + j] + c_[i] * twist_->apply_power(o.c_[j], i);
        }
    }
    return SkewPoly(twist_, std::move(r));
}

SkewPoly SkewPoly::scaled(const QuotientElement& left) const {
    std::vector<QuotientElement> r;
    for (const QuotientElement& e : c_) r.push_back(left * e);
    return SkewPoly(twist_, std::move(r));
}

std::pair<SkewPoly, SkewPoly> SkewPoly::divmod(const SkewPoly& divisor) const {
    require_same_twist(*this, divisor);
    if (!divisor.is_monic()) throw std::domain_error("SkewPoly: division needs a monic divisor");
    SkewPoly q = zero(twist_), r = *this;
    int dd = divisor.degree();
    while (!r.is_zero() && r.degree() >= dd) {
        std::size_t k = static_cast<std::size_t>(r.degree() - dd);
        std::vector<QuotientElement> term(k + 1, twist_->ring()->zero());
        term[k] = r.c_.back();
        SkewPoly t(twist_, std::move(term));
        q = q + t;
        r = r + t * divisor;  // char 2: leading terms cancel
    }
    return {q, r};
}

bool SkewPoly::operator==(const SkewPoly& o) const {
    if (!twist_->same_twist(*o.twist_)) return false;
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

std::string SkewPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c_[i].str() + ")";
        if (i == 1) s += "*y";
        if (i > 1) s += "*y^" + std::to_string(i);
    }
    return s;
}

bool is_central(const SkewPoly& f) {
    const auto& twist = f.twist();
    SkewPoly x_const = SkewPoly::constant(twist, twist->ring()->x());
    SkewPoly y = SkewPoly::y(twist);
    return (f * x_const) == (x_const * f) && (f * y) == (y * f);
}

SkewPoly build_qt(const std::shared_ptr<const Automorphism>& eta, const DeformationParams& p) {
    if (p.z.is_zero() || p.z.valuation() < 1)
        throw std::domain_error("build_qt: z must be a nonzero non-unit");
    const auto& ring = eta->ring();
    QuotientElement c0 = ring->reduce(XPoly::x() * XPoly::x() + XPoly::x().scaled(p.a));
    QuotientElement c1 = ring->reduce((XPoly::x() * build_pi(p)).scaled(p.z));
    return SkewPoly(eta, {c0, c1, ring->one()});
}

}  // namespace qdeform
