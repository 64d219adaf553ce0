#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qdeform/quotient.hpp"

namespace qdeform {

// An F-algebra endomorphism of the quotient ring, stored by its value on
// the generator and applied by evaluating coordinate polynomials at that
// value. Powers of the generator image and the composite eta(eta(.)) are
// cached at construction; if the map squares to the identity, higher
// powers reduce modulo 2.
class Automorphism {
  public:
    static std::shared_ptr<const Automorphism> identity(
        std::shared_ptr<const QuotientRing> ring);
    static std::shared_ptr<const Automorphism> from_generator_image(QuotientElement image);

    const QuotientElement& generator_image() const { return images_[1]; }
    const std::shared_ptr<const QuotientRing>& ring() const { return ring_; }

    QuotientElement apply(const QuotientElement& v) const;
    QuotientElement apply_power(const QuotientElement& v, std::size_t k) const;

    // Established at construction by applying the map twice on the basis.
    bool is_involution() const { return involution_; }

    bool same_twist(const Automorphism& o) const;

  private:
    Automorphism() = default;
    std::shared_ptr<const QuotientRing> ring_;
    std::vector<QuotientElement> images_;      // eta(x^i), i = 0..3
    std::vector<QuotientElement> images_sq_;   // eta(eta(x^i))
    bool involution_ = false;
};

// eta(x) = x*pi(x) + x + a, reduced into the quotient.
std::shared_ptr<const Automorphism> build_eta(const std::shared_ptr<const QuotientRing>& ring,
                                              const DeformationParams& p);

struct EtaMembershipReport {
    bool modulus_maps_to_zero;  // p_t(eta(x)) = 0 in the quotient
    bool pi_factor;             // pi(eta-polynomial) divisible by pi
    bool c_factor;              // eta-polynomial + c divisible by x+c
    bool d_factor;              // eta-polynomial + d divisible by x+d
    bool ok() const { return modulus_maps_to_zero && pi_factor && c_factor && d_factor; }
};

// Well-definedness of eta on the quotient: the image of the modulus lies in
// the ideal it generates, checked in the quotient and factor by factor in F[x].
EtaMembershipReport eta_well_defined(const Automorphism& eta, const DeformationParams& p);

// Left-normal-form skew polynomial: sum c_i y^i with y a = eta(a) y.
class SkewPoly {
  public:
    SkewPoly(std::shared_ptr<const Automorphism> twist, std::vector<QuotientElement> coeffs);

    static SkewPoly zero(std::shared_ptr<const Automorphism> twist);
    static SkewPoly constant(std::shared_ptr<const Automorphism> twist, QuotientElement c);
    static SkewPoly y(std::shared_ptr<const Automorphism> twist);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    QuotientElement coeff(std::size_t i) const;
    const std::shared_ptr<const Automorphism>& twist() const { return twist_; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;

    SkewPoly operator+(const SkewPoly& o) const;
    SkewPoly operator*(const SkewPoly& o) const;
    SkewPoly scaled(const QuotientElement& left) const;  // left-multiply coefficients

    // f = q * divisor + r with deg r < deg divisor; divisor must be monic.
    // Used with central divisors, where left and right division coincide.
    std::pair<SkewPoly, SkewPoly> divmod(const SkewPoly& divisor) const;

    bool operator==(const SkewPoly& o) const;

    std::string str() const;

  private:
    void trim_();
    std::shared_ptr<const Automorphism> twist_;
    std::vector<QuotientElement> c_;
};

// Commutes with both generators x and y; sufficient since they generate.
bool is_central(const SkewPoly& f);

// q_t(y) = y^2 + z x pi(x) y + x^2 + a x. Requires z != 0, val(z) >= 1.
SkewPoly build_qt(const std::shared_ptr<const Automorphism>& eta, const DeformationParams& p);

}  // namespace qdeform
