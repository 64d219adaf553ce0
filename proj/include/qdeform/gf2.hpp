#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>

namespace qdeform {

// A field of characteristic 2: every element is its own additive inverse,
// so subtraction never appears in any interface.
template <class F>
concept char2_field = requires(const F a, const F b) {
    { F::zero() } -> std::same_as<F>;
    { F::one() } -> std::same_as<F>;
    { a + b } -> std::same_as<F>;
    { a * b } -> std::same_as<F>;
    { a.inv() } -> std::same_as<F>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
};

// The prime field GF(2).
class Gf2 {
  public:
    constexpr Gf2() : v_(0) {}
    constexpr explicit Gf2(bool v) : v_(v) {}

    static constexpr Gf2 zero() { return Gf2(false); }
    static constexpr Gf2 one() { return Gf2(true); }

    constexpr bool is_zero() const { return !v_; }
    constexpr bool value() const { return v_; }

    constexpr Gf2 operator+(Gf2 o) const { return Gf2(v_ != o.v_); }
    constexpr Gf2 operator*(Gf2 o) const { return Gf2(v_ && o.v_); }
    Gf2 inv() const {
        if (!v_) throw std::domain_error("GF(2): inverse of zero");
        return *this;
    }

    constexpr bool operator==(const Gf2&) const = default;

  private:
    bool v_;
};

static_assert(char2_field<Gf2>);

}  // namespace qdeform
