#pragma once

#include <random>

#include "qdeform/rational.hpp"

namespace qdeform::testutil {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed5eed);
    return gen;
}

inline Gf2Poly random_poly(unsigned max_degree) {
    std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << (max_degree + 1)) - 1);
    return Gf2Poly::from_bits(bits(rng()));
}

inline Gf2Poly random_nonzero_poly(unsigned max_degree) {
    for (;;) {
        Gf2Poly p = random_poly(max_degree);
        if (!p.is_zero()) return p;
    }
}

inline Rational random_rational(unsigned max_degree = 5) {
    return Rational(random_poly(max_degree), random_nonzero_poly(max_degree));
}

inline Rational random_nonzero_rational(unsigned max_degree = 5) {
    for (;;) {
        Rational r = random_rational(max_degree);
        if (!r.is_zero()) return r;
    }
}

}  // namespace qdeform::testutil
