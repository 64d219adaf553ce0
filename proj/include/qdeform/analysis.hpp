#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qdeform/deformation.hpp"
#include "qdeform/linalg.hpp"

namespace qdeform {

// ---------------------------------------------------------------------------
// Block decomposition along the central idempotents.

struct Block {
    std::size_t idempotent_index;        // 0, 1, 2
    AlgebraElement unit;                 // e_i embedded in the 8-dim algebra
    std::vector<AlgebraElement> basis;   // echelon basis of the ideal A e_i
    std::size_t dim() const { return basis.size(); }
};

struct BlockDecomposition {
    std::vector<Block> blocks;  // in idempotent order e1, e2, e3
    bool cross_orthogonal;      // products across distinct blocks vanish
    std::array<std::size_t, 3> dims() const;
    bool ok() const;
};

// Requires each e_i to commute with all 8 basis elements of the full
// algebra; throws std::domain_error when centrality fails.
BlockDecomposition decompose_blocks(const std::shared_ptr<const DeformationContext>& ctx);

struct CenterReport {
    std::size_t dim;
    std::vector<AlgebraElement> basis;
};

// Commutant of the block inside itself.
CenterReport center_of_block(const Block& block);

// ---------------------------------------------------------------------------
// Separability certificate: e in A (x) A^op with (a(x)1)e = (1(x)a)e for all
// basis a and mu(e) = 1. Solved as one exact linear system over GF(2)(t).

// A finite-dimensional algebra given by its structure constants:
// product[i*dim+j] is the coordinate vector of b_i b_j.
struct AlgebraTable {
    std::size_t dim;
    std::vector<std::vector<Rational>> product;
    std::size_t unit_index = 0;
};

AlgebraTable to_algebra_table(const StructureConstants& sc);
// The undeformed group algebra of Q8 over GF(2) (inside GF(2)(t)).
AlgebraTable group_algebra_table(const GroupTable& table);

struct SeparabilityOutcome {
    bool feasible;
    std::vector<Rational> tensor;  // lambda_{ij} at index i*dim+j when feasible
    std::size_t rank;              // rank of the constraint system
};

SeparabilityOutcome separability_certificate(const AlgebraTable& alg);

// Substitutes the tensor back into both defining conditions; independent of
// the solver.
bool verify_separability(const AlgebraTable& alg, const std::vector<Rational>& tensor,
                         ExecPolicy policy = ExecPolicy::Parallel);

// ---------------------------------------------------------------------------
// The e1 block as a crossed product of C2 over K = F[s]/<pi(s)>.

struct CrossedProductData {
    AlgebraElement u, v;            // x e1 and y e1
    bool quadratic_u;               // u^2 + a u + b e1 = 0
    bool v_squared;                 // v^2 = b e1
    bool twist_relation;            // v u = (u + a e1) v
    bool cocycle_values;            // f(1,.) act as the unit, f(tau,tau) = b e1
    AlgebraElement f_tau_tau;       // = b e1
    bool ok() const { return quadratic_u && v_squared && twist_relation && cocycle_values; }
    std::string failed() const;
};

CrossedProductData crossed_product_relations(const std::shared_ptr<const DeformationContext>& ctx);

// The quadratic field extension K = F[s]/<s^2 + a s + b>.
class SplittingField {
  public:
    struct Elem {
        Rational c0, c1;  // c0 + c1 s
        bool operator==(const Elem&) const = default;
    };

    SplittingField(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    Elem zero() const { return {Rational::zero(), Rational::zero()}; }
    Elem one() const { return {Rational::one(), Rational::zero()}; }
    Elem s() const { return {Rational::zero(), Rational::one()}; }
    Elem from(const Rational& r) const { return {r, Rational::zero()}; }

    Elem add(const Elem& x, const Elem& y) const { return {x.c0 + y.c0, x.c1 + y.c1}; }
    Elem mul(const Elem& x, const Elem& y) const;
    // Throws on a zero divisor (which would mean pi is reducible).
    Elem inv(const Elem& x) const;
    bool is_zero(const Elem& x) const { return x.c0.is_zero() && x.c1.is_zero(); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

  private:
    Rational a_, b_;
};

using KElem = SplittingField::Elem;
using Mat2K = std::array<KElem, 4>;  // row-major 2x2

struct SplitReport {
    bool basis_ok;            // {e1, u, v, vu} spans the block over F
    bool identity_ok;         // e1 maps to the identity matrix
    bool multiplicative_ok;   // map is multiplicative on all 16 basis pairs
    bool k_independent;       // the four images are K-linearly independent
    std::size_t f_rank;       // F-rank of the image span (injectivity), = 4
    bool u_satisfies_pi;      // M(u)^2 + a M(u) + b I = 0
    std::array<Mat2K, 4> images;
    bool ok() const {
        return basis_ok && identity_ok && multiplicative_ok && k_independent && f_rank == 4 &&
               u_satisfies_pi;
    }
};

// Realizes the e1 block as a rank-2 right K-space on {e1, v} (u acting as
// the class of s) and verifies that left multiplication embeds the block
// multiplicatively onto a K-spanning set of 2x2 matrices over K.
SplitReport split_block_over_k(const std::shared_ptr<const DeformationContext>& ctx);

// ---------------------------------------------------------------------------
// The commutative blocks.

struct EtaleBlockReport {
    bool independent;     // {e_i, y e_i} independent over F
    bool min_poly_holds;  // (y e_i)^2 + z a (y e_i) + const e_i = 0
    XPoly min_poly;       // Y^2 + z a Y + const
    bool separable;       // za != 0, cross-checked by gcd with the derivative
    bool ok() const { return independent && min_poly_holds && separable; }
};

struct EtaleReport {
    EtaleBlockReport block2, block3;
    bool ok() const { return block2.ok() && block3.ok(); }
};

// Minimal polynomials of y on the e2 and e3 blocks: y^2 + zay + c(c+a)
// and y^2 + zay + d(d+a), both separable since za != 0.
EtaleReport etale_check(const std::shared_ptr<const DeformationContext>& ctx);

// ---------------------------------------------------------------------------
// The dimension vector over the algebraic closure.

struct DimensionVector {
    std::vector<int> dims;          // sorted ascending
    bool matches_complex_q8;
    int sum_of_squares;
};

std::vector<int> complex_q8_dimension_vector();  // {1,1,1,1,2}

// Assembled symbolically: each separable quadratic block contributes two
// 1-dimensional components over the closure, the split block one
// 2-dimensional component. Throws std::logic_error when a prerequisite
// report failed.
DimensionVector dimension_vector(const SplitReport& split, const EtaleReport& etale,
                                 const SeparabilityOutcome& certificate);

}  // namespace qdeform
