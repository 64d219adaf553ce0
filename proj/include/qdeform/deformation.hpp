#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qdeform/parallel.hpp"
#include "qdeform/skew.hpp"

namespace qdeform {

class DeformationContext;

// Element of the 8-dimensional deformed algebra on the ordered basis
// (1, x, x^2, x^3, y, x*y, x^2*y, x^3*y), stored as the y^0 and y^1 parts.
class AlgebraElement {
  public:
    AlgebraElement(std::shared_ptr<const DeformationContext> ctx, QuotientElement even,
                   QuotientElement odd)
        : ctx_(std::move(ctx)), even_(std::move(even)), odd_(std::move(odd)) {}

    const QuotientElement& even() const { return even_; }
    const QuotientElement& odd() const { return odd_; }
    const std::shared_ptr<const DeformationContext>& ctx() const { return ctx_; }

    std::array<Rational, 8> coords() const;
    bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement scaled(const Rational& s) const;

    bool operator==(const AlgebraElement& o) const;

    std::string str() const;

  private:
    std::shared_ptr<const DeformationContext> ctx_;
    QuotientElement even_, odd_;
};

// Multiplication table of the quaternion group on the basis slots
// sigma^i tau^j <-> slot i + 4j, generated from the presentation
// sigma^4 = 1, tau sigma = sigma^3 tau, sigma^2 = tau^2.
struct GroupTable {
    std::array<std::array<std::uint8_t, 8>, 8> product;

    static GroupTable quaternion();
    std::uint8_t mul(std::size_t i, std::size_t j) const { return product[i][j]; }
    static std::string slot_name(std::size_t i);
};

// The deformed algebra: quotient ring, idempotents, twist and q_t bundled;
// immutable once built, so checks can run concurrently against it.
class DeformationContext : public std::enable_shared_from_this<DeformationContext> {
  public:
    // Validates the parameters and assembles the whole tower; throws
    // std::invalid_argument with the failing checks when validation fails.
    static std::shared_ptr<const DeformationContext> make(const DeformationParams& p);

    const DeformationParams& params() const { return params_; }
    const std::shared_ptr<const QuotientRing>& ring() const { return ring_; }
    const IdempotentTriple& idempotents() const { return idem_; }
    const std::shared_ptr<const Automorphism>& eta() const { return eta_; }
    const SkewPoly& qt() const { return qt_; }

    AlgebraElement zero() const;
    AlgebraElement one() const;
    AlgebraElement x() const;
    AlgebraElement y() const;
    AlgebraElement basis(std::size_t slot) const;  // 0..7
    AlgebraElement element(QuotientElement even, QuotientElement odd) const;
    AlgebraElement from_coords(const std::array<Rational, 8>& coords) const;
    // Image of a quotient-ring element under the canonical inclusion.
    AlgebraElement embed(const QuotientElement& v) const;

    // Skew product followed by right division by the central monic q_t.
    AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const;

    bool same_context(const DeformationContext& o) const;

  private:
    DeformationContext(DeformationParams p, std::shared_ptr<const QuotientRing> ring,
                       IdempotentTriple idem, std::shared_ptr<const Automorphism> eta,
                       SkewPoly qt)
        : params_(std::move(p)), ring_(std::move(ring)), idem_(std::move(idem)),
          eta_(std::move(eta)), qt_(std::move(qt)) {}

    DeformationParams params_;
    std::shared_ptr<const QuotientRing> ring_;
    IdempotentTriple idem_;
    std::shared_ptr<const Automorphism> eta_;
    SkewPoly qt_;
};

// All 64 products of basis pairs.
class StructureConstants {
  public:
    static StructureConstants compute(const std::shared_ptr<const DeformationContext>& ctx,
                                      ExecPolicy policy = ExecPolicy::Parallel);

    const AlgebraElement& at(std::size_t i, std::size_t j) const { return table_.at(i * 8 + j); }
    const std::shared_ptr<const DeformationContext>& ctx() const { return ctx_; }

    // Flatness: every coordinate must lie in k[[t]] (valuation >= 0).
    struct Violation {
        std::size_t i, j, coord;
        Rational value;
    };
    std::vector<Violation> flatness_violations() const;

    // Plain coefficient view (c_{ij}^r), usable without the context.
    std::vector<std::array<Rational, 8>> coefficient_table() const;

    bool operator==(const StructureConstants& o) const;

  private:
    StructureConstants() = default;
    std::shared_ptr<const DeformationContext> ctx_;
    std::vector<AlgebraElement> table_;
};

struct TableComparison {
    bool match;
    struct Mismatch {
        std::size_t i, j;
        std::uint8_t expected_slot;
        std::string got;
    };
    std::vector<Mismatch> mismatches;
};

// Specializes every structure constant at t = 0 and compares with the
// group table. Requires the flatness certificate (throws otherwise).
TableComparison specialize_at_zero(const StructureConstants& sc, const GroupTable& table);

// First-order deformation cochains: psi(g1, g2, i) is the coefficient of
// t^i in the product of basis elements g1, g2, as a GF(2)-vector over the
// basis (bit r = coefficient of slot r). Orders beyond max_order are
// unknown, not zero; asking for them throws.
class PsiTable {
  public:
    static PsiTable extract(const StructureConstants& sc, unsigned max_order,
                            ExecPolicy policy = ExecPolicy::Parallel);

    unsigned max_order() const { return max_order_; }
    std::uint8_t group_product_mask(std::size_t g1, std::size_t g2) const;
    std::uint8_t psi(std::size_t g1, std::size_t g2, unsigned order) const;

    // Copy with one output bit flipped at the given order (for negative tests).
    PsiTable perturbed(std::size_t g1, std::size_t g2, unsigned order, unsigned bit) const;
    static PsiTable all_zero(unsigned max_order);

  private:
    unsigned max_order_ = 0;
    // orders_[g1*8+g2][k]: k = 0 is the order-0 mask, k = i is order i
    std::array<std::vector<std::uint8_t>, 64> orders_{};
};

struct CocycleReport {
    bool ok;
    std::size_t failures = 0;
    std::string first_failure;
};

// Char-2 first-order cocycle identity on all 512 basis triples:
// g1.psi(g2,g3) + psi(g1 g2, g3) + psi(g1, g2 g3) + psi(g1,g2).g3 = 0,
// with group translation extended linearly over GF(2).
CocycleReport cocycle_check(const PsiTable& psi, const GroupTable& table,
                            ExecPolicy policy = ExecPolicy::Parallel);

struct AssociativityReport {
    bool ok;
    std::size_t failures = 0;
    std::string first_failure;
};

// Exact (u v) w = u (v w) over all 512 basis triples.
AssociativityReport associativity_check(const std::shared_ptr<const DeformationContext>& ctx,
                                        ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace qdeform
