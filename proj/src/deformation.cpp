#include "qdeform/deformation.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdeform {

namespace {
void require_same_ctx(const AlgebraElement& a, const AlgebraElement& b) {
    if (!a.ctx()->same_context(*b.ctx()))
        throw std::logic_error("AlgebraElement: mixed deformation contexts");
}
}  // namespace

std::array<Rational, 8> AlgebraElement::coords() const {
    std::array<Rational, 8> r;
    for (std::size_t i = 0; i < 4; ++i) {
        r[i] = even_.coords()[i];
        r[4 + i] = odd_.coords()[i];
    }
    return r;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    require_same_ctx(*this, o);
    return AlgebraElement(ctx_, even_ + o.even_, odd_ + o.odd_);
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    require_same_ctx(*this, o);
    return ctx_->mul(*this, o);
}

AlgebraElement AlgebraElement::scaled(const Rational& s) const {
    return AlgebraElement(ctx_, even_.scaled(s), odd_.scaled(s));
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    return ctx_->same_context(*o.ctx_) && even_ == o.even_ && odd_ == o.odd_;
}

std::string AlgebraElement::str() const {
    std::array<Rational, 8> c = coords();
    std::string s;
    for (std::size_t i = 0; i < 8; ++i) {
        if (c[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (c[i].is_one())
            s += GroupTable::slot_name(i);
        else
            s += "(" + c[i].str() + ")*" + GroupTable::slot_name(i);
    }
    return s.empty() ? "0" : s;
}

GroupTable GroupTable::quaternion() {
    GroupTable t{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                for (std::size_t l = 0; l < 2; ++l) {
                    // (sigma^i tau^j)(sigma^k tau^l): move sigma^k past tau^j
                    // with tau sigma = sigma^3 tau, then fold tau^2 = sigma^2.
                    std::size_t si = (i + (j == 0 ? k : 3 * k)) % 4;
                    std::size_t tj = j + l;
                    if (tj == 2) {
                        si = (si + 2) % 4;
                        tj = 0;
                    }
                    t.product[i + 4 * j][k + 4 * l] = static_cast<std::uint8_t>(si + 4 * tj);
                }
    return t;
}

std::string GroupTable::slot_name(std::size_t i) {
    static const char* names[8] = {"1", "x", "x^2", "x^3", "y", "x*y", "x^2*y", "x^3*y"};
    return names[i];
}

std::shared_ptr<const DeformationContext> DeformationContext::make(const DeformationParams& p) {
    ValidationReport v = validate(p);
    if (!v.ok())
        throw std::invalid_argument("DeformationContext: invalid parameters\n" + v.str());
    auto ring = QuotientRing::make(build_modulus(p));
    IdempotentTriple idem = compute_idempotents(ring, p);
    auto eta = build_eta(ring, p);
    SkewPoly qt = build_qt(eta, p);
    // right-division by q_t is only valid for a central monic divisor
    if (!qt.is_monic() || !is_central(qt))
        throw std::logic_error("DeformationContext: q_t is not central and monic");
    return std::shared_ptr<const DeformationContext>(
        new DeformationContext(p, std::move(ring), std::move(idem), std::move(eta), std::move(qt)));
}

bool DeformationContext::same_context(const DeformationContext& o) const {
    if (this == &o) return true;
    return ring_->same_ring(*o.ring_) && eta_->same_twist(*o.eta_) && qt_ == o.qt_;
}

AlgebraElement DeformationContext::zero() const {
    return element(ring_->zero(), ring_->zero());
}

AlgebraElement DeformationContext::one() const { return element(ring_->one(), ring_->zero()); }

AlgebraElement DeformationContext::x() const { return element(ring_->x(), ring_->zero()); }

AlgebraElement DeformationContext::y() const { return element(ring_->zero(), ring_->one()); }

AlgebraElement DeformationContext::basis(std::size_t slot) const {
    if (slot >= 8) throw std::out_of_range("DeformationContext: basis slot must be < 8");
    std::array<Rational, 8> c;
    c.fill(Rational::zero());
    c[slot] = Rational::one();
    return from_coords(c);
}

AlgebraElement DeformationContext::element(QuotientElement even, QuotientElement odd) const {
    return AlgebraElement(shared_from_this(), std::move(even), std::move(odd));
}

AlgebraElement DeformationContext::from_coords(const std::array<Rational, 8>& coords) const {
    return element(ring_->element({coords[0], coords[1], coords[2], coords[3]}),
                   ring_->element({coords[4], coords[5], coords[6], coords[7]}));
}

AlgebraElement DeformationContext::embed(const QuotientElement& v) const {
    return element(v, ring_->zero());
}

AlgebraElement DeformationContext::mul(const AlgebraElement& a, const AlgebraElement& b) const {
    SkewPoly fa(eta_, {a.even(), a.odd()});
    SkewPoly fb(eta_, {b.even(), b.odd()});
    SkewPoly rem = (fa * fb).divmod(qt_).second;
    return element(rem.coeff(0), rem.coeff(1));
}

StructureConstants StructureConstants::compute(
    const std::shared_ptr<const DeformationContext>& ctx, ExecPolicy policy) {
    StructureConstants sc;
    sc.ctx_ = ctx;
    sc.table_.reserve(64);
    std::vector<AlgebraElement> basis;
    for (std::size_t i = 0; i < 8; ++i) basis.push_back(ctx->basis(i));

    if (policy == ExecPolicy::Serial) {
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) sc.table_.push_back(basis[i] * basis[j]);
        return sc;
    }
    std::vector<AlgebraElement> storage(64, ctx->zero());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long k = 0; k < 64; ++k) {
        std::size_t i = static_cast<std::size_t>(k) / 8, j = static_cast<std::size_t>(k) % 8;
        storage[static_cast<std::size_t>(k)] = basis[i] * basis[j];
    }
    sc.table_ = std::move(storage);
    return sc;
}

std::vector<StructureConstants::Violation> StructureConstants::flatness_violations() const {
    std::vector<Violation> out;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            std::array<Rational, 8> c = at(i, j).coords();
            for (std::size_t r = 0; r < 8; ++r)
                if (c[r].valuation() < 0) out.push_back({i, j, r, c[r]});
        }
    return out;
}

std::vector<std::array<Rational, 8>> StructureConstants::coefficient_table() const {
    std::vector<std::array<Rational, 8>> out;
    out.reserve(64);
    for (const AlgebraElement& e : table_) out.push_back(e.coords());
    return out;
}

bool StructureConstants::operator==(const StructureConstants& o) const {
    if (table_.size() != o.table_.size()) return false;
    for (std::size_t k = 0; k < table_.size(); ++k)
        if (!(table_[k] == o.table_[k])) return false;
    return true;
}

TableComparison specialize_at_zero(const StructureConstants& sc, const GroupTable& table) {
    if (!sc.flatness_violations().empty())
        throw std::domain_error("specialize_at_zero: flatness certificate failed");
    TableComparison cmp{true, {}};
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            std::array<Rational, 8> c = sc.at(i, j).coords();
            std::uint8_t mask = 0;
            for (std::size_t r = 0; r < 8; ++r)
                if (c[r].at_zero() == Gf2::one()) mask |= static_cast<std::uint8_t>(1u << r);
            std::uint8_t expected = static_cast<std::uint8_t>(1u << table.mul(i, j));
            if (mask != expected) {
                cmp.match = false;
                cmp.mismatches.push_back({i, j, table.mul(i, j), sc.at(i, j).str()});
            }
        }
    return cmp;
}

PsiTable PsiTable::extract(const StructureConstants& sc, unsigned max_order, ExecPolicy policy) {
    if (!sc.flatness_violations().empty())
        throw std::domain_error("psi extraction: flatness certificate failed");
    PsiTable psi;
    psi.max_order_ = max_order;
    for (auto& v : psi.orders_) v.assign(max_order + 1, 0);

    auto fill_pair = [&](std::size_t k) {
        std::size_t i = k / 8, j = k % 8;
        std::array<Rational, 8> c = sc.at(i, j).coords();
        for (std::size_t r = 0; r < 8; ++r) {
            if (c[r].is_zero()) continue;
            Series s = c[r].expand(max_order + 1);
            for (unsigned o = 0; o <= max_order; ++o)
                if (s.coeff(o)) psi.orders_[k][o] |= static_cast<std::uint8_t>(1u << r);
        }
    };

    if (policy == ExecPolicy::Serial) {
        for (std::size_t k = 0; k < 64; ++k) fill_pair(k);
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (long long k = 0; k < 64; ++k) fill_pair(static_cast<std::size_t>(k));
    }
    return psi;
}

std::uint8_t PsiTable::group_product_mask(std::size_t g1, std::size_t g2) const {
    return orders_.at(g1 * 8 + g2).at(0);
}

std::uint8_t PsiTable::psi(std::size_t g1, std::size_t g2, unsigned order) const {
    if (order < 1 || order > max_order_)
        throw std::out_of_range("PsiTable: order outside the extracted range");
    return orders_.at(g1 * 8 + g2).at(order);
}

PsiTable PsiTable::perturbed(std::size_t g1, std::size_t g2, unsigned order, unsigned bit) const {
    PsiTable copy = *this;
    copy.orders_.at(g1 * 8 + g2).at(order) ^= static_cast<std::uint8_t>(1u << bit);
    return copy;
}

PsiTable PsiTable::all_zero(unsigned max_order) {
    PsiTable psi;
    psi.max_order_ = max_order;
    GroupTable table = GroupTable::quaternion();
    for (std::size_t k = 0; k < 64; ++k) {
        psi.orders_[k].assign(max_order + 1, 0);
        psi.orders_[k][0] = static_cast<std::uint8_t>(1u << table.mul(k / 8, k % 8));
    }
    return psi;
}

namespace {

// Translate a GF(2) basis-mask by a group element on the left/right.
std::uint8_t translate_left(const GroupTable& t, std::size_t g, std::uint8_t mask) {
    std::uint8_t out = 0;
    for (std::size_t r = 0; r < 8; ++r)
        if (mask & (1u << r)) out ^= static_cast<std::uint8_t>(1u << t.mul(g, r));
    return out;
}

std::uint8_t translate_right(const GroupTable& t, std::uint8_t mask, std::size_t g) {
    std::uint8_t out = 0;
    for (std::size_t r = 0; r < 8; ++r)
        if (mask & (1u << r)) out ^= static_cast<std::uint8_t>(1u << t.mul(r, g));
    return out;
}

std::string triple_name(std::size_t i, std::size_t j, std::size_t k) {
    return "(" + GroupTable::slot_name(i) + ", " + GroupTable::slot_name(j) + ", " +
           GroupTable::slot_name(k) + ")";
}

}  // namespace

CocycleReport cocycle_check(const PsiTable& psi, const GroupTable& table, ExecPolicy policy) {
    auto triple_ok = [&](std::size_t g1, std::size_t g2, std::size_t g3) {
        std::uint8_t v = translate_left(table, g1, psi.psi(g2, g3, 1));
        v ^= psi.psi(table.mul(g1, g2), g3, 1);
        v ^= psi.psi(g1, table.mul(g2, g3), 1);
        v ^= translate_right(table, psi.psi(g1, g2, 1), g3);
        return v == 0;
    };

    CocycleReport rep{true, 0, ""};
    if (policy == ExecPolicy::Serial) {
        for (std::size_t n = 0; n < 512; ++n) {
            std::size_t g1 = n / 64, g2 = (n / 8) % 8, g3 = n % 8;
            if (!triple_ok(g1, g2, g3)) {
                ++rep.failures;
                if (rep.first_failure.empty()) rep.first_failure = triple_name(g1, g2, g3);
            }
        }
    } else {
        std::size_t first_bad = 512;
        std::size_t failures = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : failures) reduction(min : first_bad)
#endif
        for (long long n = 0; n < 512; ++n) {
            std::size_t g1 = static_cast<std::size_t>(n) / 64;
            std::size_t g2 = (static_cast<std::size_t>(n) / 8) % 8;
            std::size_t g3 = static_cast<std::size_t>(n) % 8;
            if (!triple_ok(g1, g2, g3)) {
                ++failures;
                first_bad = std::min(first_bad, static_cast<std::size_t>(n));
            }
        }
        rep.failures = failures;
        if (first_bad < 512)
            rep.first_failure = triple_name(first_bad / 64, (first_bad / 8) % 8, first_bad % 8);
    }
    rep.ok = rep.failures == 0;
    return rep;
}

AssociativityReport associativity_check(const std::shared_ptr<const DeformationContext>& ctx,
                                        ExecPolicy policy) {
    std::vector<AlgebraElement> basis;
    for (std::size_t i = 0; i < 8; ++i) basis.push_back(ctx->basis(i));

    auto triple_ok = [&](std::size_t i, std::size_t j, std::size_t k) {
        return ((basis[i] * basis[j]) * basis[k]) == (basis[i] * (basis[j] * basis[k]));
    };

    AssociativityReport rep{true, 0, ""};
    if (policy == ExecPolicy::Serial) {
        for (std::size_t n = 0; n < 512; ++n) {
            std::size_t i = n / 64, j = (n / 8) % 8, k = n % 8;
            if (!triple_ok(i, j, k)) {
                ++rep.failures;
                if (rep.first_failure.empty()) rep.first_failure = triple_name(i, j, k);
            }
        }
    } else {
        std::size_t first_bad = 512;
        std::size_t failures = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : failures) reduction(min : first_bad)
#endif
        for (long long n = 0; n < 512; ++n) {
            std::size_t i = static_cast<std::size_t>(n) / 64;
            std::size_t j = (static_cast<std::size_t>(n) / 8) % 8;
            std::size_t k = static_cast<std::size_t>(n) % 8;
            if (!triple_ok(i, j, k)) {
                ++failures;
                first_bad = std::min(first_bad, static_cast<std::size_t>(n));
            }
        }
        rep.failures = failures;
        if (first_bad < 512)
            rep.first_failure = triple_name(first_bad / 64, (first_bad / 8) % 8, first_bad % 8);
    }
    rep.ok = rep.failures == 0;
    return rep;
}

}  // namespace qdeform
