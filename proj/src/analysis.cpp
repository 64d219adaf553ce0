#include "qdeform/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdeform {

namespace {

std::vector<Rational> coords_vec(const AlgebraElement& e) {
    std::array<Rational, 8> c = e.coords();
    return std::vector<Rational>(c.begin(), c.end());
}

AlgebraElement from_vec(const std::shared_ptr<const DeformationContext>& ctx,
                        const std::vector<Rational>& v) {
    std::array<Rational, 8> c;
    for (std::size_t i = 0; i < 8; ++i) c[i] = v[i];
    return ctx->from_coords(c);
}

}  // namespace

std::array<std::size_t, 3> BlockDecomposition::dims() const {
    return {blocks[0].dim(), blocks[1].dim(), blocks[2].dim()};
}

bool BlockDecomposition::ok() const {
    return blocks.size() == 3 && cross_orthogonal && dims() == std::array<std::size_t, 3>{4, 2, 2};
}

BlockDecomposition decompose_blocks(const std::shared_ptr<const DeformationContext>& ctx) {
    const IdempotentTriple& idem = ctx->idempotents();
    std::array<AlgebraElement, 3> units{ctx->embed(idem.e1), ctx->embed(idem.e2),
                                        ctx->embed(idem.e3)};
    std::vector<AlgebraElement> basis;
    for (std::size_t i = 0; i < 8; ++i) basis.push_back(ctx->basis(i));

    for (std::size_t i = 0; i < 3; ++i)
        for (const AlgebraElement& b : basis)
            if (!((units[i] * b) == (b * units[i])))
                throw std::domain_error("decompose_blocks: e" + std::to_string(i + 1) +
                                        " is not central in the 8-dimensional algebra");

    BlockDecomposition out;
    std::array<std::vector<AlgebraElement>, 3> products;
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<std::vector<Rational>> rows;
        for (const AlgebraElement& b : basis) {
            products[i].push_back(b * units[i]);
            rows.push_back(coords_vec(products[i].back()));
        }
        row_reduce(rows, RationalOps{});
        std::vector<AlgebraElement> echelon;
        for (const auto& row : rows) {
            bool zero = std::all_of(row.begin(), row.end(),
                                    [](const Rational& r) { return r.is_zero(); });
            if (!zero) echelon.push_back(from_vec(ctx, row));
        }
        out.blocks.push_back(Block{i, units[i], std::move(echelon)});
    }

    out.cross_orthogonal = true;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j) continue;
            for (const AlgebraElement& p : products[i])
                for (const AlgebraElement& q : products[j])
                    if (!(p * q).is_zero()) out.cross_orthogonal = false;
        }
    return out;
}

CenterReport center_of_block(const Block& block) {
    std::size_t n = block.dim();
    // unknowns alpha_r; equations: coords of sum_r alpha_r (B_r B_s + B_s B_r) = 0
    std::vector<std::vector<Rational>> rows;
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::vector<Rational>> comm;
        for (std::size_t r = 0; r < n; ++r)
            comm.push_back(coords_vec(block.basis[r] * block.basis[s] +
                                      block.basis[s] * block.basis[r]));
        for (std::size_t c = 0; c < 8; ++c) {
            std::vector<Rational> row(n, Rational::zero());
            bool nonzero = false;
            for (std::size_t r = 0; r < n; ++r) {
                row[r] = comm[r][c];
                nonzero = nonzero || !row[r].is_zero();
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    CenterReport rep;
    if (rows.empty()) {
        rep.dim = n;
        rep.basis = block.basis;
        return rep;
    }
    std::vector<std::vector<Rational>> kernel = kernel_basis(rows, n, RationalOps{});
    rep.dim = kernel.size();
    const auto& ctx = block.unit.ctx();
    for (const auto& coeffs : kernel) {
        AlgebraElement v = ctx->zero();
        for (std::size_t r = 0; r < n; ++r) v = v + block.basis[r].scaled(coeffs[r]);
        rep.basis.push_back(v);
    }
    return rep;
}

AlgebraTable to_algebra_table(const StructureConstants& sc) {
    AlgebraTable t;
    t.dim = 8;
    t.unit_index = 0;
    for (const auto& coords : sc.coefficient_table())
        t.product.push_back(std::vector<Rational>(coords.begin(), coords.end()));
    return t;
}

AlgebraTable group_algebra_table(const GroupTable& table) {
    AlgebraTable t;
    t.dim = 8;
    t.unit_index = 0;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            std::vector<Rational> v(8, Rational::zero());
            v[table.mul(i, j)] = Rational::one();
            t.product.push_back(std::move(v));
        }
    return t;
}

SeparabilityOutcome separability_certificate(const AlgebraTable& alg) {
    std::size_t n = alg.dim;
    const auto c = [&](std::size_t i, std::size_t j, std::size_t r) -> const Rational& {
        return alg.product[i * n + j][r];
    };
    IncrementalSolver<Rational, RationalOps> solver(n * n);

    // (b_k (x) 1) e = (1 (x) b_k) e: coefficient of b_r (x) b_s gives
    // sum_i lambda_{i s} c_{k i}^r + sum_j lambda_{r j} c_{j k}^s = 0.
    bool feasible = true;
    for (std::size_t k = 0; k < n && feasible; ++k)
        for (std::size_t r = 0; r < n && feasible; ++r)
            for (std::size_t s = 0; s < n && feasible; ++s) {
                std::vector<std::pair<std::size_t, Rational>> terms;
                for (std::size_t i = 0; i < n; ++i)
                    if (!c(k, i, r).is_zero()) terms.emplace_back(i * n + s, c(k, i, r));
                for (std::size_t j = 0; j < n; ++j)
                    if (!c(j, k, s).is_zero()) terms.emplace_back(r * n + j, c(j, k, s));
                if (!solver.add_equation(terms, Rational::zero())) feasible = false;
            }

    // mu(e) = 1: sum_{ij} lambda_{ij} c_{ij}^r = [r == unit]
    for (std::size_t r = 0; r < n && feasible; ++r) {
        std::vector<std::pair<std::size_t, Rational>> terms;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!c(i, j, r).is_zero()) terms.emplace_back(i * n + j, c(i, j, r));
        Rational rhs = r == alg.unit_index ? Rational::one() : Rational::zero();
        if (!solver.add_equation(terms, rhs)) feasible = false;
    }

    SeparabilityOutcome out;
    out.feasible = feasible && solver.feasible();
    out.rank = solver.rank();
    if (out.feasible) out.tensor = solver.particular_solution();
    return out;
}

bool verify_separability(const AlgebraTable& alg, const std::vector<Rational>& tensor,
                         ExecPolicy policy) {
    std::size_t n = alg.dim;
    if (tensor.size() != n * n) return false;
    const auto c = [&](std::size_t i, std::size_t j, std::size_t r) -> const Rational& {
        return alg.product[i * n + j][r];
    };

    auto bimodule_eq = [&](std::size_t flat) {
        std::size_t k = flat / (n * n);
        std::size_t r = (flat / n) % n;
        std::size_t s = flat % n;
        Rational acc = Rational::zero();
        for (std::size_t i = 0; i < n; ++i)
            if (!c(k, i, r).is_zero() && !tensor[i * n + s].is_zero())
                acc += c(k, i, r) * tensor[i * n + s];
        for (std::size_t j = 0; j < n; ++j)
            if (!c(j, k, s).is_zero() && !tensor[r * n + j].is_zero())
                acc += c(j, k, s) * tensor[r * n + j];
        return acc.is_zero();
    };

    long long total = static_cast<long long>(n * n * n);
    bool ok = true;
    if (policy == ExecPolicy::Serial) {
        for (long long f = 0; f < total; ++f)
            if (!bimodule_eq(static_cast<std::size_t>(f))) ok = false;
    } else {
        int bad = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : bad)
#endif
        for (long long f = 0; f < total; ++f)
            if (!bimodule_eq(static_cast<std::size_t>(f))) ++bad;
        ok = bad == 0;
    }
    if (!ok) return false;

    for (std::size_t r = 0; r < n; ++r) {
        Rational acc = Rational::zero();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!tensor[i * n + j].is_zero()) acc += tensor[i * n + j] * c(i, j, r);
        Rational expected = r == alg.unit_index ? Rational::one() : Rational::zero();
        if (!(acc == expected)) return false;
    }
    return true;
}

std::string CrossedProductData::failed() const {
    std::string s;
    if (!quadratic_u) s += "u^2+a*u+b*e1 != 0; ";
    if (!v_squared) s += "v^2 != b*e1; ";
    if (!twist_relation) s += "v*u != (u+a*e1)*v; ";
    if (!cocycle_values) s += "cocycle values off; ";
    return s;
}

CrossedProductData crossed_product_relations(
    const std::shared_ptr<const DeformationContext>& ctx) {
    const DeformationParams& p = ctx->params();
    AlgebraElement e1 = ctx->embed(ctx->idempotents().e1);
    AlgebraElement u = ctx->x() * e1;
    AlgebraElement v = ctx->y() * e1;

    AlgebraElement quad = u * u + u.scaled(p.a) + e1.scaled(p.b);
    AlgebraElement f_tt = e1.scaled(p.b);

    CrossedProductData data{u,
                            v,
                            quad.is_zero(),
                            (v * v) == f_tt,
                            (v * u) == ((u + e1.scaled(p.a)) * v),
                            false,
                            f_tt};
    data.cocycle_values = ((e1 * e1) == e1) && ((e1 * v) == v) && ((v * e1) == v) &&
                          ((v * v) == data.f_tau_tau);
    return data;
}

KElem SplittingField::mul(const Elem& x, const Elem& y) const {
    // (x0 + x1 s)(y0 + y1 s) with s^2 = a s + b
    Rational t2 = x.c1 * y.c1;
    return {x.c0 * y.c0 + t2 * b_, x.c0 * y.c1 + x.c1 * y.c0 + t2 * a_};
}

KElem SplittingField::inv(const Elem& x) const {
    // solve (x0 + x1 s)(y0 + y1 s) = 1; the norm x0^2 + a x0 x1 + b x1^2
    // vanishes only at 0 when s^2 + a s + b is irreducible
    Rational norm = x.c0 * x.c0 + a_ * x.c0 * x.c1 + b_ * x.c1 * x.c1;
    if (norm.is_zero())
        throw std::domain_error("SplittingField: zero divisor (pi is not irreducible?)");
    Rational ninv = norm.inv();
    return {(x.c0 + a_ * x.c1) * ninv, x.c1 * ninv};
}

namespace {

Mat2K mat_mul(const SplittingField& K, const Mat2K& A, const Mat2K& B) {
    Mat2K r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            r[i * 2 + j] = K.add(K.mul(A[i * 2 + 0], B[0 * 2 + j]),
                                 K.mul(A[i * 2 + 1], B[1 * 2 + j]));
    return r;
}

Mat2K mat_add(const SplittingField& K, const Mat2K& A, const Mat2K& B) {
    Mat2K r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = K.add(A[i], B[i]);
    return r;
}

Mat2K mat_scale(const SplittingField& K, const KElem& s, const Mat2K& A) {
    Mat2K r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = K.mul(s, A[i]);
    return r;
}

bool mat_is_zero(const SplittingField& K, const Mat2K& A) {
    for (const KElem& e : A)
        if (!K.is_zero(e)) return false;
    return true;
}

}  // namespace

SplitReport split_block_over_k(const std::shared_ptr<const DeformationContext>& ctx) {
    const DeformationParams& p = ctx->params();
    SplittingField K(p.a, p.b);

    AlgebraElement e1 = ctx->embed(ctx->idempotents().e1);
    AlgebraElement u = ctx->x() * e1;
    AlgebraElement v = ctx->y() * e1;
    AlgebraElement vu = v * u;
    std::array<AlgebraElement, 4> fbasis{e1, u, v, vu};

    SplitReport rep{};

    // {e1, u, v, vu} must be an F-basis of the 4-dimensional block.
    std::vector<std::vector<Rational>> rows;
    for (const AlgebraElement& b : fbasis) rows.push_back(coords_vec(b));
    rep.basis_ok = matrix_rank(rows, RationalOps{}) == 4;
    if (!rep.basis_ok) return rep;

    // coordinates (alpha, beta) in K^2: xi = e1 phi(alpha) + v phi(beta),
    // phi(k0 + k1 s) = k0 e1 + k1 u
    auto decompose = [&](const AlgebraElement& xi) -> std::array<KElem, 2> {
        std::vector<std::vector<Rational>> m(8, std::vector<Rational>(4, Rational::zero()));
        for (std::size_t col = 0; col < 4; ++col) {
            std::vector<Rational> bc = coords_vec(fbasis[col]);
            for (std::size_t row = 0; row < 8; ++row) m[row][col] = bc[row];
        }
        std::optional<std::vector<Rational>> sol =
            solve_linear(m, coords_vec(xi), RationalOps{});
        if (!sol) throw std::logic_error("split_block_over_k: element outside the block");
        return {KElem{(*sol)[0], (*sol)[1]}, KElem{(*sol)[2], (*sol)[3]}};
    };

    // left-multiplication matrix over K on the right-K-basis {e1, v}
    auto mat_of = [&](const AlgebraElement& w) {
        std::array<KElem, 2> col0 = decompose(w * e1);
        std::array<KElem, 2> col1 = decompose(w * v);
        return Mat2K{col0[0], col1[0], col0[1], col1[1]};
    };

    for (std::size_t i = 0; i < 4; ++i) rep.images[i] = mat_of(fbasis[i]);

    Mat2K identity{K.one(), K.zero(), K.zero(), K.one()};
    rep.identity_ok = rep.images[0] == identity;

    rep.multiplicative_ok = true;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Mat2K lhs = mat_of(fbasis[i] * fbasis[j]);
            Mat2K rhs = mat_mul(K, rep.images[i], rep.images[j]);
            if (!(lhs == rhs)) rep.multiplicative_ok = false;
        }

    // K-linear independence of the four images in M_2(K)
    std::vector<std::vector<KElem>> krows;
    for (const Mat2K& m : rep.images) krows.push_back({m[0], m[1], m[2], m[3]});
    rep.k_independent = matrix_rank(krows, K) == 4;

    // F-rank of the images (each K entry contributes two F-coordinates)
    std::vector<std::vector<Rational>> frows;
    for (const Mat2K& m : rep.images) {
        std::vector<Rational> row;
        for (const KElem& e : m) {
            row.push_back(e.c0);
            row.push_back(e.c1);
        }
        frows.push_back(std::move(row));
    }
    rep.f_rank = matrix_rank(frows, RationalOps{});

    // Cayley-Hamilton content of "u acts as multiplication by s":
    // M(u)^2 + a M(u) + b I = 0.
    Mat2K mu = rep.images[1];
    Mat2K acc = mat_mul(K, mu, mu);
    acc = mat_add(K, acc, mat_scale(K, K.from(p.a), mu));
    acc = mat_add(K, acc, mat_scale(K, K.from(p.b), identity));
    rep.u_satisfies_pi = mat_is_zero(K, acc);

    return rep;
}

EtaleReport etale_check(const std::shared_ptr<const DeformationContext>& ctx) {
    const DeformationParams& p = ctx->params();
    Rational za = p.z * p.a;

    auto report_for = [&](const QuotientElement& idem, const Rational& root) {
        EtaleBlockReport rep{};
        AlgebraElement e = ctx->embed(idem);
        AlgebraElement w = ctx->y() * e;

        std::vector<std::vector<Rational>> rows{coords_vec(e), coords_vec(w)};
        rep.independent = matrix_rank(rows, RationalOps{}) == 2;

        Rational konst = root * (root + p.a);
        rep.min_poly_holds = (w * w + w.scaled(za) + e.scaled(konst)).is_zero();
        rep.min_poly = XPoly({konst, za, Rational::one()});
        rep.separable = !za.is_zero() && is_separable(rep.min_poly);
        return rep;
    };

    EtaleReport rep;
    rep.block2 = report_for(ctx->idempotents().e2, p.c);
    rep.block3 = report_for(ctx->idempotents().e3, p.d);
    return rep;
}

std::vector<int> complex_q8_dimension_vector() { return {1, 1, 1, 1, 2}; }

DimensionVector dimension_vector(const SplitReport& split, const EtaleReport& etale,
                                 const SeparabilityOutcome& certificate) {
    if (!split.ok())
        throw std::logic_error("dimension_vector: splitting of the e1 block not certified");
    if (!etale.ok())
        throw std::logic_error("dimension_vector: etale certificates for e2/e3 missing");
    if (!certificate.feasible)
        throw std::logic_error("dimension_vector: no separability certificate");

    DimensionVector dv;
    dv.dims = {1, 1, 1, 1};  // two separable quadratics, two closure points each
    dv.dims.push_back(2);    // the split central simple block
    std::sort(dv.dims.begin(), dv.dims.end());
    dv.sum_of_squares = 0;
    for (int d : dv.dims) dv.sum_of_squares += d * d;
    dv.matches_complex_q8 = dv.dims == complex_q8_dimension_vector();
    return dv;
}

}  // namespace qdeform
