#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qdeform/rational.hpp"

namespace qdeform {

// Exact Gaussian elimination over an arbitrary field, with the field
// supplied as an ops object (the splitting-field elements need a context,
// so static zero()/one() are not assumed).

struct RationalOps {
    Rational zero() const { return Rational::zero(); }
    Rational one() const { return Rational::one(); }
    Rational add(const Rational& a, const Rational& b) const { return a + b; }
    Rational mul(const Rational& a, const Rational& b) const { return a * b; }
    Rational inv(const Rational& a) const { return a.inv(); }
    bool is_zero(const Rational& a) const { return a.is_zero(); }
};

// In-place reduced row echelon form. Returns the pivot column of each
// pivot row, in order; rank is the size of that list.
template <class E, class Ops>
std::vector<std::size_t> row_reduce(std::vector<std::vector<E>>& rows, const Ops& ops) {
    std::vector<std::size_t> pivot_cols;
    if (rows.empty()) return pivot_cols;
    std::size_t ncols = rows[0].size();
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < ncols && next_row < rows.size(); ++col) {
        std::size_t sel = rows.size();
        for (std::size_t r = next_row; r < rows.size(); ++r)
            if (!ops.is_zero(rows[r][col])) {
                sel = r;
                break;
            }
        if (sel == rows.size()) continue;
        std::swap(rows[next_row], rows[sel]);
        E lead_inv = ops.inv(rows[next_row][col]);
        for (E& e : rows[next_row]) e = ops.mul(e, lead_inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next_row || ops.is_zero(rows[r][col])) continue;
            E factor = rows[r][col];
            for (std::size_t cc = 0; cc < ncols; ++cc)
                rows[r][cc] = ops.add(rows[r][cc], ops.mul(factor, rows[next_row][cc]));
        }
        pivot_cols.push_back(col);
        ++next_row;
    }
    return pivot_cols;
}

template <class E, class Ops>
std::size_t matrix_rank(std::vector<std::vector<E>> rows, const Ops& ops) {
    return row_reduce(rows, ops).size();
}

// Basis of the right null space of the matrix (rows of length ncols).
template <class E, class Ops>
std::vector<std::vector<E>> kernel_basis(std::vector<std::vector<E>> rows, std::size_t ncols,
                                         const Ops& ops) {
    std::vector<std::size_t> pivots = row_reduce(rows, ops);
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<E>> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<E> v(ncols, ops.zero());
        v[f] = ops.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = rows[r][f];  // char 2: x_p = sum of free contributions
        basis.push_back(std::move(v));
    }
    return basis;
}

// Particular solution of A x = b with free variables set to zero;
// nullopt when the system is inconsistent.
template <class E, class Ops>
std::optional<std::vector<E>> solve_linear(std::vector<std::vector<E>> rows,
                                           const std::vector<E>& rhs, const Ops& ops) {
    std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r].push_back(rhs[r]);
    std::vector<std::size_t> pivots = row_reduce(rows, ops);
    if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
    std::vector<E> x(ncols, ops.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rows[r][ncols];
    return x;
}

// Streaming Gaussian elimination for large sparse systems: equations are
// fed one at a time, reduced against the pivot rows seen so far, and an
// inconsistency (0 = nonzero) is detected as soon as it appears.
template <class E, class Ops>
class IncrementalSolver {
  public:
    explicit IncrementalSolver(std::size_t ncols, Ops ops = {})
        : ncols_(ncols), ops_(std::move(ops)), pivot_row_(ncols, npos) {}

    // terms: (column, coefficient) pairs; returns false once infeasible.
    bool add_equation(const std::vector<std::pair<std::size_t, E>>& terms, const E& rhs) {
        if (!feasible_) return false;
        std::vector<E> row(ncols_ + 1, ops_.zero());
        for (const auto& [c, v] : terms) row[c] = ops_.add(row[c], v);
        row[ncols_] = rhs;
        reduce_row_(row);
        std::size_t lead = leading_col_(row);
        if (lead == ncols_ + 1) return true;  // 0 = 0, redundant
        if (lead == ncols_) {
            feasible_ = false;  // 0 = nonzero
            return false;
        }
        E inv = ops_.inv(row[lead]);
        for (E& e : row) e = ops_.mul(e, inv);
        pivot_row_[lead] = rows_.size();
        pivot_cols_.push_back(lead);
        rows_.push_back(std::move(row));
        return true;
    }

    bool feasible() const { return feasible_; }
    std::size_t rank() const { return rows_.size(); }

    // Free variables are zero; requires feasible().
    std::vector<E> particular_solution() const {
        std::vector<E> x(ncols_, ops_.zero());
        std::vector<std::size_t> order = pivot_cols_;
        std::sort(order.begin(), order.end());
        for (std::size_t k = order.size(); k-- > 0;) {
            std::size_t col = order[k];
            const std::vector<E>& row = rows_[pivot_row_[col]];
            E acc = row[ncols_];
            for (std::size_t c = col + 1; c < ncols_; ++c)
                if (!ops_.is_zero(row[c]) && !ops_.is_zero(x[c]))
                    acc = ops_.add(acc, ops_.mul(row[c], x[c]));
            x[col] = acc;
        }
        return x;
    }

  private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    void reduce_row_(std::vector<E>& row) const {
        for (std::size_t c = 0; c < ncols_; ++c) {
            if (ops_.is_zero(row[c]) || pivot_row_[c] == npos) continue;
            const std::vector<E>& p = rows_[pivot_row_[c]];
            E factor = row[c];
            for (std::size_t cc = c; cc <= ncols_; ++cc)
                if (!ops_.is_zero(p[cc]))
                    row[cc] = ops_.add(row[cc], ops_.mul(factor, p[cc]));
        }
    }

    std::size_t leading_col_(const std::vector<E>& row) const {
        for (std::size_t c = 0; c <= ncols_; ++c)
            if (!ops_.is_zero(row[c])) return c;
        return ncols_ + 1;
    }

    std::size_t ncols_;
    Ops ops_;
    bool feasible_ = true;
    std::vector<std::vector<E>> rows_;
    std::vector<std::size_t> pivot_row_;
    std::vector<std::size_t> pivot_cols_;
};

}  // namespace qdeform
