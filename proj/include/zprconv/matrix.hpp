/*
   Copyright 2026 the zprconv authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ZPRCONV_MATRIX_HPP
#define ZPRCONV_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "poly.hpp"

namespace zprconv {

/// k x n matrix over Z_{p^r}[D] (or F_p[D] with an r = 1 context).
class PolyMatrix {
   public:
    PolyMatrix(const RingContext& ctx, int rows, int cols)
        : ctx_(ctx), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, Poly::zero(ctx)) {
        if (rows < 0 || cols < 0) throw BadShapeError("negative matrix dimensions");
    }

    static PolyMatrix identity(const RingContext& ctx, int n) {
        PolyMatrix m(ctx, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Poly::one(ctx);
        return m;
    }

    static PolyMatrix from_rows(const RingContext& ctx, const std::vector<std::vector<Poly>>& rows) {
        if (rows.empty()) throw BadShapeError("matrix needs at least one row");
        PolyMatrix m(ctx, static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
        for (int i = 0; i < m.rows(); ++i) {
            if (static_cast<int>(rows[i].size()) != m.cols()) throw BadShapeError("ragged rows");
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    const RingContext& ctx() const { return ctx_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Poly& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Poly& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const PolyMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const Poly& f : e_)
            if (!f.is_zero()) return false;
        return true;
    }

    PolyMatrix transpose() const {
        PolyMatrix t(ctx_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    std::vector<Poly> row(int i) const {
        std::vector<Poly> r;
        r.reserve(cols_);
        for (int j = 0; j < cols_; ++j) r.push_back(at(i, j));
        return r;
    }

    PolyMatrix submatrix_cols(const std::vector<int>& cols) const {
        PolyMatrix s(ctx_, rows_, static_cast<int>(cols.size()));
        for (int i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols.size(); ++j) s.at(i, static_cast<int>(j)) = at(i, cols[j]);
        return s;
    }

    /// Entrywise reduction mod p.
    PolyMatrix project() const {
        PolyMatrix m(ctx_.residue_field(), rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).project();
        return m;
    }

    // elementary row operations; each equals left-multiplication by a
    // unimodular matrix
    void row_swap(int a, int b) {
        for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }
    void row_scale_by_unit(int i, const Poly& u) {
        if (!is_unit_poly(u)) throw NotUnitError("row scale multiplier must be a unit polynomial");
        for (int j = 0; j < cols_; ++j) at(i, j) = at(i, j) * u;
    }
    void row_axpy(int target, int source, const Poly& mult) {
        for (int j = 0; j < cols_; ++j) at(target, j) = at(target, j) + mult * at(source, j);
    }

    /// Matrix text block: header then one line per row, entries separated by
    /// '|' in comma coefficient syntax.
    std::string to_text() const {
        std::string s = "p=" + std::to_string(ctx_.p()) + " r=" + std::to_string(ctx_.r()) + " k=" +
                        std::to_string(rows_) + " n=" + std::to_string(cols_) + "\n";
        for (int i = 0; i < rows_; ++i) {
            s += "row:";
            for (int j = 0; j < cols_; ++j) {
                s += (j ? "|" : " ") + at(i, j).to_text();
            }
            s += "\n";
        }
        return s;
    }

   private:
    RingContext ctx_;
    int rows_, cols_;
    std::vector<Poly> e_;
};

inline PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.ctx() != b.ctx()) throw ContextMismatchError("matrix contexts differ");
    if (a.cols() != b.rows()) throw BadShapeError("matrix product shape mismatch");
    PolyMatrix c(a.ctx(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            Poly acc = Poly::zero(a.ctx());
            for (int l = 0; l < a.cols(); ++l) acc = acc + a.at(i, l) * b.at(l, j);
            c.at(i, j) = acc;
        }
    return c;
}

/// Exact determinant by cofactor expansion; no division, valid over any
/// commutative ring.
inline Poly det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquareError("determinant of a non-square matrix");
    int n = m.rows();
    if (n == 0) return Poly::one(m.ctx());
    if (n == 1) return m.at(0, 0);
    Poly acc = Poly::zero(m.ctx());
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix minor(m.ctx(), n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        Poly term = m.at(0, j) * det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// All size-k column subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<int>> column_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    if (k > n) return out;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

/// The full set of k x k minors of a k x n matrix, lexicographic by column
/// subset.
struct MinorSet {
    std::vector<std::vector<int>> subsets;
    std::vector<Poly> minors;

    std::vector<Poly> nonzero() const {
        std::vector<Poly> out;
        for (const Poly& m : minors)
            if (!m.is_zero()) out.push_back(m);
        return out;
    }
};

inline MinorSet maximal_minors(const PolyMatrix& g) {
    if (g.rows() > g.cols()) throw BadShapeError("maximal minors need k <= n");
    MinorSet ms;
    ms.subsets = column_subsets(g.cols(), g.rows());
    ms.minors.reserve(ms.subsets.size());
    for (const auto& s : ms.subsets) ms.minors.push_back(det(g.submatrix_cols(s)));
    return ms;
}

/// Maximum degree over the nonzero maximal minors.
inline int max_minor_degree(const MinorSet& ms) {
    int d = kNegInf;
    for (const Poly& m : ms.minors)
        if (!m.is_zero()) d = std::max(d, m.deg());
    return d;
}

namespace detail {

/// Row rank over the fraction field F_p(D), by elimination with
/// cross-multiplication (no division needed).
inline int rank_over_fp_fraction_field(PolyMatrix m) {
    int rank = 0;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        m.row_swap(row, piv);
        for (int i = row + 1; i < m.rows(); ++i) {
            if (m.at(i, col).is_zero()) continue;
            Poly a = m.at(row, col), b = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) * a - m.at(row, j) * b;
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Rows generate a free rank-k module iff the projected matrix has rank k
/// over F_p(D); equivalently some maximal minor is regular. Both routes are
/// computed and cross-checked on every call.
inline bool is_full_row_rank(const PolyMatrix& g) {
    if (g.rows() > g.cols()) return false;
    bool by_rank = detail::rank_over_fp_fraction_field(g.project()) == g.rows();
    bool by_minor = false;
    for (const Poly& m : maximal_minors(g).minors)
        if (is_regular(m)) {
            by_minor = true;
            break;
        }
    if (by_rank != by_minor) throw VerificationFailedError("full-rank cross-check disagreement");
    return by_rank;
}

inline bool is_unimodular(const PolyMatrix& t) {
    if (t.rows() != t.cols()) throw NotSquareError("unimodularity of a non-square matrix");
    return is_unit_poly(det(t));
}

}  // namespace zprconv

#endif
