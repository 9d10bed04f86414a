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

#ifndef ZPRCONV_DUAL_HPP
#define ZPRCONV_DUAL_HPP

#include <string>
#include <vector>

#include "invariant.hpp"
#include "matrix.hpp"
#include "rational.hpp"
#include "ridm.hpp"

namespace zprconv {

namespace detail {

/// Gaussian elimination over the total quotient ring with regular pivots and
/// free pivot position choice. A regular pivot exists at every step as long
/// as the projected matrix retains full row rank.
struct QuotientElimination {
    std::vector<std::vector<Rational>> m;
    std::vector<int> pivot_cols;  // pivot_cols[s] = column of pivot row s
    int rank = 0;

    explicit QuotientElimination(std::vector<std::vector<Rational>> rows) : m(std::move(rows)) { run(); }

    void run() {
        if (m.empty()) return;
        const int rows = static_cast<int>(m.size());
        const int cols = static_cast<int>(m.front().size());
        std::vector<bool> col_used(cols, false);
        for (int row = 0; row < rows; ++row) {
            int pi = -1, pj = -1;
            for (int j = 0; j < cols && pi < 0; ++j) {
                if (col_used[j]) continue;
                for (int i = row; i < rows; ++i)
                    if (!m[i][j].is_zero() && is_regular(m[i][j].num())) {
                        pi = i;
                        pj = j;
                        break;
                    }
            }
            if (pi < 0) break;
            std::swap(m[row], m[pi]);
            Rational inv(m[row][pj].den(), m[row][pj].num());
            for (auto& e : m[row]) e = e * inv;
            for (int i = 0; i < rows; ++i) {
                if (i == row || m[i][pj].is_zero()) continue;
                Rational f = m[i][pj];
                for (int j = 0; j < cols; ++j) m[i][j] = m[i][j] - f * m[row][j];
            }
            col_used[pj] = true;
            pivot_cols.push_back(pj);
            ++rank;
        }
    }
};

inline std::vector<Poly> clear_denominators(const std::vector<Rational>& row, const RingContext& ctx) {
    Poly prod = Poly::one(ctx);
    for (const Rational& e : row) prod = prod * e.den();
    std::vector<Poly> out;
    out.reserve(row.size());
    for (const Rational& e : row) {
        Poly other = divrem_monic(prod, e.den()).first;
        out.push_back(e.num() * other);
    }
    return out;
}

}  // namespace detail

/// Exact check of G * H^T = 0.
inline bool verify_orthogonality(const PolyMatrix& g, const PolyMatrix& h) {
    if (g.cols() != h.cols()) throw BadShapeError("orthogonality check needs matching lengths");
    if (h.rows() == 0) return true;
    return mat_mul(g, h.transpose()).is_zero();
}

/// Parity-check matrix of the code generated by G: a kernel basis computed
/// over the total quotient ring, denominator-cleared, RIDM-reduced, and row
/// canonicalized. Satisfies G * H^T = 0 exactly and is itself a RIDM.
inline PolyMatrix parity_check(const PolyMatrix& g) {
    if (!is_full_row_rank(g)) throw NotFullRankError("parity_check requires full row rank");
    const RingContext& ctx = g.ctx();
    const int k = g.rows();
    const int n = g.cols();
    if (k == n) return PolyMatrix(ctx, 0, n);

    std::vector<std::vector<Rational>> rows(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) rows[i].push_back(Rational(g.at(i, j)));
    detail::QuotientElimination elim(std::move(rows));
    if (elim.rank != k) throw NotFullRankError("no regular pivot during kernel elimination");

    std::vector<bool> is_pivot(n, false);
    for (int c : elim.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Poly>> hrows;
    for (int j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Rational> v(n, Rational::zero(ctx));
        v[j] = Rational::one(ctx);
        for (int s = 0; s < k; ++s) v[elim.pivot_cols[s]] = -elim.m[s][j];
        hrows.push_back(detail::clear_denominators(v, ctx));
    }
    PolyMatrix h = PolyMatrix::from_rows(ctx, hrows);
    h = ridm_reduce(h).matrix;

    // canonical row scaling: first projected-nonzero entry of each row is
    // made monic by a unit constant
    for (int i = 0; i < h.rows(); ++i) {
        for (int j = 0; j < n; ++j) {
            Poly eb = h.at(i, j).project();
            if (eb.is_zero()) continue;
            int64_t u = ctx.inv(eb.lc());
            for (int c = 0; c < n; ++c) h.at(i, c) = h.at(i, c).scaled(u);
            break;
        }
    }

    if (!verify_orthogonality(g, h)) throw VerificationFailedError("parity-check orthogonality failed");
    if (!is_full_row_rank(h)) throw VerificationFailedError("parity-check matrix lost rank");
    return h;
}

/// Membership of a polynomial vector in the row span of H over the total
/// quotient ring, by solving x * H = v with regular pivots.
inline bool in_row_span(const PolyMatrix& h, const std::vector<Poly>& v) {
    if (static_cast<int>(v.size()) != h.cols()) throw BadShapeError("vector length mismatch");
    const RingContext& ctx = h.ctx();
    if (h.rows() == 0) {
        for (const Poly& e : v)
            if (!e.is_zero()) return false;
        return true;
    }
    // augmented system H^T x = v^T
    std::vector<std::vector<Rational>> rows(h.cols());
    for (int j = 0; j < h.cols(); ++j) {
        for (int i = 0; i < h.rows(); ++i) rows[j].push_back(Rational(h.at(i, j)));
        rows[j].push_back(Rational(v[j]));
    }
    detail::QuotientElimination elim(std::move(rows));
    // consistent iff no residual row with zero coefficients and nonzero rhs;
    // a pivot landing in the rhs column also means inconsistency
    for (int c : elim.pivot_cols)
        if (c == h.rows()) return false;
    for (int i = elim.rank; i < static_cast<int>(elim.m.size()); ++i) {
        bool lhs_zero = true;
        for (int j = 0; j < h.rows(); ++j)
            if (!elim.m[i][j].is_zero()) lhs_zero = false;
        if (lhs_zero && !elim.m[i][h.rows()].is_zero()) return false;
        if (!lhs_zero) throw VerificationFailedError("span elimination stalled on a non-regular residue");
    }
    return true;
}

/// Result of the duality verification: both invariants, their equality, and
/// the Gantmacher complementary-minor proportionality report on the
/// projected RIDM pair.
struct DualityReport {
    Poly delta_code;
    Poly delta_dual;
    bool equal = false;
    bool minors_proportional = false;
    bool ratio_constant = false;
    int defined_pairs = 0;
    int total_pairs = 0;

    std::string to_text() const {
        std::string s = "delta(C)=" + delta_code.to_text() + " delta(Cperp)=" + delta_dual.to_text() +
                        (equal ? " EQUAL" : " DIFFER");
        s += "\nminor ratios: " + std::to_string(defined_pairs) + "/" + std::to_string(total_pairs) + " defined, " +
             (minors_proportional ? (ratio_constant ? "constant" : "proportional") : "NOT proportional") + "\n";
        return s;
    }
};

inline DualityReport duality_check(const PolyMatrix& g) {
    if (!is_full_row_rank(g)) throw NotFullRankError("duality_check requires full row rank");
    const int n = g.cols();
    PolyMatrix gr = ridm_reduce(g).matrix;
    Poly delta_c = delta_of_ridm(gr);

    if (gr.rows() == n) {
        // dual of a rank-n code is the empty matrix with delta 1
        DualityReport rep{delta_c, Poly::one(g.ctx().residue_field()), false, true, true, 0, 0};
        rep.equal = rep.delta_code == rep.delta_dual;
        return rep;
    }

    PolyMatrix h = parity_check(gr);
    Poly delta_p = delta_of_ridm(h);
    DualityReport rep{delta_c, delta_p, delta_c == delta_p, true, true, 0, 0};

    // complementary-minor proportionality over F_p(D), with the subset sign
    PolyMatrix gbar = gr.project();
    PolyMatrix hbar = h.project();
    MinorSet mg = maximal_minors(gbar);
    rep.total_pairs = static_cast<int>(mg.subsets.size());
    Poly ref_num = Poly::zero(gbar.ctx()), ref_den = Poly::zero(gbar.ctx());
    for (size_t s = 0; s < mg.subsets.size(); ++s) {
        std::vector<int> comp;
        for (int j = 0, si = 0; j < n; ++j) {
            if (si < static_cast<int>(mg.subsets[s].size()) && mg.subsets[s][si] == j) {
                ++si;
                continue;
            }
            comp.push_back(j);
        }
        Poly mh = det(hbar.submatrix_cols(comp));
        const Poly& mgs = mg.minors[s];
        if (mgs.is_zero() != mh.is_zero()) {
            rep.minors_proportional = false;
            continue;
        }
        if (mgs.is_zero()) continue;
        int sum = 0;
        for (int idx : mg.subsets[s]) sum += idx;
        Poly signed_mg = (sum % 2 == 0) ? mgs : -mgs;
        if (ref_den.is_zero()) {
            ref_num = signed_mg;
            ref_den = mh;
        } else if (!(signed_mg * ref_den == ref_num * mh)) {
            rep.minors_proportional = false;
        }
        ++rep.defined_pairs;
    }
    if (rep.defined_pairs > 0) {
        // the common ratio must be a nonzero constant of F_p
        rep.ratio_constant = rep.minors_proportional && ref_num.deg() == ref_den.deg() &&
                             ref_num == ref_den.scaled(gbar.ctx().mul(ref_num.lc(), gbar.ctx().inv(ref_den.lc())));
    } else {
        rep.ratio_constant = rep.minors_proportional;
    }
    return rep;
}

}  // namespace zprconv

#endif
