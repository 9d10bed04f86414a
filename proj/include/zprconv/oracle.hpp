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

#ifndef ZPRCONV_ORACLE_HPP
#define ZPRCONV_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "matrix.hpp"
#include "poly.hpp"

// Deliberately naive reference implementations. These back the test suites
// and the CLI --verify mode only; they never sit on the main computation
// path, so their independence stays auditable.

namespace zprconv::oracle {

struct SearchBudget {
    int max_degree = 16;
    int64_t max_states = 10'000'000;
};

/// First monic polynomial of degree >= 1 dividing every minor, enumerating
/// exhaustively by (degree, lex). None means the minors are coprime in the
/// monic-common-divisor sense.
inline std::optional<Poly> brute_common_divisor(const std::vector<Poly>& minors, const SearchBudget& budget = {}) {
    if (minors.empty()) throw AllZeroError("no minors");
    const RingContext& ctx = minors.front().ctx();
    int dmax = kNegInf;
    for (const Poly& m : minors)
        if (!m.is_zero()) dmax = std::max(dmax, m.deg());
    if (dmax == kNegInf) throw AllZeroError("all minors zero");
    if (dmax > budget.max_degree) throw BudgetExceededError("minor degrees above oracle budget");
    for (int d = 1; d <= dmax; ++d) {
        int64_t count = monic_count(ctx, d, budget.max_states);
        for (int64_t i = 0; i < count; ++i) {
            Poly cand = monic_at(ctx, d, i);
            bool all = true;
            for (const Poly& m : minors)
                if (!divides_monic(cand, m)) {
                    all = false;
                    break;
                }
            if (all) return cand;
        }
    }
    return std::nullopt;
}

/// All polynomial vectors v with entries of degree <= bound and v * G^T = 0,
/// in canonical enumeration order.
inline std::vector<std::vector<Poly>> brute_kernel(const PolyMatrix& g, int degree_bound,
                                                   const SearchBudget& budget = {}) {
    const RingContext& ctx = g.ctx();
    const int n = g.cols();
    const int len = degree_bound + 1;
    int64_t total = 1;
    for (int i = 0; i < n * len; ++i) {
        if (total > budget.max_states / ctx.modulus()) throw BudgetExceededError("kernel enumeration too large");
        total *= ctx.modulus();
    }
    std::vector<std::vector<Poly>> out;
    for (int64_t idx = 0; idx < total; ++idx) {
        int64_t rest = idx;
        std::vector<Poly> v;
        v.reserve(n);
        for (int e = 0; e < n; ++e) {
            std::vector<int64_t> c(len, 0);
            for (int a = 0; a < len; ++a) {
                c[a] = rest % ctx.modulus();
                rest /= ctx.modulus();
            }
            v.emplace_back(ctx, std::move(c));
        }
        bool ok = true;
        for (int i = 0; i < g.rows() && ok; ++i) {
            Poly acc = Poly::zero(ctx);
            for (int j = 0; j < n; ++j) acc = acc + v[j] * g.at(i, j);
            if (!acc.is_zero()) ok = false;
        }
        if (ok) out.push_back(std::move(v));
    }
    return out;
}

/// Signed permutation-sum (Leibniz) determinant; the independent twin of the
/// cofactor determinant.
inline Poly det_perm(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquareError("det_perm of non-square matrix");
    const int n = m.rows();
    if (n > 5) throw TooLargeError("det_perm limited to 5x5");
    if (n == 0) return Poly::one(m.ctx());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Poly acc = Poly::zero(m.ctx());
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Poly term = Poly::one(m.ctx());
        for (int i = 0; i < n; ++i) term = term * m.at(i, perm[i]);
        acc = (inversions % 2 == 0) ? acc + term : acc - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

/// Maximal-degree common monic divisor over F_p by descending exhaustive
/// search; agrees with the Euclidean GCD but shares no code with it.
inline Poly brute_gcd_fp(const std::vector<Poly>& fs, const SearchBudget& budget = {}) {
    int dmax = kNegInf;
    const RingContext& ctx = fs.front().ctx();
    for (const Poly& f : fs)
        if (!f.is_zero()) dmax = std::min(f.deg(), dmax == kNegInf ? f.deg() : dmax);
    if (dmax == kNegInf) throw AllZeroError("all inputs zero");
    if (dmax > budget.max_degree) throw BudgetExceededError("degree above oracle budget");
    for (int d = dmax; d >= 1; --d) {
        int64_t count = monic_count(ctx, d, budget.max_states);
        for (int64_t i = 0; i < count; ++i) {
            Poly cand = monic_at(ctx, d, i);
            bool all = true;
            for (const Poly& f : fs)
                if (!f.is_zero() && !divides_monic(cand, f)) {
                    all = false;
                    break;
                }
            if (all) return cand;
        }
    }
    return Poly::one(ctx);
}

/// Independent Massey-Sain catastrophicity verdict on the projection of an
/// encoder: catastrophic iff the brute-force minor GCD over F_p is not a
/// power of D.
inline bool massey_sain_catastrophic(const PolyMatrix& g, const SearchBudget& budget = {}) {
    PolyMatrix gbar = g.project();
    std::vector<Poly> minors;
    for (const auto& subset : column_subsets(gbar.cols(), gbar.rows())) {
        Poly m = det_perm(gbar.submatrix_cols(subset));
        if (!m.is_zero()) minors.push_back(m);
    }
    if (minors.empty()) throw NotFullRankError("projected matrix has rank deficiency");
    Poly gcd = brute_gcd_fp(minors, budget);
    if (gcd.deg() < 1) return false;
    for (int i = 0; i < gcd.deg(); ++i)
        if (gcd.coeff(i) != 0) return true;
    return false;
}

/// Exhaustive search for a polynomial inverse of f with deg <= bound.
inline std::optional<Poly> brute_poly_inverse(const Poly& f, int degree_bound, const SearchBudget& budget = {}) {
    const RingContext& ctx = f.ctx();
    int64_t total = 1;
    for (int i = 0; i <= degree_bound; ++i) {
        if (total > budget.max_states / ctx.modulus()) throw BudgetExceededError("inverse enumeration too large");
        total *= ctx.modulus();
    }
    for (int64_t idx = 0; idx < total; ++idx) {
        int64_t rest = idx;
        std::vector<int64_t> c(degree_bound + 1, 0);
        for (int a = 0; a <= degree_bound; ++a) {
            c[a] = rest % ctx.modulus();
            rest /= ctx.modulus();
        }
        Poly cand(ctx, std::move(c));
        if (f * cand == Poly::one(ctx)) return cand;
    }
    return std::nullopt;
}

/// Exhaustive zero-divisor search: some nonzero g of degree <= bound with
/// f * g = 0.
inline bool brute_is_zero_divisor(const Poly& f, int degree_bound, const SearchBudget& budget = {}) {
    const RingContext& ctx = f.ctx();
    int64_t total = 1;
    for (int i = 0; i <= degree_bound; ++i) {
        if (total > budget.max_states / ctx.modulus()) throw BudgetExceededError("zero-divisor enumeration too large");
        total *= ctx.modulus();
    }
    for (int64_t idx = 1; idx < total; ++idx) {
        int64_t rest = idx;
        std::vector<int64_t> c(degree_bound + 1, 0);
        for (int a = 0; a <= degree_bound; ++a) {
            c[a] = rest % ctx.modulus();
            rest /= ctx.modulus();
        }
        Poly cand(ctx, std::move(c));
        if (!cand.is_zero() && (f * cand).is_zero()) return true;
    }
    return false;
}

}  // namespace zprconv::oracle

#endif
