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

#ifndef ZPRCONV_RIDM_HPP
#define ZPRCONV_RIDM_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "poly.hpp"

namespace zprconv {

/// States an annihilator/divisor search may visit before aborting.
inline constexpr int64_t kSearchStateBudget = 10'000'000;

/// Internal degree: maximum degree over the nonzero k x k minors.
inline int intdeg(const PolyMatrix& g) {
    if (!is_full_row_rank(g)) throw NotFullRankError("intdeg requires a full-row-rank matrix");
    return max_minor_degree(maximal_minors(g));
}

/// Search for a monic common divisor of degree >= 1 of all maximal minors.
/// Returns the minimal-degree, lexicographically least one, or nullopt.
///
/// Completeness: any non-unit common divisor has a monic associate (via the
/// monic x unit splitting) whose projection divides the F_p GCD of the
/// projected nonzero minors and has the same degree, so searching monic lifts
/// of the divisors of that GCD is exhaustive.
namespace detail {

/// F_p GCD of the projected nonzero minors; bounds the divisor search.
inline Poly projected_minor_gcd(const MinorSet& ms) {
    if (ms.minors.empty()) throw NoRegularMinorError("empty minor set");
    std::vector<Poly> projected;
    for (const Poly& m : ms.minors) {
        Poly mbar = m.project();
        if (!mbar.is_zero()) projected.push_back(mbar);
    }
    if (projected.empty()) throw NoRegularMinorError("no regular minor");
    return gcd_fp(projected);
}

/// Monic lifts of the degree-d divisors of gbar, in coefficient-lex order.
/// With require_divides_minors, only lifts dividing every maximal minor are
/// kept (the common-divisor candidates of the classic reduction step).
inline std::vector<Poly> divisor_candidates_of_degree(const MinorSet& ms, const Poly& gbar, int d,
                                                      bool require_divides_minors = true) {
    const RingContext& ctx = ms.minors.front().ctx();
    RingContext fp = ctx.residue_field();
    std::vector<Poly> candidates;
    int64_t lifts_per = ipow(ctx.p(), ctx.r() - 1);  // choices per coefficient below the leading 1
    int64_t fp_count = monic_count(fp, d);
    for (int64_t i = 0; i < fp_count; ++i) {
        Poly qbar = monic_at(fp, d, i);
        if (!divides_monic(qbar, gbar)) continue;
        int64_t total = 1;
        for (int a = 0; a < d; ++a) {
            if (total > kSearchStateBudget / lifts_per) throw SearchBudgetExceededError("divisor lift space too large");
            total *= lifts_per;
        }
        for (int64_t idx = 0; idx < total; ++idx) {
            std::vector<int64_t> c(d + 1, 0);
            c[d] = 1;
            int64_t rest = idx;
            for (int a = 0; a < d; ++a) {
                c[a] = qbar.coeff(a) + ctx.p() * (rest % lifts_per);
                rest /= lifts_per;
            }
            candidates.emplace_back(ctx, std::move(c));
        }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Poly& a, const Poly& b) { return a.coeffs() < b.coeffs(); });
    if (!require_divides_minors) return candidates;
    std::vector<Poly> out;
    for (Poly& q : candidates) {
        bool all = true;
        for (const Poly& m : ms.minors)
            if (!divides_monic(q, m)) {
                all = false;
                break;
            }
        if (all) out.push_back(std::move(q));
    }
    return out;
}

}  // namespace detail

inline std::optional<Poly> find_common_divisor(const MinorSet& ms) {
    Poly gbar = detail::projected_minor_gcd(ms);
    for (int d = 1; d <= gbar.deg(); ++d) {
        std::vector<Poly> cands = detail::divisor_candidates_of_degree(ms, gbar, d);
        if (!cands.empty()) return cands.front();
    }
    return std::nullopt;
}

/// Operational RIDM test: no non-unit monic common divisor of the maximal
/// minors exists.
inline bool is_ridm(const PolyMatrix& g) {
    if (!is_full_row_rank(g)) throw NotFullRankError("is_ridm requires a full-row-rank matrix");
    return !find_common_divisor(maximal_minors(g)).has_value();
}

namespace detail {

/// Diagonalization of a matrix over Z_{p^r} by row/column operations, with
/// pivots normalized to powers of p. Column operations are accumulated into
/// `v` so that kernel generators of the original matrix can be read off the
/// diagonal p-exponents.
struct ZprDiagonalization {
    std::vector<std::vector<int64_t>> v;  // N x N transform, x = v * y
    std::vector<int> exponents;           // exponent of column t; >= r means the direction is free
};

inline int p_valuation(int64_t a, int64_t p, int r) {
    if (a == 0) return r;
    int e = 0;
    while (a % p == 0 && e < r) {
        a /= p;
        ++e;
    }
    return e;
}

inline ZprDiagonalization diagonalize_zpr(std::vector<std::vector<int64_t>> a, const RingContext& ctx) {
    const int64_t mod = ctx.modulus();
    const int64_t p = ctx.p();
    const int r = ctx.r();
    int m = static_cast<int>(a.size());
    int n = m ? static_cast<int>(a.front().size()) : 0;

    ZprDiagonalization out;
    out.v.assign(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i) out.v[i][i] = 1;
    out.exponents.assign(n, r);

    int step = 0;
    while (step < std::min(m, n)) {
        int bi = -1, bj = -1, be = r;
        for (int i = step; i < m; ++i)
            for (int j = step; j < n; ++j) {
                int e = p_valuation(a[i][j], p, r);
                if (e < be) {
                    be = e;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) break;  // remaining block is zero; all remaining columns free

        std::swap(a[bi], a[step]);
        if (bj != step) {
            for (int i = 0; i < m; ++i) std::swap(a[i][bj], a[i][step]);
            for (int i = 0; i < n; ++i) std::swap(out.v[i][bj], out.v[i][step]);
        }
        int64_t pe = 1;
        for (int i = 0; i < be; ++i) pe *= p;
        int64_t unit = a[step][step] / pe;
        int64_t uinv = ctx.inv(unit);
        for (int j = step; j < n; ++j) a[step][j] = ctx.mul(a[step][j], uinv);

        for (int i = step + 1; i < m; ++i) {
            if (a[i][step] == 0) continue;
            int64_t f = a[i][step] / pe;
            for (int j = step; j < n; ++j) a[i][j] = ctx.sub(a[i][j], ctx.mul(f, a[step][j]));
        }
        for (int j = step + 1; j < n; ++j) {
            if (a[step][j] == 0) continue;
            int64_t f = a[step][j] / pe;
            for (int i = 0; i < m; ++i) a[i][j] = ctx.sub(a[i][j], ctx.mul(f, a[i][step]));
            for (int i = 0; i < n; ++i) out.v[i][j] = ctx.sub(out.v[i][j], ctx.mul(f, out.v[i][step]));
        }
        out.exponents[step] = be;
        ++step;
    }
    return out;
}

}  // namespace detail

/// Find a row vector t with t*G = 0 (mod Q) entrywise and primitive
/// projection (F_p GCD of the projected entries equal to 1). The kernel of
/// the linear system over Z_{p^r} is parametrized exactly via a p-power
/// diagonalization; primitivity only depends on the mod-p part, so only the
/// free kernel directions are enumerated.
inline std::vector<Poly> row_annihilator(const PolyMatrix& g, const Poly& q) {
    if (!q.is_monic() || q.deg() < 1) throw NotMonicError("annihilator divisor must be monic of degree >= 1");
    const RingContext& ctx = g.ctx();
    RingContext fp = ctx.residue_field();
    const int k = g.rows();
    const int n = g.cols();
    const int dq = q.deg();

    for (int bound = dq; bound <= 3 * dq; bound += dq) {
        const int ncols = k * bound;
        const int nrows = n * dq;
        std::vector<std::vector<int64_t>> a(nrows, std::vector<int64_t>(ncols, 0));
        for (int i = 0; i < k; ++i)
            for (int deg = 0; deg < bound; ++deg)
                for (int j = 0; j < n; ++j) {
                    Poly col = divrem_monic(g.at(i, j).shifted(deg), q).second;
                    for (int c = 0; c < dq; ++c) a[j * dq + c][i * bound + deg] = col.coeff(c);
                }

        detail::ZprDiagonalization diag = detail::diagonalize_zpr(std::move(a), ctx);
        std::vector<int> free_cols;
        for (int t = 0; t < ncols; ++t)
            if (diag.exponents[t] >= ctx.r()) free_cols.push_back(t);
        if (free_cols.empty()) continue;

        // Every enumerated projection is an F_p combination of the free kernel
        // generators, so a common factor across all their projected entries
        // rules out a primitive element without enumerating.
        {
            std::vector<Poly> gen_proj;
            for (int fc : free_cols)
                for (int i = 0; i < k; ++i) {
                    std::vector<int64_t> c(bound);
                    for (int d = 0; d < bound; ++d) c[d] = diag.v[i * bound + d][fc];
                    Poly eb = Poly(ctx, std::move(c)).project();
                    if (!eb.is_zero()) gen_proj.push_back(eb);
                }
            if (gen_proj.empty() || gcd_fp(gen_proj).deg() != 0) continue;
        }

        int64_t combos = 1;
        for (size_t i = 0; i < free_cols.size(); ++i) {
            if (combos > kSearchStateBudget / ctx.p()) throw SearchBudgetExceededError("annihilator search space too large");
            combos *= ctx.p();
        }

        for (int64_t idx = 1; idx < combos; ++idx) {
            std::vector<int64_t> x(ncols, 0);
            int64_t rest = idx;
            for (int fc : free_cols) {
                int64_t c = rest % ctx.p();
                rest /= ctx.p();
                if (c == 0) continue;
                for (int row = 0; row < ncols; ++row) x[row] = ctx.add(x[row], ctx.mul(c, diag.v[row][fc]));
            }
            std::vector<Poly> t;
            t.reserve(k);
            for (int i = 0; i < k; ++i)
                t.emplace_back(ctx, std::vector<int64_t>(x.begin() + i * bound, x.begin() + (i + 1) * bound));
            std::vector<Poly> proj;
            for (const Poly& e : t) {
                Poly eb = e.project();
                if (!eb.is_zero()) proj.push_back(eb);
            }
            if (proj.empty()) continue;
            if (gcd_fp(proj).deg() != 0) continue;
            // primitive; confirm annihilation exactly
            bool ok = true;
            for (int j = 0; j < n && ok; ++j) {
                Poly acc = Poly::zero(ctx);
                for (int i = 0; i < k; ++i) acc = acc + t[i] * g.at(i, j);
                if (!divides_monic(q, acc)) ok = false;
            }
            if (!ok) throw VerificationFailedError("kernel element failed exact annihilation check");
            return t;
        }
    }
    throw GuaranteeViolatedError("no primitive annihilator found; the row-annihilator guarantee fails on this instance",
                                 "Q=" + q.to_text() + "\n" + g.to_text());
}

/// Weaker relative of row_annihilator used by the fallback reduction step:
/// find t with t*G = 0 (mod Q) entrywise whose entries have degree < deg Q
/// and at least one regular entry. Returns t and the index of its first
/// regular entry, or nullopt. Unlike the primitive search this never needs
/// enumeration: every achievable projection is an F_p combination of the free
/// kernel generators, so a regular entry exists iff some generator has one.
inline std::optional<std::pair<std::vector<Poly>, int>> regular_annihilator(const PolyMatrix& g, const Poly& q) {
    if (!q.is_monic() || q.deg() < 1) throw NotMonicError("annihilator divisor must be monic of degree >= 1");
    const RingContext& ctx = g.ctx();
    const int k = g.rows();
    const int n = g.cols();
    const int dq = q.deg();

    const int bound = dq;
    const int ncols = k * bound;
    const int nrows = n * dq;
    std::vector<std::vector<int64_t>> a(nrows, std::vector<int64_t>(ncols, 0));
    for (int i = 0; i < k; ++i)
        for (int deg = 0; deg < bound; ++deg)
            for (int j = 0; j < n; ++j) {
                Poly col = divrem_monic(g.at(i, j).shifted(deg), q).second;
                for (int c = 0; c < dq; ++c) a[j * dq + c][i * bound + deg] = col.coeff(c);
            }

    detail::ZprDiagonalization diag = detail::diagonalize_zpr(std::move(a), ctx);
    for (int fc = 0; fc < ncols; ++fc) {
        if (diag.exponents[fc] < ctx.r()) continue;
        std::vector<Poly> t;
        t.reserve(k);
        int regular_at = -1;
        for (int i = 0; i < k; ++i) {
            std::vector<int64_t> c(bound);
            for (int d = 0; d < bound; ++d) c[d] = diag.v[i * bound + d][fc];
            t.emplace_back(ctx, std::move(c));
            if (regular_at < 0 && !t.back().project().is_zero()) regular_at = i;
        }
        if (regular_at < 0) continue;
        for (int j = 0; j < n; ++j) {
            Poly acc = Poly::zero(ctx);
            for (int i = 0; i < k; ++i) acc = acc + t[i] * g.at(i, j);
            if (!divides_monic(q, acc)) throw VerificationFailedError("kernel element failed exact annihilation check");
        }
        return std::pair(std::move(t), regular_at);
    }
    return std::nullopt;
}

namespace detail {

inline PolyMatrix adjugate(const PolyMatrix& m) {
    int n = m.rows();
    PolyMatrix adj(m.ctx(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            PolyMatrix minor(m.ctx(), n - 1, n - 1);
            int ri = 0;
            for (int a = 0; a < n; ++a) {
                if (a == i) continue;
                int cj = 0;
                for (int b = 0; b < n; ++b) {
                    if (b == j) continue;
                    minor.at(ri, cj++) = m.at(a, b);
                }
                ++ri;
            }
            Poly cof = det(minor);
            adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    return adj;
}

}  // namespace detail

/// Complete a primitive row vector to a unimodular matrix with that vector as
/// its first row. The projection is completed over the PID F_p[D] by extended
/// GCD column reduction; the remaining rows are lifted coefficientwise. The
/// determinant is then normalized to a unit constant by rescaling one of the
/// completion rows, so left-multiplication never shifts minor degrees.
inline PolyMatrix complete_to_unimodular(const std::vector<Poly>& t) {
    if (t.empty()) throw BadShapeError("empty vector");
    const RingContext& ctx = t.front().ctx();
    const int k = static_cast<int>(t.size());

    std::vector<Poly> proj;
    for (const Poly& e : t) {
        Poly eb = e.project();
        if (!eb.is_zero()) proj.push_back(eb);
    }
    if (proj.empty() || gcd_fp(proj).deg() != 0)
        throw NotPrimitiveError("projected entries must have GCD 1");

    if (k == 1) {
        PolyMatrix m(ctx, 1, 1);
        m.at(0, 0) = t[0];
        if (!is_unimodular(m)) throw NotPrimitiveError("1x1 completion requires a unit polynomial");
        return m;
    }

    RingContext fp = ctx.residue_field();
    std::vector<Poly> w;
    for (const Poly& e : t) w.push_back(e.project());
    PolyMatrix v = PolyMatrix::identity(fp, k);

    auto col_swap = [&](int a, int b) {
        for (int i = 0; i < k; ++i) std::swap(v.at(i, a), v.at(i, b));
        std::swap(w[a], w[b]);
    };
    for (int j = 1; j < k; ++j) {
        if (w[j].is_zero()) continue;
        if (w[0].is_zero()) {
            col_swap(0, j);
            continue;
        }
        auto [gg, x, y] = xgcd_fp(w[0], w[j]);
        Poly a_over = divrem_field(w[0], gg).first;
        Poly b_over = divrem_field(w[j], gg).first;
        for (int i = 0; i < k; ++i) {
            Poly c0 = v.at(i, 0), cj = v.at(i, j);
            v.at(i, 0) = x * c0 + y * cj;
            v.at(i, j) = a_over * cj - b_over * c0;
        }
        w[0] = gg;
        w[j] = Poly::zero(fp);
    }
    // primitive input means the surviving entry is a nonzero constant
    if (w[0].deg() != 0) throw NotPrimitiveError("column reduction did not reach a constant");
    int64_t winv = fp.inv(w[0].coeff(0));
    for (int i = 0; i < k; ++i) v.at(i, 0) = v.at(i, 0).scaled(winv);

    Poly dv = det(v);
    if (dv.deg() != 0) throw VerificationFailedError("completion transform is not unimodular over F_p[D]");
    PolyMatrix vinv = detail::adjugate(v);
    int64_t dinv = fp.inv(dv.coeff(0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) vinv.at(i, j) = vinv.at(i, j).scaled(dinv);
    for (int j = 0; j < k; ++j)
        if (!(vinv.at(0, j) == t[j].project())) throw VerificationFailedError("completion row mismatch");

    PolyMatrix out(ctx, k, k);
    for (int j = 0; j < k; ++j) out.at(0, j) = t[j];
    for (int i = 1; i < k; ++i)
        for (int j = 0; j < k; ++j) out.at(i, j) = Poly(ctx, vinv.at(i, j).coeffs());

    Poly d = det(out);
    if (!is_unit_poly(d)) throw VerificationFailedError("lifted completion is not unimodular");
    if (d.deg() > 0) out.row_scale_by_unit(1, unit_poly_inverse(d).scaled(d.coeff(0)));
    if (!det(out).is_constant()) throw VerificationFailedError("determinant normalization failed");
    return out;
}

/// One step of the reduction: the divisor used, the unimodular transform, the
/// row that was divided, and the internal degree before and after.
struct RidmStep {
    Poly q;
    PolyMatrix transform;
    int row = 0;
    int intdeg_before = 0;
    int intdeg_after = 0;
};

struct RidmTrace {
    std::vector<RidmStep> steps;

    std::string to_text() const {
        std::string s;
        for (const RidmStep& st : steps) {
            s += "Q=" + st.q.to_text() + " row=" + std::to_string(st.row) + " intdeg " +
                 std::to_string(st.intdeg_before) + "->" + std::to_string(st.intdeg_after) + "\n";
            s += st.transform.to_text();
        }
        return s;
    }
};

struct RidmResult {
    PolyMatrix matrix;
    RidmTrace trace;
};

/// Transform a full-row-rank matrix into an equivalent matrix of minimal
/// reachable internal degree. The classic step finds a monic common divisor Q
/// of the maximal minors, moves a Q-divisible combination into row 0 by a
/// unimodular transform, and divides that row by Q, lowering the internal
/// degree by exactly deg Q. When no common divisor admits a primitive
/// annihilating row, a fallback step replaces row i by (t*G)/Q for an
/// annihilator t whose entry t_i is regular: the transform's determinant is
/// t_i, still invertible over the total quotient ring, and the internal
/// degree drops by deg Q - deg t_i >= 1. The fallback also fires on matrices
/// whose minors have no common divisor but whose internal degree is not yet
/// minimal (the divisor Q then divides t_i times every minor instead).
inline RidmResult ridm_reduce(const PolyMatrix& g) {
    if (!is_full_row_rank(g)) throw NotFullRankError("ridm_reduce requires a full-row-rank matrix");
    RidmResult res{g, {}};
    const RingContext& ctx = g.ctx();
    const int max_steps = intdeg(g) + 1;
    for (int step = 0; step < max_steps; ++step) {
        MinorSet ms = maximal_minors(res.matrix);
        int before = max_minor_degree(ms);
        Poly gbar = detail::projected_minor_gcd(ms);

        // Stage 1: the classic step. Some common divisors admit no primitive
        // annihilating row even though another monic divisor of the same
        // degree does, so scan candidates in canonical order (degree
        // ascending, then coefficient-lex) and take the first that yields one.
        std::optional<Poly> q;
        std::vector<Poly> t;
        bool any_candidate = false;
        for (int d = 1; d <= gbar.deg() && !q; ++d) {
            for (const Poly& cand : detail::divisor_candidates_of_degree(ms, gbar, d)) {
                any_candidate = true;
                if (res.matrix.rows() == 1) {
                    q = cand;
                    t.assign(1, Poly::one(ctx));
                    break;
                }
                try {
                    t = row_annihilator(res.matrix, cand);
                    q = cand;
                    break;
                } catch (const GuaranteeViolatedError&) {
                }
            }
        }
        if (q) {
            PolyMatrix transform = complete_to_unimodular(t);
            PolyMatrix next = mat_mul(transform, res.matrix);
            for (int j = 0; j < next.cols(); ++j) {
                auto [quot, rem] = divrem_monic(next.at(0, j), *q);
                if (!rem.is_zero()) throw VerificationFailedError("row division by Q left a remainder");
                next.at(0, j) = quot;
            }
            int after = max_minor_degree(maximal_minors(next));
            if (after != before - q->deg())
                throw VerificationFailedError("internal degree did not drop by deg Q");
            res.trace.steps.push_back({*q, transform, 0, before, after});
            res.matrix = next;
            continue;
        }

        // Stage 2: the fallback step, scanning all monic lifts of divisors of
        // the projected minor GCD in the same canonical order.
        bool stepped = false;
        for (int d = 1; d <= gbar.deg() && !stepped; ++d) {
            for (const Poly& cand : detail::divisor_candidates_of_degree(ms, gbar, d, /*require_divides_minors=*/false)) {
                auto ra = regular_annihilator(res.matrix, cand);
                if (!ra) continue;
                const auto& [tv, row] = *ra;
                PolyMatrix transform = PolyMatrix::identity(ctx, res.matrix.rows());
                for (int j = 0; j < res.matrix.rows(); ++j) transform.at(row, j) = tv[j];
                PolyMatrix next = mat_mul(transform, res.matrix);
                for (int j = 0; j < next.cols(); ++j) {
                    auto [quot, rem] = divrem_monic(next.at(row, j), cand);
                    if (!rem.is_zero()) throw VerificationFailedError("row division by Q left a remainder");
                    next.at(row, j) = quot;
                }
                if (!is_full_row_rank(next)) throw VerificationFailedError("fallback step lost row rank");
                int after = max_minor_degree(maximal_minors(next));
                if (after >= before) throw VerificationFailedError("fallback step did not lower the internal degree");
                res.trace.steps.push_back({cand, transform, row, before, after});
                res.matrix = next;
                stepped = true;
                break;
            }
        }
        if (stepped) continue;

        if (any_candidate)
            throw GuaranteeViolatedError("no divisor admits an annihilating row with a regular entry",
                                         res.matrix.to_text());
        return res;
    }
    throw VerificationFailedError("RIDM reduction failed to terminate within intdeg steps");
}

}  // namespace zprconv

#endif
