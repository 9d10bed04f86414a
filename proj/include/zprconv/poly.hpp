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

#ifndef ZPRCONV_POLY_HPP
#define ZPRCONV_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ring.hpp"

namespace zprconv {

/// Degree of the zero polynomial. A distinct sentinel, never -1, so that
/// degree arithmetic in intdeg cannot silently go wrong.
inline constexpr int kNegInf = std::numeric_limits<int>::min();

/// Dense polynomial over Z_{p^r} in the indeterminate D, stored as ascending
/// coefficients with no trailing zeros (canonical form). Polynomials over the
/// residue field F_p are the same type with an r = 1 context.
class Poly {
   public:
    explicit Poly(const RingContext& ctx) : ctx_(ctx) {}

    Poly(const RingContext& ctx, std::vector<int64_t> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
        for (auto& v : c_) v = ctx_.reduce(v);
        strip();
    }

    static Poly constant(const RingContext& ctx, int64_t v) { return Poly(ctx, {v}); }
    static Poly zero(const RingContext& ctx) { return Poly(ctx); }
    static Poly one(const RingContext& ctx) { return Poly(ctx, {1}); }
    /// The monomial c * D^d.
    static Poly monomial(const RingContext& ctx, int d, int64_t c = 1) {
        std::vector<int64_t> v(d + 1, 0);
        v[d] = c;
        return Poly(ctx, std::move(v));
    }

    const RingContext& ctx() const { return ctx_; }
    bool is_zero() const { return c_.empty(); }
    int deg() const { return c_.empty() ? kNegInf : static_cast<int>(c_.size()) - 1; }
    int64_t coeff(int i) const { return (i < 0 || i >= static_cast<int>(c_.size())) ? 0 : c_[i]; }
    int64_t lc() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<int64_t>& coeffs() const { return c_; }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_constant() const { return c_.size() <= 1; }

    bool operator==(const Poly& o) const { return ctx_ == o.ctx_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const {
        check_ctx(o);
        std::vector<int64_t> v(std::max(c_.size(), o.c_.size()), 0);
        for (size_t i = 0; i < v.size(); ++i) v[i] = ctx_.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
        return Poly(ctx_, std::move(v));
    }
    Poly operator-(const Poly& o) const {
        check_ctx(o);
        std::vector<int64_t> v(std::max(c_.size(), o.c_.size()), 0);
        for (size_t i = 0; i < v.size(); ++i) v[i] = ctx_.sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
        return Poly(ctx_, std::move(v));
    }
    Poly operator-() const {
        std::vector<int64_t> v(c_);
        for (auto& x : v) x = ctx_.neg(x);
        return Poly(ctx_, std::move(v));
    }
    Poly operator*(const Poly& o) const {
        check_ctx(o);
        if (is_zero() || o.is_zero()) return Poly(ctx_);
        std::vector<int64_t> v(c_.size() + o.c_.size() - 1, 0);
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] = ctx_.add(v[i + j], ctx_.mul(c_[i], o.c_[j]));
        return Poly(ctx_, std::move(v));
    }

    Poly scaled(int64_t s) const {
        std::vector<int64_t> v(c_);
        for (auto& x : v) x = ctx_.mul(x, s);
        return Poly(ctx_, std::move(v));
    }

    /// Multiply by D^s.
    Poly shifted(int s) const {
        if (is_zero()) return *this;
        std::vector<int64_t> v(c_.size() + s, 0);
        std::copy(c_.begin(), c_.end(), v.begin() + s);
        return Poly(ctx_, std::move(v));
    }

    /// Coefficientwise reduction mod p onto F_p[D].
    Poly project() const {
        RingContext fp = ctx_.residue_field();
        std::vector<int64_t> v(c_);
        return Poly(fp, std::move(v));
    }

    /// Canonical text form: ascending coefficients joined by commas; "0" for zero.
    std::string to_text() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ',';
            os << c_[i];
        }
        return os.str();
    }

    void check_ctx(const Poly& o) const {
        if (ctx_ != o.ctx_) throw ContextMismatchError("polynomial contexts differ");
    }

   private:
    RingContext ctx_;
    std::vector<int64_t> c_;

    void strip() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

/// f is a zero divisor of Z_{p^r}[D] exactly when all its coefficients are
/// divisible by p (then p^{r-1} annihilates it); regular means the projection
/// onto F_p[D] is nonzero.
inline bool is_regular(const Poly& f) { return !f.project().is_zero(); }

/// Invertible element of Z_{p^r}[D]: unit constant term, all higher
/// coefficients divisible by p.
inline bool is_unit_poly(const Poly& f) {
    if (f.is_zero()) return false;
    if (!f.ctx().is_unit(f.coeff(0))) return false;
    for (int i = 1; i <= f.deg(); ++i)
        if (f.coeff(i) % f.ctx().p() != 0) return false;
    return true;
}

/// Division with remainder by a monic divisor; well defined over any
/// commutative ring. Returns (quotient, remainder) with deg rem < deg m.
inline std::pair<Poly, Poly> divrem_monic(const Poly& f, const Poly& m) {
    f.check_ctx(m);
    if (!m.is_monic()) throw NotMonicError("divisor is not monic");
    const RingContext& ctx = f.ctx();
    int dm = m.deg();
    std::vector<int64_t> rem(f.coeffs());
    int dr = f.deg();
    if (dr < dm) return {Poly(ctx), f};
    std::vector<int64_t> q(dr - dm + 1, 0);
    for (int i = dr; i >= dm; --i) {
        int64_t c = rem[i];
        if (c == 0) continue;
        q[i - dm] = c;
        for (int j = 0; j <= dm; ++j) rem[i - dm + j] = ctx.sub(rem[i - dm + j], ctx.mul(c, m.coeff(j)));
    }
    return {Poly(ctx, std::move(q)), Poly(ctx, std::move(rem))};
}

inline bool divides_monic(const Poly& m, const Poly& f) { return divrem_monic(f, m).second.is_zero(); }

/// Inverse of a unit polynomial, itself a polynomial: with u = c(1 + m) and
/// m nilpotent (coefficients in (p)), u^{-1} = c^{-1} sum_{j<r} (-m)^j.
inline Poly unit_poly_inverse(const Poly& u) {
    if (!is_unit_poly(u)) throw NotUnitError("polynomial is not a unit of Z_{p^r}[D]");
    const RingContext& ctx = u.ctx();
    int64_t c0inv = ctx.inv(u.coeff(0));
    Poly m = u.scaled(c0inv) - Poly::one(ctx);
    Poly acc = Poly::one(ctx);
    Poly pow = Poly::one(ctx);
    for (int j = 1; j < ctx.r(); ++j) {
        pow = pow * (-m);
        acc = acc + pow;
    }
    Poly inv = acc.scaled(c0inv);
    if (!(u * inv == Poly::one(ctx))) throw VerificationFailedError("unit polynomial inverse check failed");
    return inv;
}

// ---------------------------------------------------------------------------
// Field operations (contexts with r == 1)
// ---------------------------------------------------------------------------

namespace detail {
inline void require_field(const Poly& f) {
    if (f.ctx().r() != 1) throw PreconditionError("operation requires an F_p context (r = 1)");
}
}  // namespace detail

inline std::pair<Poly, Poly> divrem_field(const Poly& f, const Poly& g) {
    detail::require_field(f);
    f.check_ctx(g);
    if (g.is_zero()) throw ZeroInputError("division by zero polynomial");
    int64_t lcinv = f.ctx().inv(g.lc());
    Poly gm = g.scaled(lcinv);
    auto [q, rem] = divrem_monic(f, gm);
    return {q.scaled(lcinv), rem};
}

inline Poly make_monic_fp(const Poly& f) {
    detail::require_field(f);
    if (f.is_zero()) return f;
    return f.scaled(f.ctx().inv(f.lc()));
}

inline Poly gcd_fp(const Poly& a, const Poly& b) {
    detail::require_field(a);
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly rem = divrem_field(x, y).second;
        x = y;
        y = rem;
    }
    return make_monic_fp(x);
}

/// Monic GCD of a list, folded with Euclid; zero entries are skipped.
inline Poly gcd_fp(const std::vector<Poly>& fs) {
    if (fs.empty()) throw AllZeroError("gcd of empty list");
    Poly g = Poly::zero(fs.front().ctx());
    for (const Poly& f : fs) g = gcd_fp(g, f);
    if (g.is_zero()) throw AllZeroError("gcd of all-zero list");
    return g;
}

/// Extended Euclid over F_p[D]: returns (g, x, y) with x*a + y*b = g, g monic.
inline std::tuple<Poly, Poly, Poly> xgcd_fp(const Poly& a, const Poly& b) {
    detail::require_field(a);
    a.check_ctx(b);
    const RingContext& ctx = a.ctx();
    Poly r0 = a, r1 = b;
    Poly x0 = Poly::one(ctx), x1 = Poly::zero(ctx);
    Poly y0 = Poly::zero(ctx), y1 = Poly::one(ctx);
    while (!r1.is_zero()) {
        auto [q, rem] = divrem_field(r0, r1);
        r0 = r1;
        r1 = rem;
        Poly nx = x0 - q * x1;
        x0 = x1;
        x1 = nx;
        Poly ny = y0 - q * y1;
        y0 = y1;
        y1 = ny;
    }
    if (r0.is_zero()) return {r0, x0, y0};
    int64_t s = ctx.inv(r0.lc());
    return {r0.scaled(s), x0.scaled(s), y0.scaled(s)};
}

// ---------------------------------------------------------------------------
// Canonical enumeration of polynomials
// ---------------------------------------------------------------------------

/// Number of monic polynomials of degree exactly d: modulus^d.
inline int64_t monic_count(const RingContext& ctx, int d, int64_t cap = int64_t{1} << 62) {
    int64_t n = 1;
    for (int i = 0; i < d; ++i) {
        if (n > cap / ctx.modulus()) throw SearchBudgetExceededError("monic enumeration too large");
        n *= ctx.modulus();
    }
    return n;
}

inline int64_t ipow(int64_t b, int e) {
    int64_t n = 1;
    while (e-- > 0) n *= b;
    return n;
}

/// idx-th monic polynomial of degree d in canonical order: coefficient tuples
/// (c_0, ..., c_{d-1}) lexicographic from the constant term.
inline Poly monic_at(const RingContext& ctx, int d, int64_t idx) {
    std::vector<int64_t> c(d + 1, 0);
    c[d] = 1;
    for (int i = d - 1; i >= 0; --i) {
        c[d - 1 - i] = (idx / ipow(ctx.modulus(), i)) % ctx.modulus();
    }
    return Poly(ctx, std::move(c));
}

/// Trial-division factorization into monic irreducibles (with multiplicity),
/// enumerating candidate divisors in increasing degree. Desk-scale degrees
/// make anything cleverer unnecessary.
inline std::vector<Poly> factor_fp(const Poly& f) {
    detail::require_field(f);
    if (f.is_zero()) throw ZeroInputError("cannot factor the zero polynomial");
    if (!f.is_monic()) throw NotMonicError("factor_fp expects a monic input");
    std::vector<Poly> out;
    Poly rest = f;
    for (int d = 1; rest.deg() >= 1 && 2 * d <= rest.deg(); ++d) {
        int64_t count = monic_count(rest.ctx(), d);
        for (int64_t i = 0; i < count; ++i) {
            Poly cand = monic_at(rest.ctx(), d, i);
            while (rest.deg() >= d && divides_monic(cand, rest)) {
                out.push_back(cand);
                rest = divrem_monic(rest, cand).first;
            }
            if (2 * d > rest.deg()) break;
        }
    }
    if (rest.deg() >= 1) out.push_back(rest);
    return out;
}

/// Weierstrass-preparation style splitting of a regular polynomial into
/// (monic P1) * (unit polynomial P2), refined p-adically layer by layer and
/// checked exactly at the end.
inline std::pair<Poly, Poly> monic_unit_split(const Poly& f) {
    if (!is_regular(f)) throw NotRegularError("monic_unit_split requires a regular polynomial");
    const RingContext& ctx = f.ctx();
    const int64_t p = ctx.p();
    Poly fbar = f.project();
    RingContext fpctx = fbar.ctx();
    int d = fbar.deg();
    int64_t cbar = fbar.lc();

    auto lift = [&](const Poly& g) { return Poly(ctx, g.coeffs()); };

    Poly p1 = lift(fbar.scaled(fpctx.inv(cbar)));
    Poly p2 = Poly::constant(ctx, cbar);
    Poly p1bar = p1.project();

    int64_t pj = 1;
    for (int j = 1; j < ctx.r(); ++j) {
        pj *= p;
        Poly e = f - p1 * p2;
        if (e.is_zero()) break;
        std::vector<int64_t> g(e.deg() + 1, 0);
        for (int i = 0; i <= e.deg(); ++i) {
            if (e.coeff(i) % pj != 0) throw VerificationFailedError("monic_unit_split: lift layer not divisible");
            g[i] = e.coeff(i) / pj;
        }
        Poly gbar = Poly(fpctx, std::move(g));
        auto [b, rem] = divrem_monic(gbar, p1bar);
        Poly a = rem.scaled(fpctx.inv(cbar));
        p1 = p1 + lift(a).scaled(pj);
        p2 = p2 + lift(b).scaled(pj);
    }
    if (!(p1 * p2 == f)) throw VerificationFailedError("monic_unit_split: product check failed");
    return {p1, p2};
}

}  // namespace zprconv

#endif
