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

#ifndef ZPRCONV_RATIONAL_HPP
#define ZPRCONV_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "poly.hpp"

namespace zprconv {

/// Element of the total quotient ring Z_{p^r}(D): a fraction of polynomials
/// whose denominator is regular. Denominators are kept monic (the unit part
/// of the monic x unit splitting is folded into the numerator). Fractions are
/// not reduced to lowest terms; equality is cross-multiplication.
class Rational {
   public:
    explicit Rational(const Poly& num) : num_(num), den_(Poly::one(num.ctx())) {}

    Rational(const Poly& num, const Poly& den) : num_(num), den_(den) {
        num.check_ctx(den);
        if (!is_regular(den)) throw NotRegularError("denominator must be regular");
        normalize();
    }

    static Rational zero(const RingContext& ctx) { return Rational(Poly::zero(ctx)); }
    static Rational one(const RingContext& ctx) { return Rational(Poly::one(ctx)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const RingContext& ctx() const { return num_.ctx(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_ == Poly::one(ctx()); }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator-() const { return Rational(-num_, den_); }
    Rational operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }

    /// Equality in the total quotient ring: a/b = c/d iff a*d = c*b.
    bool operator==(const Rational& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    std::string to_text() const {
        if (is_poly()) return num_.to_text();
        return num_.to_text() + " / " + den_.to_text();
    }

   private:
    Poly num_, den_;

    void normalize() {
        auto [monic, unit] = monic_unit_split(den_);
        den_ = monic;
        if (!(unit == Poly::one(ctx()))) num_ = num_ * unit_poly_inverse(unit);
        // opportunistic cancellation; Z_{p^r}[D] has no GCDs, so this is
        // best-effort only and equality never relies on it
        if (!num_.is_zero() && den_.deg() >= 1) {
            auto [q, rem] = divrem_monic(num_, den_);
            if (rem.is_zero()) {
                num_ = q;
                den_ = Poly::one(ctx());
            }
        }
    }
};

/// A window [start, start + coeffs.size()) of the unique Laurent-series
/// expansion of some rational element.
struct LaurentWindow {
    int start = 0;
    std::vector<int64_t> coeffs;

    int64_t at(int e) const {
        int i = e - start;
        return (i < 0 || i >= static_cast<int>(coeffs.size())) ? 0 : coeffs[i];
    }
    std::string to_text() const {
        std::string s;
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            if (!s.empty()) s += "  ";
            s += "D^" + std::to_string(start + static_cast<int>(i)) + ": " + std::to_string(coeffs[i]);
        }
        return s.empty() ? "(all zero on window)" : s;
    }
};

/// Exact finite/infinite Hamming-weight classification of a rational series,
/// carrying an algebraically verified certificate either way.
struct WeightClassification {
    bool finite = false;
    // finite case: the Laurent polynomial itself and its weight
    LaurentWindow laurent_polynomial;
    int weight = 0;
    // infinite case: eventually-periodic certificate
    int preperiod = 0;  // absolute exponent at which the periodic block starts
    int period = 0;
    std::vector<int64_t> periodic_block;
};

namespace detail {

/// Truncated Laurent series used internally for expansion and Hensel lifting.
/// `lo` is a lower bound for the support; coefficients at exponents below
/// `valid_hi` are exact. Multiplication tracks how much validity survives.
struct Series {
    static constexpr long long kInfValid = int64_t{1} << 60;

    int64_t modulus = 2;
    long long lo = 0;
    long long valid_hi = kInfValid;
    std::vector<int64_t> c;  // exponent lo + i

    int64_t at(long long e) const {
        long long i = e - lo;
        return (i < 0 || i >= static_cast<long long>(c.size())) ? 0 : c[i];
    }

    void tighten() {
        size_t lead = 0;
        while (lead < c.size() && c[lead] == 0) ++lead;
        if (lead > 0) {
            c.erase(c.begin(), c.begin() + static_cast<long long>(lead));
            lo += static_cast<long long>(lead);
        }
        while (!c.empty() && c.back() == 0 && lo + static_cast<long long>(c.size()) > valid_hi) c.pop_back();
    }

    static Series from_poly(const Poly& f, long long shift = 0) {
        Series s;
        s.modulus = f.ctx().modulus();
        s.lo = shift;
        s.c = f.coeffs();
        s.valid_hi = kInfValid;
        s.tighten();
        return s;
    }

    static long long clamp_add(long long a, long long b) {
        long long s = a + b;
        if (s > kInfValid) s = kInfValid;
        if (s < -kInfValid) s = -kInfValid;
        return s;
    }

    static Series mul(const Series& a, const Series& b) {
        Series r;
        r.modulus = a.modulus;
        r.lo = clamp_add(a.lo, b.lo);
        r.valid_hi = std::min(clamp_add(a.valid_hi, b.lo), clamp_add(b.valid_hi, a.lo));
        if (r.valid_hi <= r.lo || a.c.empty() || b.c.empty()) {
            r.tighten();
            return r;
        }
        long long hi = std::min(r.valid_hi, a.lo + static_cast<long long>(a.c.size()) + b.lo +
                                                static_cast<long long>(b.c.size()) - 1);
        if (hi <= r.lo) {
            r.tighten();
            return r;
        }
        r.c.assign(static_cast<size_t>(hi - r.lo), 0);
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (size_t j = 0; j < b.c.size(); ++j) {
                long long e = a.lo + static_cast<long long>(i) + b.lo + static_cast<long long>(j);
                if (e >= hi) break;
                size_t k = static_cast<size_t>(e - r.lo);
                r.c[k] = (r.c[k] + a.c[i] * b.c[j]) % r.modulus;
            }
        }
        r.tighten();
        return r;
    }

    static Series add(const Series& a, const Series& b, int64_t bscale = 1) {
        Series r;
        r.modulus = a.modulus;
        r.lo = std::min(a.lo, b.lo);
        r.valid_hi = std::min(a.valid_hi, b.valid_hi);
        long long hi = std::min(r.valid_hi,
                                std::max(a.lo + static_cast<long long>(a.c.size()), b.lo + static_cast<long long>(b.c.size())));
        if (hi <= r.lo) {
            r.tighten();
            return r;
        }
        r.c.assign(static_cast<size_t>(hi - r.lo), 0);
        bscale %= r.modulus;
        if (bscale < 0) bscale += r.modulus;
        for (long long e = r.lo; e < hi; ++e) {
            int64_t v = (a.at(e) + bscale * b.at(e)) % r.modulus;
            if (v < 0) v += r.modulus;
            r.c[static_cast<size_t>(e - r.lo)] = v;
        }
        r.tighten();
        return r;
    }

    bool zero_on_valid() const {
        for (int64_t v : c)
            if (v != 0) return false;
        return true;
    }
};

/// Power-series inverse over F_p of a polynomial with unit constant term,
/// to `len` coefficients.
inline std::vector<int64_t> power_series_inverse_fp(const RingContext& fp, const std::vector<int64_t>& w, size_t len) {
    std::vector<int64_t> inv(len, 0);
    int64_t w0inv = fp.inv(w[0]);
    inv[0] = w0inv;
    for (size_t t = 1; t < len; ++t) {
        int64_t acc = 0;
        for (size_t i = 1; i <= t && i < w.size(); ++i) acc = fp.add(acc, fp.mul(w[i], inv[t - i]));
        inv[t] = fp.mul(fp.neg(acc), w0inv);
    }
    return inv;
}

/// Laurent inverse of a regular polynomial as an internal series, exact on
/// exponents below `need_hi` at least. Expands 1/project(b) over F_p((D))
/// then lifts the inverse through p^2, ..., p^r; verified by multiply-back.
inline Series laurent_inverse(const Poly& b, long long need_lo, long long need_hi) {
    if (!is_regular(b)) throw NotRegularError("cannot invert a zero divisor in Z_{p^r}((D))");
    const RingContext& ctx = b.ctx();
    RingContext fp = ctx.residue_field();
    Poly bbar = b.project();
    int v = 0;
    while (bbar.coeff(v) == 0) ++v;

    long long margin = static_cast<long long>(v) * ctx.r() + b.deg() + 4;
    long long A = std::min(need_lo, -static_cast<long long>(v) * ctx.r());
    long long B = std::max(need_hi, 1LL) + margin;
    Series bser = Series::from_poly(b);

    for (int attempt = 0; attempt < 4; ++attempt) {
        // layer 1: invert the projected polynomial in F_p((D))
        std::vector<int64_t> w(bbar.coeffs().begin() + v, bbar.coeffs().end());
        size_t len = static_cast<size_t>(B + v);
        std::vector<int64_t> inv = power_series_inverse_fp(fp, w, len);

        Series hbar;
        hbar.modulus = fp.modulus();
        hbar.lo = -v;
        hbar.valid_hi = B;
        hbar.c = inv;
        hbar.tighten();

        Series h = hbar;
        h.modulus = ctx.modulus();

        int64_t pj = 1;
        bool layer_ok = true;
        for (int j = 1; j < ctx.r(); ++j) {
            pj *= ctx.p();
            Series e = Series::add(Series::mul(bser, h), Series::from_poly(Poly::one(ctx)), -1);
            if (e.zero_on_valid()) break;
            Series g;
            g.modulus = fp.modulus();
            g.lo = e.lo;
            g.valid_hi = e.valid_hi;
            g.c.resize(e.c.size());
            for (size_t i = 0; i < e.c.size(); ++i) {
                if (e.c[i] % pj != 0) {
                    layer_ok = false;
                    break;
                }
                g.c[i] = (e.c[i] / pj) % fp.modulus();
            }
            if (!layer_ok) break;
            g.tighten();
            Series corr = Series::mul(hbar, g);  // will be negated below
            corr.modulus = ctx.modulus();
            for (auto& x : corr.c) x %= ctx.modulus();
            h = Series::add(h, corr, -pj);
        }

        if (layer_ok) {
            Series check = Series::mul(bser, h);
            bool good = h.valid_hi >= need_hi && check.valid_hi >= need_hi;
            if (good) {
                for (long long e = std::min(check.lo, A); e < std::min(need_hi, check.valid_hi) && good; ++e) {
                    int64_t want = (e == 0) ? 1 : 0;
                    if (check.at(e) != want) good = false;
                }
            }
            if (good) return h;
        }
        B += margin + (B - need_hi);
        A -= margin;
    }
    throw WindowTooSmallError("laurent inverse could not be verified on the requested window");
}

}  // namespace detail

/// Coefficients of the unique h in Z_{p^r}((D)) with b*h = 1, on [lo, hi).
inline LaurentWindow invert_in_laurent(const Poly& b, int lo, int hi) {
    if (hi < lo) throw BadShapeError("empty or inverted window");
    detail::Series h = detail::laurent_inverse(b, lo, hi);
    LaurentWindow w;
    w.start = lo;
    w.coeffs.resize(static_cast<size_t>(hi - lo));
    for (int e = lo; e < hi; ++e) w.coeffs[static_cast<size_t>(e - lo)] = h.at(e);
    return w;
}

/// Laurent expansion of a rational element on [lo, hi).
inline LaurentWindow expand(const Rational& u, int lo, int hi) {
    if (hi < lo) throw BadShapeError("empty or inverted window");
    if (u.is_zero() || u.is_poly()) {
        LaurentWindow w;
        w.start = lo;
        w.coeffs.resize(static_cast<size_t>(hi - lo));
        for (int e = lo; e < hi; ++e) w.coeffs[static_cast<size_t>(e - lo)] = u.num().coeff(e);
        return w;
    }
    detail::Series inv = detail::laurent_inverse(u.den(), lo - std::max(u.num().deg(), 0), hi);
    detail::Series prod = detail::Series::mul(detail::Series::from_poly(u.num()), inv);
    if (prod.valid_hi < hi) throw WindowTooSmallError("expansion window verification failed");
    LaurentWindow w;
    w.start = lo;
    w.coeffs.resize(static_cast<size_t>(hi - lo));
    for (int e = lo; e < hi; ++e) w.coeffs[static_cast<size_t>(e - lo)] = prod.at(e);
    return w;
}

namespace detail {

/// Exact check of num/den = head + D^m * block / (1 - D^T), all terms made
/// polynomial by a global D^sigma shift.
inline bool verify_periodic_certificate(const Poly& num, const Poly& den, const LaurentWindow& head, int m, int T,
                                        const std::vector<int64_t>& block) {
    const RingContext& ctx = num.ctx();
    int sigma = head.start < 0 ? -head.start : 0;
    std::vector<int64_t> hp(static_cast<size_t>(m + sigma), 0);
    for (int e = head.start; e < m; ++e) hp[static_cast<size_t>(e + sigma)] = head.at(e);
    Poly head_poly(ctx, std::move(hp));
    Poly block_poly(ctx, block);
    Poly one_minus_dt = Poly::one(ctx) - Poly::monomial(ctx, T);
    Poly lhs = (num.shifted(sigma)) * one_minus_dt;
    Poly rhs = den * head_poly * one_minus_dt + den * block_poly.shifted(m + sigma);
    return lhs == rhs;
}

}  // namespace detail

/// Decide whether a rational series has finite Hamming weight. Detection of
/// the eventually-periodic tail is heuristic, but every certificate is
/// verified by an exact polynomial identity before being returned.
inline WeightClassification classify_weight(const Rational& u) {
    const RingContext& ctx = u.ctx();
    WeightClassification out;
    if (u.is_zero()) {
        out.finite = true;
        out.laurent_polynomial.start = 0;
        out.weight = 0;
        return out;
    }
    if (u.is_poly()) {
        out.finite = true;
        out.laurent_polynomial.start = 0;
        out.laurent_polynomial.coeffs = u.num().coeffs();
        for (int64_t c : u.num().coeffs())
            if (c != 0) ++out.weight;
        return out;
    }

    Poly denbar = u.den().project();
    int v = 0;
    while (denbar.coeff(v) == 0) ++v;
    int lo = -v * ctx.r();
    int d = u.den().deg();
    int dn = std::max(u.num().deg(), 0);
    int m0 = std::max(dn, d) * ctx.r() + d;

    for (int n_guess = m0 + 64; n_guess <= m0 + (1 << 16); n_guess *= 2) {
        LaurentWindow w = expand(u, lo, n_guess);
        int found_t = 0;
        for (int T = 1; T <= (n_guess - m0) / 2; ++T) {
            bool ok = true;
            for (int t = m0; t + T < n_guess && ok; ++t)
                if (w.at(t) != w.at(t + T)) ok = false;
            if (ok) {
                found_t = T;
                break;
            }
        }
        if (!found_t) continue;
        int T = found_t;
        int m = m0;
        while (m > lo && w.at(m - 1) == w.at(m - 1 + T)) --m;

        LaurentWindow head;
        head.start = lo;
        head.coeffs.assign(w.coeffs.begin(), w.coeffs.begin() + (m - lo));
        std::vector<int64_t> block(w.coeffs.begin() + (m - lo), w.coeffs.begin() + (m - lo) + T);

        if (!detail::verify_periodic_certificate(u.num(), u.den(), head, m, T, block)) continue;

        bool block_zero = true;
        for (int64_t b : block)
            if (b != 0) block_zero = false;

        if (block_zero) {
            out.finite = true;
            // trim the head to its support
            int s = head.start, e = m;
            while (s < e && head.at(s) == 0) ++s;
            while (e > s && head.at(e - 1) == 0) --e;
            out.laurent_polynomial.start = s;
            out.laurent_polynomial.coeffs.assign(head.coeffs.begin() + (s - head.start),
                                                 head.coeffs.begin() + (e - head.start));
            out.weight = 0;
            for (int64_t c : out.laurent_polynomial.coeffs)
                if (c != 0) ++out.weight;
        } else {
            out.finite = false;
            out.preperiod = m;
            out.period = T;
            out.periodic_block = block;
        }
        return out;
    }
    throw SearchBudgetExceededError("periodicity detection exceeded its window budget");
}

}  // namespace zprconv

#endif
