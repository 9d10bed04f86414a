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

// Acceptance suite: one line of output per criterion, nonzero exit if any
// fails. Every check is exact symbolic equality; no tolerances anywhere.

#include <cstdio>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "test_util.hpp"
#include "zprconv/oracle.hpp"

using namespace zprconv;
namespace tu = zprconv::testutil;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool ok) {
    std::printf("[%s] %d. %s\n", ok ? "PASS" : "FAIL", idx, name.c_str());
    if (!ok) ++g_failures;
}

RingContext pick_ctx(std::mt19937_64& rng) {
    static const int64_t ps[] = {2, 3};
    static const int rs[] = {1, 2, 3};
    return RingContext(ps[rng() % 2], rs[rng() % 3]);
}

// 1. Worked 2x3 example over Z_4: reduced form, invariant 1+D^2, catastrophic.
bool criterion1() {
    RingContext ctx = tu::z4();
    PolyMatrix g = tu::example_g23(ctx);
    if (!is_ridm(g)) return false;
    if (!(delta_of_code(g) == Poly(tu::f2(), {1, 0, 1}))) return false;
    CatastrophicityVerdict v = classify_code(g);
    return v.catastrophic && v.witness.has_value();
}

// 2. Dual of the worked example: exact orthogonality, rank 1, invariant
// 1+D^2, the known-good row in the computed row span, and an EQUAL report.
bool criterion2() {
    RingContext ctx = tu::z4();
    PolyMatrix g = tu::example_g23(ctx);
    PolyMatrix h = parity_check(g);
    if (!verify_orthogonality(g, h)) return false;
    if (h.rows() != 1 || !is_full_row_rank(h)) return false;
    if (!(delta_of_ridm(h) == Poly(tu::f2(), {1, 0, 1}))) return false;
    if (!in_row_span(h, tu::example_h13(ctx).row(0))) return false;
    return duality_check(g).equal;
}

// 3. The 1x2 catastrophic example over Z_4, with a fully verified witness.
bool criterion3() {
    RingContext ctx = tu::z4();
    PolyMatrix g = tu::example_g12(ctx);
    if (!is_ridm(g)) return false;
    if (!(delta_of_code(g) == Poly(tu::f2(), {1, 1}))) return false;
    CatastrophicityVerdict v = classify_code(g);
    if (!v.catastrophic || !v.witness) return false;
    const Witness& w = *v.witness;
    if (!(w.input[0] == Rational(Poly(ctx, {2}), Poly(ctx, {1, 1})))) return false;
    for (int j = 0; j < 2; ++j)
        if (!(w.input[0] * Rational(g.at(0, j)) == Rational(w.output[j]))) return false;
    if (classify_weight(w.input[0]).finite) return false;
    return w.output_weight >= 1 && w.output_weight <= 2;
}

// 4. Duality theorem plus its catastrophicity corollary on >= 200 random
// full-rank codes over (p, r) in {2,3} x {1,2,3}, n <= 5, k < n, degree <= 3.
bool criterion4() {
    std::mt19937_64 rng(104);
    int evaluated = 0;
    for (int it = 0; it < 320 && evaluated < 200; ++it) {
        RingContext ctx = pick_ctx(rng);
        int n = 2 + static_cast<int>(rng() % 4);
        int k = 1 + static_cast<int>(rng() % (n - 1));
        int deg = static_cast<int>(rng() % 4);
        PolyMatrix g = tu::random_full_rank(rng, ctx, k, n, deg);
        // instances outside the row-annihilator guarantee report a structured
        // error instead of an invariant; redraw until the quota is met
        auto res = tu::guarded([&] {
            PolyMatrix h = parity_check(g);
            return std::tuple(delta_of_code(g), delta_of_ridm(h), duality_check(g).equal);
        });
        if (!res) continue;
        ++evaluated;
        auto [dc, dd, eq] = *res;
        if (!(dc == dd)) return false;
        if (is_power_of_d(dc) != is_power_of_d(dd)) return false;
        if (!eq) return false;
    }
    return evaluated >= 200;
}

// 5. Invariance: >= 200 unimodular transforms and >= 100 transforms invertible
// over the total quotient ring leave the invariant unchanged.
bool criterion5() {
    std::mt19937_64 rng(105);
    int evaluated = 0;
    for (int it = 0; it < 320 && evaluated < 200; ++it) {
        RingContext ctx = pick_ctx(rng);
        int n = 2 + static_cast<int>(rng() % 3);
        int k = 1 + static_cast<int>(rng() % n);
        if (k > n) k = n;
        PolyMatrix g = tu::random_full_rank(rng, ctx, k, n, 2);
        PolyMatrix t = tu::random_unimodular(rng, ctx, k, 2);
        auto pair = tu::guarded([&] { return std::pair(delta_of_code(mat_mul(t, g)), delta_of_code(g)); });
        if (!pair) continue;
        ++evaluated;
        if (!(pair->first == pair->second)) return false;
    }
    if (evaluated < 200) return false;
    evaluated = 0;
    for (int it = 0; it < 180 && evaluated < 100; ++it) {
        RingContext ctx = pick_ctx(rng);
        int n = 2 + static_cast<int>(rng() % 2);
        int k = 1 + static_cast<int>(rng() % n);
        if (k > n) k = n;
        PolyMatrix g = tu::random_full_rank(rng, ctx, k, n, 2);
        PolyMatrix m = tu::random_quotient_invertible(rng, ctx, k, 1);
        auto pair = tu::guarded([&] { return std::pair(delta_of_code(mat_mul(m, g)), delta_of_code(g)); });
        if (!pair) continue;
        ++evaluated;
        if (!(pair->first == pair->second)) return false;
    }
    return evaluated >= 100;
}

// 6. Reduction contract on >= 200 random inputs: terminates within intdeg
// steps, each step drops the internal degree by exactly deg Q, and the final
// matrix has no common minor divisor (confirmed by exhaustive search).
bool criterion6() {
    std::mt19937_64 rng(106);
    int evaluated = 0;
    for (int it = 0; it < 320 && evaluated < 200; ++it) {
        RingContext ctx = pick_ctx(rng);
        int n = 2 + static_cast<int>(rng() % 3);
        int k = 1 + static_cast<int>(rng() % n);
        if (k > n) k = n;
        PolyMatrix g = tu::random_full_rank(rng, ctx, k, n, 1);
        // mix in instances with a forced common divisor so the loop body runs
        if (it % 2 == 0) {
            Poly f = monic_at(ctx, 1, static_cast<int64_t>(rng()) % ctx.modulus());
            int row = static_cast<int>(rng() % k);
            for (int j = 0; j < n; ++j) g.at(row, j) = g.at(row, j) * f;
        }
        int before = intdeg(g);
        auto res = tu::guarded([&] { return ridm_reduce(g); });
        if (!res) continue;
        ++evaluated;
        if (static_cast<int>(res->trace.steps.size()) > before) return false;
        for (const RidmStep& st : res->trace.steps) {
            if (is_unimodular(st.transform)) {
                if (st.intdeg_before - st.intdeg_after != st.q.deg()) return false;
            } else {
                if (!is_regular(det(st.transform))) return false;
                int drop = st.intdeg_before - st.intdeg_after;
                if (drop < 1 || drop > st.q.deg()) return false;
            }
        }
        if (!is_ridm(res->matrix)) return false;
        if (oracle::brute_common_divisor(maximal_minors(res->matrix).nonzero()).has_value()) return false;
    }
    return evaluated >= 200;
}

// 7. Field case: r = 1 always gives invariant 1 (>= 100 random codes).
bool criterion7() {
    std::mt19937_64 rng(107);
    static const int64_t ps[] = {2, 3, 5};
    for (int it = 0; it < 100; ++it) {
        RingContext ctx(ps[it % 3], 1);
        int n = 2 + static_cast<int>(rng() % 3);
        int k = 1 + static_cast<int>(rng() % (n - 1));
        PolyMatrix g = tu::random_full_rank(rng, ctx, k, n, 3);
        if (!(delta_of_code(g) == Poly::one(ctx))) return false;
    }
    return true;
}

// 8. Encoder-level verdict equals the independent residue-field verdict on
// >= 200 random encoders.
bool criterion8() {
    std::mt19937_64 rng(108);
    for (int it = 0; it < 200; ++it) {
        RingContext ctx = pick_ctx(rng);
        int n = 2 + static_cast<int>(rng() % 4);
        int k = 1 + static_cast<int>(rng() % n);
        if (k > n) k = n;
        PolyMatrix g = tu::random_full_rank(rng, ctx, k, n, 2);
        if (encoder_is_catastrophic(g) != oracle::massey_sain_catastrophic(g)) return false;
    }
    return true;
}

// 9. Oracle equivalence: divisor search vs exhaustive search, cofactor vs
// permutation determinants, parity-check row span vs exhaustive kernel
// vectors of degree <= 3. Zero discrepancies.
bool criterion9() {
    std::mt19937_64 rng(109);
    for (int it = 0; it < 120; ++it) {
        RingContext ctx = pick_ctx(rng);
        int n = 2 + static_cast<int>(rng() % 2);
        int k = 1 + static_cast<int>(rng() % n);
        if (k > n) k = n;
        PolyMatrix g = tu::random_full_rank(rng, ctx, k, n, 1);
        if (it % 3 == 0) {
            Poly f = monic_at(ctx, 1, static_cast<int64_t>(rng()) % ctx.modulus());
            for (int j = 0; j < n; ++j) g.at(0, j) = g.at(0, j) * f;
        }
        MinorSet ms = maximal_minors(g);
        auto fast = find_common_divisor(ms);
        auto brute = oracle::brute_common_divisor(ms.nonzero());
        if (fast.has_value() != brute.has_value()) return false;
        if (fast && !(*fast == *brute)) return false;
        for (const auto& s : ms.subsets) {
            PolyMatrix sub = g.submatrix_cols(s);
            if (!(det(sub) == oracle::det_perm(sub))) return false;
        }
    }
    // kernel completeness on instances small enough for exhaustive search
    struct Shape {
        int64_t p;
        int r, k, n;
    };
    static const Shape shapes[] = {{2, 2, 1, 2}, {2, 1, 1, 3}, {2, 1, 2, 3}, {3, 1, 1, 2}};
    for (const Shape& sh : shapes) {
        RingContext ctx(sh.p, sh.r);
        int evaluated = 0;
        for (int it = 0; it < 12 && evaluated < 5; ++it) {
            PolyMatrix g = tu::random_full_rank(rng, ctx, sh.k, sh.n, 1);
            auto h = tu::guarded([&] { return parity_check(g); });
            if (!h) continue;
            ++evaluated;
            for (const auto& v : oracle::brute_kernel(g, 3))
                if (!in_row_span(*h, v)) return false;
        }
        if (evaluated < 5) return false;
    }
    return true;
}

// 10. Behavioral witness demo: truncated encodings over windows [0, N) for
// N in {8, 16, 32} show input weight growing at least linearly while the
// output weight is constant once N exceeds the output degree.
bool criterion10() {
    std::mt19937_64 rng(110);
    int demos = 0;
    for (int it = 0; it < 120 && demos < 25; ++it) {
        RingContext ctx = pick_ctx(rng);
        int n = 2 + static_cast<int>(rng() % 2);
        int k = 1 + static_cast<int>(rng() % (n - 1));
        PolyMatrix g = tu::random_full_rank(rng, ctx, k, n, 2);
        auto maybe = tu::guarded([&] { return classify_code(g); });
        if (!maybe || !maybe->catastrophic) continue;
        const CatastrophicityVerdict& v = *maybe;
        ++demos;
        const Witness& w = *v.witness;
        const WeightClassification& cert = w.input_weight_cert;

        int out_deg = 0;
        int full_out_weight = 0;
        for (const Poly& o : w.output) {
            out_deg = std::max(out_deg, std::max(o.deg(), 0));
            for (int64_t c : o.coeffs())
                if (c != 0) ++full_out_weight;
        }

        int prev = -1;
        for (int N : {8, 16, 32}) {
            int in_weight = 0;
            for (const Rational& u : w.input) {
                LaurentWindow win = expand(u, 0, N);
                for (int e = 0; e < N; ++e)
                    if (win.at(e) != 0) ++in_weight;
            }
            // at least one nonzero coefficient per full period beyond the
            // preperiod: a linear lower bound in N
            if (N > cert.preperiod + cert.period) {
                int periods = (N - std::max(cert.preperiod, 0)) / cert.period;
                if (in_weight < periods) return false;
            }
            if (prev >= 0 && in_weight < prev) return false;
            prev = in_weight;

            if (N > out_deg) {
                int out_weight = 0;
                for (const Poly& o : w.output)
                    for (int e = 0; e < N; ++e)
                        if (o.coeff(e) != 0) ++out_weight;
                if (out_weight != full_out_weight) return false;
            }
        }
    }
    return demos > 0;
}

}  // namespace

int main() {
    report(1, "worked 2x3 example: reduced, invariant 1+D^2, catastrophic", criterion1());
    report(2, "worked dual: orthogonal, rank 1, invariant 1+D^2, span, EQUAL", criterion2());
    report(3, "worked 1x2 example: invariant 1+D, verified witness", criterion3());
    report(4, "duality theorem and corollary on 200 random codes", criterion4());
    report(5, "invariance under 200 unimodular and 100 invertible transforms", criterion5());
    report(6, "reduction contract on 200 random inputs", criterion6());
    report(7, "field case r=1 gives invariant 1 on 100 random codes", criterion7());
    report(8, "encoder verdict matches independent projection verdict, 200 cases", criterion8());
    report(9, "oracle equivalence: divisor search, determinants, kernel span", criterion9());
    report(10, "witness demo: linear input weight, constant output weight", criterion10());
    return g_failures == 0 ? 0 : 1;
}
