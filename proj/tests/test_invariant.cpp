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

#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"
#include "zprconv/oracle.hpp"

using namespace zprconv;
using testutil::f2;
using testutil::z4;

TEST_CASE("invariant worked values") {
    RingContext ctx = z4();
    RingContext fp = f2();
    CHECK(delta_of_ridm(testutil::example_g23(ctx)) == Poly(fp, {1, 0, 1}));
    CHECK(delta_of_ridm(PolyMatrix::identity(ctx, 2)) == Poly::one(fp));
    CHECK(delta_of_ridm(testutil::example_h13(ctx)) == Poly(fp, {1, 0, 1}));
    CHECK(delta_of_code(testutil::example_g23(ctx)) == Poly(fp, {1, 0, 1}));
    CHECK(delta_of_code(testutil::example_g12(ctx)) == Poly(fp, {1, 1}));
    PolyMatrix dd = PolyMatrix::from_rows(ctx, {{Poly::monomial(ctx, 1), Poly::monomial(ctx, 1)}});
    CHECK_THROWS_AS(delta_of_ridm(dd), NotRidmError);
}

TEST_CASE("power-of-D predicate") {
    RingContext fp = f2();
    CHECK(is_power_of_d(Poly::one(fp)));
    CHECK(is_power_of_d(Poly::monomial(fp, 3)));
    CHECK_FALSE(is_power_of_d(Poly(fp, {1, 1})));
    CHECK_FALSE(is_power_of_d(Poly::zero(fp)));
}

TEST_CASE("encoder-level catastrophicity worked values") {
    RingContext ctx = z4();
    CHECK(encoder_is_catastrophic(testutil::example_g12(ctx)));
    CHECK_FALSE(encoder_is_catastrophic(PolyMatrix::identity(ctx, 2)));
    PolyMatrix dd = PolyMatrix::from_rows(ctx, {{Poly::monomial(ctx, 1), Poly::monomial(ctx, 1)}});
    CHECK_FALSE(encoder_is_catastrophic(dd));
}

TEST_CASE("encoder catastrophicity agrees with the independent projection verdict") {
    std::mt19937_64 rng(51);
    std::vector<RingContext> ctxs{RingContext(2, 2), RingContext(3, 1), RingContext(2, 3)};
    for (int it = 0; it < 60; ++it) {
        const RingContext& ctx = ctxs[it % ctxs.size()];
        PolyMatrix g = testutil::random_full_rank(rng, ctx, 2, 3, 2);
        CHECK(encoder_is_catastrophic(g) == oracle::massey_sain_catastrophic(g));
    }
}

TEST_CASE("classification worked values") {
    RingContext ctx = z4();
    RingContext fp = f2();

    CatastrophicityVerdict v = classify_code(testutil::example_g23(ctx));
    CHECK(v.catastrophic);
    CHECK(v.delta == Poly(fp, {1, 0, 1}));
    REQUIRE(v.witness.has_value());

    CatastrophicityVerdict id = classify_code(PolyMatrix::identity(ctx, 2));
    CHECK_FALSE(id.catastrophic);
    CHECK(id.s == 0);
    CHECK(id.to_text() == "NONCATASTROPHIC s=0\n");

    PolyMatrix dd = PolyMatrix::from_rows(ctx, {{Poly::monomial(ctx, 1), Poly::monomial(ctx, 1)}});
    CatastrophicityVerdict vd = classify_code(dd);
    CHECK_FALSE(vd.catastrophic);
    CHECK(vd.s == 0);
}

TEST_CASE("witness for the 1x2 catastrophic example") {
    RingContext ctx = z4();
    PolyMatrix g = testutil::example_g12(ctx);
    CatastrophicityVerdict v = classify_code(g);
    REQUIRE(v.catastrophic);
    REQUIRE(v.witness.has_value());
    const Witness& w = *v.witness;

    REQUIRE(w.input.size() == 1);
    CHECK(w.input[0] == Rational(Poly(ctx, {2}), Poly(ctx, {1, 1})));
    REQUIRE(w.output.size() == 2);
    CHECK(w.output[0] == Poly(ctx, {2}));
    CHECK(w.output[1] == Poly(ctx, {2}));
    CHECK(w.output_weight == 2);

    // the three exactness guarantees
    for (int j = 0; j < 2; ++j) CHECK(w.input[0] * Rational(g.at(0, j)) == Rational(w.output[j]));
    CHECK_FALSE(classify_weight(w.input[0]).finite);
}

TEST_CASE("witness refuses non-catastrophic inputs") {
    RingContext ctx = z4();
    RingContext fp = f2();
    CHECK_THROWS_AS(witness_for(PolyMatrix::identity(ctx, 2), Poly::one(fp)), NoSuitableFactorError);
}

TEST_CASE("every witness in a random corpus passes its checks") {
    std::mt19937_64 rng(52);
    std::vector<RingContext> ctxs{RingContext(2, 2), RingContext(3, 2)};
    int found = 0;
    for (int it = 0; it < 80 && found < 12; ++it) {
        const RingContext& ctx = ctxs[it % ctxs.size()];
        PolyMatrix g = testutil::random_full_rank(rng, ctx, 2, 3, 2);
        auto maybe = testutil::guarded([&] { return classify_code(g); });
        if (!maybe) continue;
        CatastrophicityVerdict v = *maybe;
        if (!v.catastrophic) continue;
        ++found;
        REQUIRE(v.witness.has_value());
        const Witness& w = *v.witness;
        for (int j = 0; j < g.cols(); ++j) {
            Rational acc = Rational::zero(ctx);
            for (int i = 0; i < g.rows(); ++i) acc = acc + w.input[i] * Rational(g.at(i, j));
            CHECK(acc == Rational(w.output[j]));
        }
        CHECK_FALSE(classify_weight(w.input[w.infinite_component]).finite);
        int wt = 0;
        for (const Poly& o : w.output)
            for (int64_t c : o.coeffs())
                if (c != 0) ++wt;
        CHECK(wt == w.output_weight);
    }
    CHECK(found > 0);
}

TEST_CASE("unimodular invariance of the invariant") {
    RingContext ctx = z4();
    std::mt19937_64 rng(53);
    int evaluated = 0;
    for (int it = 0; it < 40 && evaluated < 30; ++it) {
        PolyMatrix g = testutil::random_full_rank(rng, ctx, 2, 3, 2);
        PolyMatrix t = testutil::random_unimodular(rng, ctx, 2, 2);
        auto pair = testutil::guarded([&] { return std::pair(delta_of_code(mat_mul(t, g)), delta_of_code(g)); });
        if (!pair) continue;
        ++evaluated;
        CHECK(pair->first == pair->second);
    }
    CHECK(evaluated >= 30);
}

TEST_CASE("quotient-ring equivalence invariance of the invariant") {
    RingContext ctx = z4();
    std::mt19937_64 rng(54);
    int evaluated = 0;
    for (int it = 0; it < 35 && evaluated < 20; ++it) {
        PolyMatrix g = testutil::random_full_rank(rng, ctx, 2, 3, 2);
        PolyMatrix m = testutil::random_quotient_invertible(rng, ctx, 2, 1);
        auto pair = testutil::guarded([&] { return std::pair(delta_of_code(mat_mul(m, g)), delta_of_code(g)); });
        if (!pair) continue;
        ++evaluated;
        CHECK(pair->first == pair->second);
    }
    CHECK(evaluated >= 20);
}

TEST_CASE("instances outside the primitive-annihilator guarantee take the fallback step") {
    RingContext ctx = z4();
    PolyMatrix g = testutil::counterexample_g23(ctx);
    REQUIRE(is_full_row_rank(g));
    // the obstruction: minors share 1+D, but no primitive annihilating row exists
    std::optional<Poly> q = find_common_divisor(maximal_minors(g));
    REQUIRE(q.has_value());
    CHECK(*q == Poly(ctx, {1, 1}));
    // the classic unimodular step is stuck, so the reduction must fall back to
    // a row transform with regular (non-unit) determinant
    RidmResult res = ridm_reduce(g);
    REQUIRE(res.trace.steps.size() == 1);
    CHECK_FALSE(is_unimodular(res.trace.steps[0].transform));
    CHECK(is_regular(det(res.trace.steps[0].transform)));
    CHECK(res.trace.steps[0].intdeg_before == 3);
    CHECK(res.trace.steps[0].intdeg_after == 2);
    CHECK(is_ridm(res.matrix));
    // the invariant is confirmed by the independently computed dual
    Poly delta = delta_of_ridm(res.matrix);
    CHECK(delta == Poly(RingContext(2, 1), {1, 0, 1}));
    CHECK(delta_of_ridm(parity_check(g)) == delta);
    CHECK(duality_check(g).equal);
}

TEST_CASE("field case r = 1 always yields delta 1") {
    std::mt19937_64 rng(55);
    std::vector<RingContext> ctxs{RingContext(2, 1), RingContext(3, 1), RingContext(5, 1)};
    for (int it = 0; it < 45; ++it) {
        const RingContext& ctx = ctxs[it % ctxs.size()];
        PolyMatrix g = testutil::random_full_rank(rng, ctx, 2, 3, 3);
        CHECK(delta_of_code(g) == Poly::one(ctx));
    }
}

TEST_CASE("criterion consistency through the reduced encoder") {
    RingContext ctx = z4();
    std::mt19937_64 rng(56);
    int evaluated = 0;
    for (int it = 0; it < 40 && evaluated < 30; ++it) {
        PolyMatrix g = testutil::random_full_rank(rng, ctx, 2, 3, 2);
        auto res = testutil::guarded([&] { return std::pair(delta_of_code(g), ridm_reduce(g).matrix); });
        if (!res) continue;
        ++evaluated;
        CHECK(encoder_is_catastrophic(res->second) == !is_power_of_d(res->first));
    }
    CHECK(evaluated >= 30);
}
