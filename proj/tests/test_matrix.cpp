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

TEST_CASE("determinant worked values") {
    RingContext ctx = z4();
    PolyMatrix m = PolyMatrix::from_rows(ctx, {{Poly(ctx, {1, 1}), Poly(ctx, {2})},
                                               {Poly(ctx, {2, 1}), Poly(ctx, {1, 1})}});
    CHECK(det(m) == Poly(ctx, {1, 0, 1}));
    CHECK(det(PolyMatrix::identity(ctx, 3)) == Poly::one(ctx));
    PolyMatrix zr(ctx, 2, 2);
    zr.at(1, 0) = Poly::one(ctx);
    CHECK(det(zr).is_zero());
    CHECK_THROWS_AS(det(PolyMatrix(ctx, 2, 3)), NotSquareError);
}

TEST_CASE("determinant agrees with the permutation-sum oracle") {
    RingContext ctx(3, 2);
    std::mt19937_64 rng(31);
    for (int it = 0; it < 40; ++it) {
        int n = 1 + static_cast<int>(rng() % 4);
        PolyMatrix m = testutil::random_matrix(rng, ctx, n, n, 2);
        CHECK(det(m) == oracle::det_perm(m));
    }
}

TEST_CASE("determinant is multiplicative") {
    RingContext ctx = z4();
    std::mt19937_64 rng(32);
    for (int it = 0; it < 25; ++it) {
        int n = 2 + static_cast<int>(rng() % 2);
        PolyMatrix a = testutil::random_matrix(rng, ctx, n, n, 2);
        PolyMatrix b = testutil::random_matrix(rng, ctx, n, n, 2);
        CHECK(det(mat_mul(a, b)) == det(a) * det(b));
    }
}

TEST_CASE("column subsets are lexicographic") {
    auto s = column_subsets(4, 2);
    REQUIRE(s.size() == 6);
    CHECK(s[0] == std::vector<int>{0, 1});
    CHECK(s[1] == std::vector<int>{0, 2});
    CHECK(s[2] == std::vector<int>{0, 3});
    CHECK(s[3] == std::vector<int>{1, 2});
    CHECK(s[4] == std::vector<int>{1, 3});
    CHECK(s[5] == std::vector<int>{2, 3});
}

TEST_CASE("maximal minors of the worked 2x3 example") {
    RingContext ctx = z4();
    MinorSet ms = maximal_minors(testutil::example_g23(ctx));
    REQUIRE(ms.minors.size() == 3);
    CHECK(ms.minors[0] == Poly(ctx, {3, 2, 3}));
    CHECK(ms.minors[1] == Poly(ctx, {1, 0, 1}));
    CHECK(ms.minors[2] == Poly(ctx, {3, 2, 1}));
    for (size_t i = 0; i < ms.subsets.size(); ++i)
        CHECK(ms.minors[i] == oracle::det_perm(testutil::example_g23(ctx).submatrix_cols(ms.subsets[i])));
}

TEST_CASE("maximal minors, small cases") {
    RingContext ctx = z4();
    MinorSet idm = maximal_minors(PolyMatrix::identity(ctx, 2));
    REQUIRE(idm.minors.size() == 1);
    CHECK(idm.minors[0] == Poly::one(ctx));
    MinorSet row = maximal_minors(testutil::example_g12(ctx));
    REQUIRE(row.minors.size() == 2);
    CHECK(row.minors[0] == Poly(ctx, {1, 1}));
    CHECK(row.minors[1] == Poly(ctx, {3, 1}));
}

TEST_CASE("matrix projection") {
    RingContext ctx = z4();
    RingContext fp = f2();
    PolyMatrix hbar = testutil::example_h13(ctx).project();
    for (int j = 0; j < 3; ++j) CHECK(hbar.at(0, j) == Poly(fp, {1, 0, 1}));
    PolyMatrix gbar = testutil::example_g23(ctx).project();
    CHECK(gbar.at(0, 0) == Poly(fp, {1, 1}));
    CHECK(gbar.at(0, 2).is_zero());
    CHECK(gbar.at(1, 0) == Poly(fp, {0, 1}));
}

TEST_CASE("projection commutes with multiplication and determinant") {
    RingContext ctx = z4();
    std::mt19937_64 rng(33);
    for (int it = 0; it < 25; ++it) {
        PolyMatrix a = testutil::random_matrix(rng, ctx, 3, 3, 2);
        PolyMatrix b = testutil::random_matrix(rng, ctx, 3, 3, 2);
        CHECK(mat_mul(a, b).project() == mat_mul(a.project(), b.project()));
        CHECK(det(a).project() == det(a.project()));
    }
}

TEST_CASE("full row rank") {
    RingContext ctx = z4();
    CHECK(is_full_row_rank(testutil::example_g23(ctx)));
    PolyMatrix stacked(ctx, 2, 1);
    stacked.at(0, 0) = Poly::one(ctx);
    stacked.at(1, 0) = Poly::one(ctx);
    CHECK_FALSE(is_full_row_rank(stacked));
    PolyMatrix nil = PolyMatrix::from_rows(ctx, {{Poly(ctx, {2}), Poly(ctx, {2})}});
    CHECK_FALSE(is_full_row_rank(nil));
}

TEST_CASE("unimodularity") {
    RingContext ctx = z4();
    CHECK(is_unimodular(PolyMatrix::identity(ctx, 2)));
    PolyMatrix d(ctx, 2, 2);
    d.at(0, 0) = Poly::one(ctx);
    d.at(1, 1) = Poly(ctx, {1, 2});
    CHECK(is_unimodular(d));
    d.at(1, 1) = Poly::monomial(ctx, 1);
    CHECK_FALSE(is_unimodular(d));
}

TEST_CASE("elementary row operations invert") {
    RingContext ctx = z4();
    std::mt19937_64 rng(34);
    PolyMatrix g = testutil::random_matrix(rng, ctx, 3, 4, 2);
    PolyMatrix m = g;
    m.row_swap(0, 2);
    m.row_swap(0, 2);
    CHECK(m == g);
    Poly mult = testutil::random_poly(rng, ctx, 2);
    m.row_axpy(1, 2, mult);
    m.row_axpy(1, 2, -mult);
    CHECK(m == g);
    CHECK(mat_mul(PolyMatrix::identity(ctx, 3), g) == g);
    CHECK_THROWS_AS(m.row_scale_by_unit(0, Poly::monomial(ctx, 1)), NotUnitError);
}

TEST_CASE("Cauchy-Binet scaling of minors under square transforms") {
    RingContext ctx = z4();
    std::mt19937_64 rng(35);
    for (int it = 0; it < 20; ++it) {
        PolyMatrix g = testutil::random_matrix(rng, ctx, 2, 4, 2);
        PolyMatrix t = testutil::random_matrix(rng, ctx, 2, 2, 2);
        MinorSet mg = maximal_minors(g);
        MinorSet mt = maximal_minors(mat_mul(t, g));
        Poly dt = det(t);
        for (size_t i = 0; i < mg.minors.size(); ++i) CHECK(mt.minors[i] == dt * mg.minors[i]);
    }
}

TEST_CASE("full rank iff some minor is regular") {
    RingContext ctx = z4();
    std::mt19937_64 rng(36);
    for (int it = 0; it < 40; ++it) {
        PolyMatrix g = testutil::random_matrix(rng, ctx, 2, 3, 2);
        bool regular_minor = false;
        for (const Poly& m : maximal_minors(g).minors)
            if (is_regular(m)) regular_minor = true;
        CHECK(is_full_row_rank(g) == regular_minor);
    }
}
