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
using testutil::z4;

TEST_CASE("brute common divisor worked values") {
    RingContext ctx = z4();
    CHECK_FALSE(oracle::brute_common_divisor(maximal_minors(testutil::example_g23(ctx)).nonzero()).has_value());
    auto d = oracle::brute_common_divisor({Poly(ctx, {0, 0, 1}), Poly(ctx, {0, 2, 1})});
    REQUIRE(d.has_value());
    CHECK(*d == Poly::monomial(ctx, 1));
    CHECK_FALSE(oracle::brute_common_divisor({Poly::one(ctx)}).has_value());
}

TEST_CASE("brute kernel worked values") {
    RingContext ctx = z4();
    PolyMatrix g = PolyMatrix::from_rows(ctx, {{Poly::one(ctx), Poly::one(ctx)}});
    auto ker = oracle::brute_kernel(g, 0);
    auto contains = [&](int64_t a, int64_t b) {
        std::vector<Poly> v{Poly::constant(ctx, a), Poly::constant(ctx, b)};
        for (const auto& k : ker)
            if (k == v) return true;
        return false;
    };
    CHECK(contains(1, 3));
    CHECK(contains(2, 2));
    CHECK(contains(3, 1));
    for (const auto& v : ker) CHECK((v[0] + v[1]).is_zero());

    auto trivial = oracle::brute_kernel(PolyMatrix::identity(ctx, 2), 0);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0][0].is_zero());
}

TEST_CASE("permutation determinant worked values") {
    RingContext ctx = z4();
    PolyMatrix one(ctx, 1, 1);
    one.at(0, 0) = Poly(ctx, {1, 2, 3});
    CHECK(oracle::det_perm(one) == Poly(ctx, {1, 2, 3}));

    PolyMatrix g = testutil::example_g23(ctx);
    CHECK(oracle::det_perm(g.submatrix_cols({0, 2})) == Poly(ctx, {1, 0, 1}));

    PolyMatrix sing = PolyMatrix::from_rows(ctx, {{Poly::one(ctx), Poly::one(ctx)},
                                                  {Poly::one(ctx), Poly::one(ctx)}});
    CHECK(oracle::det_perm(sing).is_zero());

    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(oracle::det_perm(testutil::random_matrix(rng, ctx, 6, 6, 0)), TooLargeError);
}

TEST_CASE("oracles respect their budget") {
    RingContext ctx = z4();
    oracle::SearchBudget tiny;
    tiny.max_degree = 1;
    CHECK_THROWS_AS(oracle::brute_common_divisor({Poly(ctx, {1, 1, 1, 1})}, tiny), BudgetExceededError);
    oracle::SearchBudget small_states;
    small_states.max_states = 10;
    CHECK_THROWS_AS(oracle::brute_kernel(PolyMatrix::identity(ctx, 2), 3, small_states), BudgetExceededError);
}

TEST_CASE("independent projection verdict on worked examples") {
    RingContext ctx = z4();
    CHECK(oracle::massey_sain_catastrophic(testutil::example_g23(ctx)));
    CHECK(oracle::massey_sain_catastrophic(testutil::example_g12(ctx)));
    CHECK_FALSE(oracle::massey_sain_catastrophic(PolyMatrix::identity(ctx, 2)));
}

TEST_CASE("brute inverse and zero-divisor searches") {
    RingContext ctx = z4();
    auto inv = oracle::brute_poly_inverse(Poly(ctx, {1, 2}), 1);
    REQUIRE(inv.has_value());
    CHECK(*inv == Poly(ctx, {1, 2}));
    CHECK_FALSE(oracle::brute_poly_inverse(Poly(ctx, {1, 1}), 3).has_value());
    CHECK(oracle::brute_is_zero_divisor(Poly(ctx, {2, 2}), 1));
    CHECK_FALSE(oracle::brute_is_zero_divisor(Poly(ctx, {1, 1}), 3));
}
