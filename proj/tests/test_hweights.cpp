#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "prmforge/combinatorics.hpp"
#include "prmforge/error.hpp"
#include "prmforge/hweights.hpp"

using namespace prmforge;

TEST_CASE("gaussian_binomial") {
    CHECK(gaussian_binomial(6, 1, 4) == 1365);
    CHECK(gaussian_binomial(5, 0, 4) == 1);
    CHECK(gaussian_binomial(6, 3, 4) == 376805);
    CHECK(gaussian_binomial(3, 5, 4) == 0);
    for (unsigned q : {2u, 3u, 4u, 5u, 7u}) {
        for (unsigned k = 0; k <= 8; ++k) {
            for (unsigned r = 0; r <= k; ++r) REQUIRE(gaussian_binomial(k, r, q) == oracle::gaussian(k, r, q));
        }
    }
    CHECK_THROWS_AS(gaussian_binomial(40, 20, 4), SizeOverflow);
    CHECK(gaussian_binomial_sat(40, 20, 4) == kSaturated);
}

TEST_CASE("enumerate_subspaces") {
    auto count = [](unsigned q, unsigned k, unsigned r) {
        return enumerate_subspaces(Field::of_order(q), k, r, [](const Matrix&) {});
    };
    CHECK(count(2, 2, 1) == 3);
    CHECK(count(2, 3, 2) == 7);
    CHECK(count(4, 6, 2) == 93093);
    CHECK(count(3, 4, 2) == gaussian_binomial(4, 2, 3));
    CHECK_THROWS_AS(enumerate_subspaces(Field::of_order(4), 6, 3, [](const Matrix&) {}, 1000), SizeOverflow);
}

TEST_CASE("subspace stream visits distinct RREF subspaces") {
    for (auto [q, k, r] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 4, 2}, {3, 4, 2}, {4, 3, 2}, {2, 5, 3}}) {
        const Field f = Field::of_order(q);
        std::set<std::set<std::vector<Element>>> spans;
        std::uint64_t visited = 0;
        enumerate_subspaces(f, k, r, [&](const Matrix& b) {
            ++visited;
            REQUIRE(matrix_rank(f, b) == r);
            REQUIRE(rref(f, b).reduced == b);
            std::set<std::vector<Element>> span;
            const std::uint64_t combos = oracle::power(q, r);
            for (std::uint64_t c = 0; c < combos; ++c) {
                const auto coeff = oracle::decode(c, r, q);
                std::vector<Element> v(k, 0);
                for (unsigned i = 0; i < r; ++i) {
                    for (unsigned j = 0; j < k; ++j) v[j] = f.add(v[j], f.mul(coeff[i], b(i, j)));
                }
                span.insert(v);
            }
            spans.insert(span);
        });
        CHECK(visited == oracle::gaussian(k, r, q));
        CHECK(spans.size() == visited);
    }
}

TEST_CASE("er_exhaustive examples") {
    const Field f4 = Field::of_order(4);
    CHECK(er_exhaustive(f4, 2, 2, 1, Space::projective).value == 9);
    CHECK(er_exhaustive(f4, 2, 2, 4, Space::projective).value == 2);
    CHECK(er_exhaustive(f4, 2, 2, 6, Space::projective).value == 0);
    CHECK(er_exhaustive(Field::of_order(5), 2, 2, 3, Space::affine).value == 5);
    CHECK(er_exhaustive(Field::of_order(4), 2, 2, 2, Space::affine).value == 5);
    CHECK(er_exhaustive(Field::of_order(5), 2, 2, 2, Space::affine).value == 6);
    CHECK_THROWS_AS(er_exhaustive(f4, 4, 2, 1, Space::projective), HypothesisViolated);
    CHECK_THROWS_AS(er_exhaustive(f4, 2, 2, 7, Space::projective), RankOutOfRange);
    SearchOptions tiny;
    tiny.cost_cap = 1000;
    CHECK_THROWS_AS(er_exhaustive(Field::of_order(5), 3, 2, 3, Space::projective, tiny), SizeOverflow);
}

TEST_CASE("max_common_zeros against tuple brute force") {
    for (auto [q, d, m, space] : std::vector<std::tuple<unsigned, unsigned, unsigned, Space>>{
             {2, 1, 2, Space::projective}, {3, 1, 2, Space::projective}, {3, 2, 1, Space::projective},
             {4, 2, 1, Space::projective}, {3, 1, 2, Space::affine}, {4, 1, 2, Space::affine},
             {3, 2, 1, Space::affine}, {2, 1, 3, Space::projective}}) {
        const Field f = Field::of_order(q);
        const Matrix values = monomial_value_matrix(f, d, m, space);
        const auto rows = values.to_rows();
        for (unsigned r = 1; r <= values.rows(); ++r) {
            if (oracle::power(oracle::power(q, static_cast<unsigned>(values.rows())), r) > 3'000'000) continue;
            CAPTURE(q);
            CAPTURE(d);
            CAPTURE(m);
            CAPTURE(r);
            const auto res = max_common_zeros(f, values, r);
            CHECK(res.value == oracle::brute_max_zeros(f, rows, r));
            CHECK(witness_zero_count(f, values, res.witness) == res.value);
            CHECK(matrix_rank(f, res.witness) == r);
        }
    }
}

TEST_CASE("search is deterministic across thread counts") {
    const Field f = Field::of_order(5);
    SearchOptions one;
    const auto base = er_exhaustive(f, 3, 2, 2, Space::projective, one);
    CHECK(base.value == 12);
    for (unsigned t : {2u, 3u, 8u}) {
        SearchOptions opts;
        opts.threads = t;
        const auto res = er_exhaustive(f, 3, 2, 2, Space::projective, opts);
        CHECK(res.value == base.value);
        CHECK(res.witness == base.witness);
    }
}

TEST_CASE("er_random_search") {
    const Field f4 = Field::of_order(4);
    const auto a = er_random_search(f4, 2, 3, 5, 2000, 42);
    CHECK(a.value <= 9);
    CHECK(a.value >= 0);
    CHECK(matrix_rank(f4, a.witness) == 5);
    CHECK(a.mode.kind == SearchMode::Kind::randomized);
    const auto b = er_random_search(f4, 2, 3, 5, 2000, 42);
    CHECK(b.value == a.value);
    CHECK(b.witness == a.witness);
    CHECK(er_random_search(f4, 2, 2, 6, 5, 1).value == 0);
    const auto one = er_random_search(f4, 2, 2, 3, 1, 9);
    CHECK(one.value >= 0);
    CHECK(matrix_rank(f4, one.witness) == 3);
}

TEST_CASE("ghw conversions") {
    CHECK(ghw_from_er(21, 9) == 12);
    CHECK(ghw_from_er(21, 0) == 21);
    CHECK(ghw_from_er(85, 9) == 76);
    CHECK(er_from_ghw(21, 12) == 9);
}

TEST_CASE("weight_hierarchy") {
    const Field f4 = Field::of_order(4);
    const auto h = weight_hierarchy(prm_code(f4, 2, 2));
    CHECK(h.weights == std::vector<std::int64_t>{12, 15, 16, 19, 20, 21});
    CHECK(h.mode == HierarchyMode::exhaustive);
    CHECK(weight_hierarchy(rm_code(f4, 2, 1)).weights == std::vector<std::int64_t>{2, 3, 4});
    const auto lin = weight_hierarchy(prm_code(f4, 1, 2));
    CHECK(lin.weights == std::vector<std::int64_t>{16, 20, 21});
    for (unsigned r = 1; r <= 3; ++r) CHECK(lin.weights[r - 1] == p_k(4, 2) - p_k(4, 2 - static_cast<int>(r)));

    // With no budget only the terminal values can be filled in.
    SearchOptions none;
    none.cost_cap = 0;
    CHECK_THROWS_AS(weight_hierarchy(prm_code(f4, 2, 2), HierarchyMethod::exhaustive, none), SizeOverflow);
    CHECK_THROWS_AS(weight_hierarchy(prm_code(f4, 2, 2), HierarchyMethod::automatic, none), SizeOverflow);
}

TEST_CASE("automatic hierarchy uses terminal values") {
    const Field f4 = Field::of_order(4);
    const auto full = weight_hierarchy(prm_code(f4, 2, 2));
    const auto hybrid = weight_hierarchy(prm_code(f4, 2, 2), HierarchyMethod::automatic);
    CHECK(hybrid.weights == full.weights);
    CHECK(hybrid.mode == HierarchyMode::hybrid);
    // No terminal shortcut when d >= q-1.
    const auto f3 = Field::of_order(3);
    CHECK(weight_hierarchy(prm_code(f3, 2, 2), HierarchyMethod::automatic).mode == HierarchyMode::exhaustive);
}

TEST_CASE("Wei monotonicity and duality") {
    const std::vector<std::int64_t> h{12, 15, 16, 19, 20, 21};
    CHECK(wei_monotonicity_check(h, 21));
    CHECK_FALSE(wei_monotonicity_check({3, 3}, 4));
    CHECK(wei_monotonicity_check({1}, 1));

    const auto dual = dual_hierarchy_from(h, 21);
    REQUIRE(dual.size() == 15);
    CHECK(wei_duality_check(h, dual, 21));
    CHECK(dual.front() == 4);
    CHECK(dual_min_distance_via_columns(prm_code(Field::of_order(4), 2, 2), 6) == 4u);
    auto bad = dual;
    bad[3] += 1;
    CHECK_FALSE(wei_duality_check(h, bad, 21));
    CHECK(wei_duality_check({1, 2, 3}, {}, 3));
}

TEST_CASE("duality on a small code with both hierarchies searched") {
    // RM_3(1,2) has k = 3, n = 9; its dual is computed as a raw code.
    const Field f = Field::of_order(3);
    const auto code = rm_code(f, 1, 2);
    const auto h = weight_hierarchy(code);
    // Dual generator: the null space of the generator.
    const auto ef = rref(f, code.generator);
    Matrix dual_gen(0, code.n);
    for (std::size_t c = 0; c < code.n; ++c) {
        if (std::find(ef.pivots.begin(), ef.pivots.end(), c) != ef.pivots.end()) continue;
        std::vector<Element> v(code.n, 0);
        v[c] = 1;
        for (std::size_t i = 0; i < ef.pivots.size(); ++i) v[ef.pivots[i]] = f.neg(ef.reduced(i, c));
        dual_gen.append_row(v);
    }
    const auto hd = weight_hierarchy(raw_code(f, dual_gen));
    CHECK(wei_duality_check(h.weights, hd.weights, 9));
    CHECK(hd.weights == dual_hierarchy_from(h.weights, 9));
}
