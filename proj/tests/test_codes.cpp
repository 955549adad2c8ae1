#include "doctest.h"
#include "oracles.hpp"
#include "prmforge/codes.hpp"
#include "prmforge/combinatorics.hpp"
#include "prmforge/error.hpp"

using namespace prmforge;

namespace {

// Minimum nonzero weight over all codewords.
std::int64_t brute_min_distance(const LinearCode& c) {
    const auto rows = c.generator.to_rows();
    const std::uint64_t total = oracle::power(c.field.q(), static_cast<unsigned>(rows.size()));
    std::int64_t best = static_cast<std::int64_t>(c.n);
    for (std::uint64_t t = 1; t < total; ++t) {
        const auto coeff = oracle::decode(t, rows.size(), c.field.q());
        std::int64_t w = 0;
        for (std::size_t j = 0; j < c.n; ++j) {
            Element s = 0;
            for (std::size_t i = 0; i < rows.size(); ++i) s = c.field.add(s, c.field.mul(coeff[i], rows[i][j]));
            w += s != 0 ? 1 : 0;
        }
        best = std::min(best, w);
    }
    return best;
}

}  // namespace

TEST_CASE("rm_code") {
    const auto a = rm_code(Field::of_order(4), 2, 2);
    CHECK(a.n == 16);
    CHECK(a.k == 6);
    const auto b = rm_code(Field::of_order(5), 1, 1);
    CHECK(b.n == 5);
    CHECK(b.k == 2);
    const auto c = rm_code(Field::of_order(4), 2, 1);
    CHECK(c.n == 4);
    CHECK(c.k == 3);
    CHECK(oracle::rank_by_span(c.field, c.generator.to_rows()) == 3);
    CHECK_THROWS_AS(rm_code(Field::of_order(4), 4, 2), DegreeTooLarge);
}

TEST_CASE("prm_code") {
    const Field f4 = Field::of_order(4);
    const auto a = prm_code(f4, 2, 2);
    CHECK(a.n == 21);
    CHECK(a.k == 6);
    const auto b = prm_code(f4, 2, 3);
    CHECK(b.n == 85);
    CHECK(b.k == 10);
    CHECK(matrix_rank(f4, b.generator) == 10);
    const auto c = prm_code(f4, 1, 2);
    CHECK(c.n == 21);
    CHECK(c.k == 3);
    CHECK_THROWS_AS(prm_code(f4, 7, 2), DegreeTooLarge);
    // d >= q: dependent monomial evaluations are reduced away.
    const auto d = prm_code(f4, 5, 2);
    CHECK(d.k == static_cast<std::size_t>(prm_params(4, 5, 2).k));
    CHECK(matrix_rank(f4, d.generator) == d.k);
}

TEST_CASE("prm_params") {
    CHECK(prm_params(4, 2, 2) == CodeParams{21, 6, 12});
    CHECK(prm_params(4, 2, 3) == CodeParams{85, 10, 48});
    CHECK(prm_params(4, 1, 2) == CodeParams{21, 3, 16});
    CHECK(rm_params(4, 2, 2) == CodeParams{16, 6, 8});
}

TEST_CASE("prm_params against brute force") {
    for (auto [q, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {4, 1}, {4, 2}}) {
        const Field f = Field::of_order(q);
        for (unsigned d = 1; d <= m * (q - 1); ++d) {
            const auto code = prm_code(f, d, m);
            if (oracle::power(q, static_cast<unsigned>(code.k)) > 300000) continue;
            const auto params = prm_params(q, d, m);
            CAPTURE(q);
            CAPTURE(m);
            CAPTURE(d);
            CHECK(params.n == static_cast<std::int64_t>(code.n));
            CHECK(params.k == static_cast<std::int64_t>(oracle::rank_by_span(f, code.generator.to_rows())));
            CHECK(params.dmin == brute_min_distance(code));
        }
    }
}

TEST_CASE("prm_dual_degree") {
    CHECK(prm_dual_degree(4, 2, 2) == 4);
    CHECK(prm_dual_degree(4, 2, 3) == 7);
    CHECK_THROWS_AS(prm_dual_degree(4, 3, 2), DegreeDivisible);
}

TEST_CASE("dual_min_distance_via_columns") {
    CHECK(dual_min_distance_via_columns(prm_code(Field::of_order(4), 2, 2), 5) == 4u);
    CHECK(dual_min_distance_via_columns(prm_code(Field::of_order(5), 2, 2), 5) == 4u);
    CHECK(dual_min_distance_via_columns(prm_code(Field::of_order(4), 1, 2), 4) == 3u);
    CHECK_FALSE(dual_min_distance_via_columns(prm_code(Field::of_order(4), 2, 2), 3).has_value());
    // Repeated column gives a dependent pair.
    const Field f = Field::of_order(3);
    CHECK(dual_min_distance_via_columns(raw_code(f, Matrix::from_rows({{1, 2, 0}, {0, 0, 1}})), 3) == 2u);
}

TEST_CASE("raw_code reduces to full rank") {
    const Field f = Field::of_order(3);
    const auto c = raw_code(f, Matrix::from_rows({{1, 2, 0, 1}, {2, 1, 0, 2}, {0, 0, 1, 1}}));
    CHECK(c.n == 4);
    CHECK(c.k == 2);
}
