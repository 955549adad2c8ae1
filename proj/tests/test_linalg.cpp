#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "prmforge/linalg.hpp"

using namespace prmforge;

TEST_CASE("matrix_rank examples") {
    const Field f = Field::of_order(4);
    CHECK(matrix_rank(f, Matrix::identity(3)) == 3);
    CHECK(matrix_rank(f, Matrix(3, 4)) == 0);
    CHECK(matrix_rank(f, Matrix::from_rows({{1, 2, 3}, {2, 3, 1}})) == 1);  // second row = 2 * first
}

TEST_CASE("rank agrees with span counting on random matrices") {
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        const Field f = Field::of_order(q);
        std::mt19937 rng(q);
        std::uniform_int_distribution<Element> pick(0, q - 1);
        for (int t = 0; t < 40; ++t) {
            const std::size_t rows = 1 + t % 4, cols = 1 + (t / 4) % 5;
            std::vector<std::vector<Element>> data(rows, std::vector<Element>(cols));
            for (auto& row : data) {
                for (auto& x : row) x = pick(rng) % (t % 3 == 0 ? 2 : q);
            }
            REQUIRE(matrix_rank(f, Matrix::from_rows(data)) == oracle::rank_by_span(f, data));
        }
    }
}

TEST_CASE("rref is reduced and preserves the row space") {
    const Field f = Field::of_order(5);
    const Matrix m = Matrix::from_rows({{0, 2, 4, 1}, {1, 1, 0, 3}, {1, 3, 4, 4}});
    const auto ef = rref(f, m);
    REQUIRE(ef.pivots.size() == ef.reduced.rows());
    for (std::size_t i = 0; i < ef.pivots.size(); ++i) {
        for (std::size_t r = 0; r < ef.reduced.rows(); ++r) CHECK(ef.reduced(r, ef.pivots[i]) == (r == i ? 1u : 0u));
    }
    auto rows = m.to_rows();
    auto both = rows;
    for (const auto& r : ef.reduced.to_rows()) both.push_back(r);
    CHECK(oracle::span_size(f, rows) == oracle::span_size(f, both));
    CHECK(oracle::span_size(f, ef.reduced.to_rows()) == oracle::span_size(f, rows));
}

TEST_CASE("IncrementalBasis") {
    const Field f = Field::of_order(3);
    IncrementalBasis b(f, 3);
    const std::vector<Element> u{1, 2, 0}, v{0, 1, 1}, w{1, 0, 1};  // w = u + v
    CHECK(b.insert(u));
    CHECK(b.insert(v));
    CHECK(b.in_span(w));
    CHECK_FALSE(b.insert(w));
    CHECK(b.size() == 2);
    b.pop();
    CHECK_FALSE(b.in_span(w));
    CHECK(b.insert(w));
}
