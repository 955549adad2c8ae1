#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "prmforge/bounds.hpp"
#include "prmforge/combinatorics.hpp"
#include "prmforge/error.hpp"
#include "prmforge/hweights.hpp"
#include "prmforge/pspace.hpp"

using namespace prmforge;

namespace {

// T_r(d,m) straight from the definition, with the compositions listed and
// sorted rather than unranked.
std::int64_t tbc_reference(std::int64_t q, unsigned d, unsigned m, std::uint64_t r) {
    std::vector<std::vector<unsigned>> all;
    const std::uint64_t total = oracle::power(d + 1, m + 1);
    for (std::uint64_t c = 0; c < total; ++c) {
        std::vector<unsigned> v(m + 1);
        std::uint64_t x = c;
        unsigned sum = 0;
        for (unsigned i = 0; i <= m; ++i, x /= d + 1) sum += v[i] = static_cast<unsigned>(x % (d + 1));
        if (sum == d) all.push_back(v);
    }
    std::sort(all.rbegin(), all.rend());
    const auto& nu = all.at(r - 1);
    std::int64_t j = 1;
    while (nu[j - 1] == 0) ++j;
    std::int64_t t = p_k(q, static_cast<std::int64_t>(m) - 2 * j);
    for (std::int64_t i = j; i <= static_cast<std::int64_t>(m); ++i) {
        t += nu[i - 1] * (p_k(q, static_cast<std::int64_t>(m) - i) - p_k(q, static_cast<std::int64_t>(m) - i - j));
    }
    return t;
}

std::int64_t qpow(std::int64_t q, std::int64_t e) { return e < 0 ? 0 : ipow(q, static_cast<unsigned>(e)); }

}  // namespace

TEST_CASE("tbc_bound examples") {
    for (std::int64_t q : {4, 5, 7, 8}) CHECK(tbc_bound(q, 2, 3, 5) == 2 * (q + 1));
    CHECK(tbc_bound(4, 2, 3, 5) == 10);
    CHECK(tbc_bound(4, 2, 2, 6) == 0);
    CHECK(tbc_bound(4, 1, 3, 2) == 5);
    CHECK_THROWS_AS(tbc_bound(4, 2, 2, 7), RankOutOfRange);
}

TEST_CASE("tbc_bound against the definition") {
    for (std::int64_t q : {3, 4, 5, 7}) {
        for (unsigned d = 1; d <= 4; ++d) {
            for (unsigned m = 1; m <= 4; ++m) {
                const auto k = static_cast<std::uint64_t>(binomial(m + d, d));
                for (std::uint64_t r = 1; r <= k; ++r) REQUIRE(tbc_bound(q, d, m, r) == tbc_reference(q, d, m, r));
            }
        }
    }
}

TEST_CASE("T_r identities on the grid") {
    for (std::int64_t q : {4, 5, 7, 8}) {
        for (unsigned d = 1; d <= 6; ++d) {
            for (unsigned m = 1; m <= 6; ++m) {
                CAPTURE(q);
                CAPTURE(d);
                CAPTURE(m);
                for (unsigned r = 1; r <= m + 1; ++r) CHECK(tbc_bound(q, d, m, r) == tbc_simplified(q, d, m, r));
                if (static_cast<std::int64_t>(d) <= q + 1) CHECK(tbc_bound(q, d, m, 1) == serre_bound(q, d, m));
                CHECK(tbc_bound(q, d, m, 1) == d * qpow(q, m - 1) + p_k(q, static_cast<std::int64_t>(m) - 2));
                const auto k = binomial(m + d, d);
                if (static_cast<std::int64_t>(d) < q - 1) {
                    for (unsigned s = 0; s <= d; ++s) {
                        CHECK(tbc_bound(q, d, m, k - s) == s);
                        CHECK(terminal_er(q, d, m, s) == s);
                    }
                }
                if (static_cast<std::int64_t>(d) < q) {
                    for (unsigned r = 1; r <= m + 1; ++r) CHECK(hp_value(q, d, m, r) <= affine_monotone_bound(q, d, m, r));
                }
            }
        }
    }
}

TEST_CASE("tbc_simplified") {
    CHECK(tbc_simplified(4, 1, 3, 2) == 5);
    CHECK(tbc_simplified(4, 2, 2, 3) == tbc_bound(4, 2, 2, 3));
    CHECK(tbc_simplified(4, 2, 2, 3) == 5);
    CHECK(tbc_simplified(4, 2, 3, 3) == tbc_bound(4, 2, 3, 3));
    CHECK_THROWS_AS(tbc_simplified(4, 2, 2, 4), RankOutOfRange);
}

TEST_CASE("zanella_bound") {
    for (std::int64_t q : {2, 3, 4, 5, 7, 8}) {
        CHECK(zanella_bound(q, 3, 5) == 2 * q + 1);
        for (unsigned m = 1; m <= 6; ++m) {
            CHECK(zanella_bound(q, m, 1) == serre_bound(q, 2, m));
            CHECK(zanella_bound(q, m, zanella_delta(m)) == 0);
        }
    }
    for (std::int64_t q : {4, 5, 7, 8}) CHECK(zanella_bound(q, 3, 5) == tbc_bound(q, 2, 3, 5) - 1);
    CHECK(zanella_delta(-1) == 0);
    CHECK(zanella_delta(3) == 10);
    CHECK_THROWS_AS(zanella_bound(4, 3, 11), RankOutOfRange);
}

TEST_CASE("bounds with hypotheses") {
    CHECK(hp_value(5, 2, 2, 1) == 10);
    CHECK(hp_value(5, 2, 2, 3) == 5);
    CHECK(hp_value(4, 2, 2, 2) == 5);
    CHECK(hp_value(4, 2, 2, 2) == er_exhaustive(Field::of_order(4), 2, 2, 2, Space::affine).value);
    CHECK_THROWS_AS(hp_value(4, 4, 2, 1), HypothesisViolated);

    CHECK(serre_bound(4, 2, 2) == 9);
    CHECK(serre_bound(4, 1, 2) == 5);
    CHECK(ore_bound(4, 2, 2) == 8);
    CHECK_THROWS_AS(serre_bound(4, 6, 2), HypothesisViolated);
    CHECK_THROWS_AS(ore_bound(4, 5, 2), HypothesisViolated);

    CHECK(affine_monotone_bound(4, 2, 2, 1) == 8);
    CHECK(affine_monotone_bound(4, 2, 2, 1) == ore_bound(4, 2, 2));
    CHECK(affine_monotone_bound(4, 2, 2, 6) == 3);
    CHECK(affine_monotone_bound(5, 2, 2, 2) == 9);
    CHECK(er_exhaustive(Field::of_order(5), 2, 2, 2, Space::affine).value == 6);

    CHECK(terminal_er(4, 2, 2, 0) == 0);
    CHECK(terminal_er(4, 2, 2, 2) == 2);
    CHECK(terminal_er(5, 3, 2, 3) == 3);
    CHECK_THROWS_AS(terminal_er(4, 3, 2, 1), HypothesisViolated);
    CHECK_THROWS_AS(terminal_er(4, 2, 2, 3), HypothesisViolated);

    CHECK(er_upto3_formula(4, 2, 2, 1) == 9);
    CHECK(er_upto3_formula(4, 2, 2, 2) == 6);
    CHECK(er_upto3_formula(4, 2, 2, 3) == 5);
    CHECK_THROWS_AS(er_upto3_formula(4, 2, 2, 4), HypothesisViolated);
    CHECK_THROWS_AS(er_upto3_formula(4, 3, 2, 1), HypothesisViolated);
    CHECK_THROWS_AS(er_upto3_formula(4, 1, 2, 1), HypothesisViolated);
}

namespace {

const BoundReport& entry(const std::vector<BoundReport>& rep, const std::string& name) {
    const auto it = std::find_if(rep.begin(), rep.end(), [&](const BoundReport& b) { return b.name == name; });
    REQUIRE(it != rep.end());
    return *it;
}

}  // namespace

TEST_CASE("compare_report") {
    const auto refuted = compare_report(4, 2, 3, 5);
    CHECK(entry(refuted, "tbc").value == 10);
    CHECK(entry(refuted, "zanella").value == 9);
    CHECK(entry(refuted, "witness").value == 9);
    CHECK(entry(refuted, "tbc_status").reason.rfind("TBC refuted at (d,m,r)=(2,3,5)", 0) == 0);

    const auto ok = compare_report(4, 2, 2, 3);
    CHECK(entry(ok, "tbc").value == 5);
    CHECK(entry(ok, "er_upto3").value == 5);
    CHECK(entry(ok, "exhaustive").value == 5);
    CHECK(entry(ok, "tbc_status").reason == "consistent: e_r = T_r = 5");

    const auto line = compare_report(4, 1, 2, 1);
    CHECK(entry(line, "tbc").value == 5);
    CHECK(entry(line, "exhaustive").value == 5);
    CHECK(entry(line, "tbc_status").reason == "consistent: e_r = T_r = 5");

    const auto na = compare_report(4, 3, 2, 1);
    CHECK_FALSE(entry(na, "tbc").applicable);
    CHECK_FALSE(entry(na, "tbc").value.has_value());
    CHECK(entry(na, "tbc_status").reason.rfind("TBC not applicable", 0) == 0);
}
