#include "prmforge/bounds.hpp"

#include "prmforge/combinatorics.hpp"
#include "prmforge/error.hpp"
#include "prmforge/poly.hpp"
#include "prmforge/pspace.hpp"

namespace prmforge {

namespace {

// floor(q^e) for possibly negative e, q >= 2.
std::int64_t floor_qpow(std::int64_t q, std::int64_t e) { return e < 0 ? 0 : ipow(q, static_cast<unsigned>(e)); }

std::string fmt(const char* name, std::int64_t q, unsigned d, unsigned m) {
    return std::string(name) + " (q=" + std::to_string(q) + ", d=" + std::to_string(d) + ", m=" + std::to_string(m) + ")";
}

}  // namespace

std::int64_t tbc_bound(std::int64_t q, unsigned d, unsigned m, std::uint64_t r) {
    const Monomial nu = unrank_composition(r, d, m + 1);
    // nu is indexed 1..m+1 in the formula; j is the first nonzero index.
    std::int64_t j = 1;
    while (j <= m + 1 && nu.exponents[static_cast<std::size_t>(j - 1)] == 0) ++j;
    std::int64_t t = p_k(q, m - 2 * j);
    for (std::int64_t i = j; i <= m; ++i) {
        t += nu.exponents[static_cast<std::size_t>(i - 1)] * (p_k(q, m - i) - p_k(q, m - i - j));
    }
    return t;
}

std::int64_t tbc_simplified(std::int64_t q, unsigned d, unsigned m, unsigned r) {
    if (r < 1 || r > m + 1) throw RankOutOfRange("tbc_simplified needs 1 <= r <= m+1");
    if (d == 0) throw HypothesisViolated("degree must be positive");
    if (d == 1) return p_k(q, static_cast<std::int64_t>(m) - r);
    return (d - 1) * floor_qpow(q, static_cast<std::int64_t>(m) - 1) + p_k(q, static_cast<std::int64_t>(m) - 2) +
           floor_qpow(q, static_cast<std::int64_t>(m) - r);
}

std::int64_t zanella_bound(std::int64_t q, unsigned m, std::uint64_t r) {
    const std::int64_t dm = zanella_delta(m);
    if (r < 1 || static_cast<std::int64_t>(r) > dm) {
        throw RankOutOfRange("zanella_bound needs 1 <= r <= " + std::to_string(dm));
    }
    const auto rr = static_cast<std::int64_t>(r);
    for (std::int64_t k = -1; k < static_cast<std::int64_t>(m); ++k) {
        if (dm - zanella_delta(k + 1) < rr && rr <= dm - zanella_delta(k)) {
            const std::int64_t eps = dm - zanella_delta(k) - rr;
            return p_k(q, k) + floor_qpow(q, eps - 1);
        }
    }
    throw RankOutOfRange("no k brackets r");  // unreachable for valid r
}

std::int64_t hp_value(std::int64_t q, unsigned d, unsigned m, unsigned r) {
    if (static_cast<std::int64_t>(d) >= q || d < 1) throw HypothesisViolated(fmt("hp_value needs 1 <= d < q", q, d, m));
    if (r < 1 || r > m + 1) throw HypothesisViolated("hp_value needs 1 <= r <= m+1");
    return (d - 1) * floor_qpow(q, static_cast<std::int64_t>(m) - 1) + floor_qpow(q, static_cast<std::int64_t>(m) - r);
}

std::int64_t serre_bound(std::int64_t q, unsigned d, unsigned m) {
    if (static_cast<std::int64_t>(d) > q + 1) throw HypothesisViolated(fmt("Serre bound needs d <= q+1", q, d, m));
    return d * floor_qpow(q, static_cast<std::int64_t>(m) - 1) + p_k(q, static_cast<std::int64_t>(m) - 2);
}

std::int64_t ore_bound(std::int64_t q, unsigned d, unsigned m) {
    if (static_cast<std::int64_t>(d) > q) throw HypothesisViolated(fmt("Ore bound needs d <= q", q, d, m));
    return d * floor_qpow(q, static_cast<std::int64_t>(m) - 1);
}

std::int64_t affine_monotone_bound(std::int64_t q, unsigned d, unsigned m, std::uint64_t r) {
    if (d < 1 || static_cast<std::int64_t>(d) >= q) throw HypothesisViolated(fmt("affine bound needs 1 <= d < q", q, d, m));
    const std::int64_t k = binomial(m + d, d);
    if (r < 1 || static_cast<std::int64_t>(r) > k) throw HypothesisViolated("affine bound needs 1 <= r <= C(m+d,d)");
    return d * floor_qpow(q, static_cast<std::int64_t>(m) - 1) - static_cast<std::int64_t>(r) + 1;
}

std::int64_t terminal_er(std::int64_t q, unsigned d, unsigned m, unsigned s) {
    if (!tbc_hypothesis(q, d) || d < 1) throw HypothesisViolated(fmt("terminal values need 1 <= d < q-1", q, d, m));
    if (s > d) throw HypothesisViolated("terminal values need 0 <= s <= d");
    return s;
}

std::int64_t er_upto3_formula(std::int64_t q, unsigned d, unsigned m, unsigned r) {
    if (r < 1 || r > 3) throw HypothesisViolated("formula covers 1 <= r <= 3");
    if (d <= 1 || !tbc_hypothesis(q, d)) throw HypothesisViolated(fmt("formula needs 1 < d < q-1", q, d, m));
    if (m <= 1) throw HypothesisViolated("formula needs m > 1");
    return (d - 1) * floor_qpow(q, static_cast<std::int64_t>(m) - 1) + p_k(q, static_cast<std::int64_t>(m) - 2) +
           floor_qpow(q, static_cast<std::int64_t>(m) - r);
}

}  // namespace prmforge
