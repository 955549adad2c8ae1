/**
 * @file bounds.hpp
 * @brief Closed-form values and bounds for e_r(d,m) and its affine analogue.
 *
 * Each function throws HypothesisViolated (or RankOutOfRange for bad r)
 * instead of evaluating outside the hypotheses under which its value is a
 * theorem. compare_report() collects all of them, with applicability flags,
 * next to searched values and explicit witnesses.
 */

#ifndef PRMFORGE_BOUNDS_HPP
#define PRMFORGE_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace prmforge {

/// Conjectured value T_r(d,m), computed from the r-th composition of
/// d into m+1 parts. Defined for 1 <= r <= C(m+d,d).
std::int64_t tbc_bound(std::int64_t q, unsigned d, unsigned m, std::uint64_t r);

/// Whether the conjecture's own hypothesis d < q-1 holds.
constexpr bool tbc_hypothesis(std::int64_t q, unsigned d) noexcept { return static_cast<std::int64_t>(d) < q - 1; }

/// Closed form of T_r(d,m) valid for 1 <= r <= m+1.
std::int64_t tbc_simplified(std::int64_t q, unsigned d, unsigned m, unsigned r);

/// delta_j = 1 + 2 + ... + (j+1), with delta_{-1} = 0.
constexpr std::int64_t zanella_delta(std::int64_t j) noexcept { return (j + 1) * (j + 2) / 2; }

/// Upper bound for r quadrics in P^m, 1 <= r <= delta_m.
std::int64_t zanella_bound(std::int64_t q, unsigned m, std::uint64_t r);

/// (d-1) q^{m-1} + floor(q^{m-r}); requires d < q and 1 <= r <= m+1.
std::int64_t hp_value(std::int64_t q, unsigned d, unsigned m, unsigned r);

/// d q^{m-1} + p_{m-2}; requires d <= q+1.
std::int64_t serre_bound(std::int64_t q, unsigned d, unsigned m);

/// d q^{m-1}; requires d <= q.
std::int64_t ore_bound(std::int64_t q, unsigned d, unsigned m);

/// d q^{m-1} - r + 1; requires d < q and 1 <= r <= C(m+d,d).
std::int64_t affine_monotone_bound(std::int64_t q, unsigned d, unsigned m, std::uint64_t r);

/// Exact e_{k-s}(d,m) = s; requires 0 <= s <= d and d < q-1.
std::int64_t terminal_er(std::int64_t q, unsigned d, unsigned m, unsigned s);

/// Exact e_r(d,m) for r <= 3: (d-1) q^{m-1} + p_{m-2} + floor(q^{m-r});
/// requires 1 < d < q-1 and m > 1.
std::int64_t er_upto3_formula(std::int64_t q, unsigned d, unsigned m, unsigned r);

struct BoundReport {
    std::string name;
    std::optional<std::int64_t> value;  // present only when applicable
    bool applicable = false;
    std::string reason;
};

struct ReportOptions {
    unsigned threads = 1;
    /// Exhaustive search runs only below this [k choose r]_q * n cost.
    std::uint64_t search_cost_cap = 200'000'000;
};

/// Every bound and formula for (q,d,m,r), the exhaustive value when cheap,
/// an explicit witness when one is known, and a final "tbc_status" entry
/// saying whether T_r(d,m) is confirmed, refuted, or undetermined.
std::vector<BoundReport> compare_report(std::int64_t q, unsigned d, unsigned m, unsigned r,
                                        const ReportOptions& options = {});

}  // namespace prmforge

#endif
