#ifndef PRMFORGE_COMBINATORICS_HPP
#define PRMFORGE_COMBINATORICS_HPP

#include <cstdint>
#include <limits>

namespace prmforge {

/// Saturating unsigned arithmetic; anything past the limit pins to max().
inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

constexpr std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept {
    if (a == 0 || b == 0) return 0;
    if (a > kSaturated / b) return kSaturated;
    return a * b;
}

constexpr std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) noexcept {
    return (a > kSaturated - b) ? kSaturated : a + b;
}

/// base^exp as a signed 64-bit integer. Callers keep the result in range.
constexpr std::int64_t ipow(std::int64_t base, unsigned exp) noexcept {
    std::int64_t r = 1;
    while (exp != 0) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

/// Binomial coefficient with C(a,b) = 0 whenever b < 0 or a < b.
std::int64_t binomial(std::int64_t a, std::int64_t b) noexcept;

/// Same as binomial() but saturating, for feasibility estimates.
std::uint64_t binomial_sat(std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace prmforge

#endif
