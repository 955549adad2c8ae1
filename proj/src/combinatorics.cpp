#include "prmforge/combinatorics.hpp"

namespace prmforge {

std::int64_t binomial(std::int64_t a, std::int64_t b) noexcept {
    if (b < 0 || a < b) return 0;
    if (b > a - b) b = a - b;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

std::uint64_t binomial_sat(std::uint64_t a, std::uint64_t b) noexcept {
    if (a < b) return 0;
    if (b > a - b) b = a - b;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        r = r * (a - b + i) / i;
        if (r > kSaturated) return kSaturated;
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace prmforge
