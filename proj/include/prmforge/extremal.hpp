/**
 * @file extremal.hpp
 * @brief Explicit extremal polynomial systems and the Veronese line checker.
 *
 * Every WitnessSystem is checked on construction: its polynomials are
 * linearly independent and a brute-force count of their common projective
 * zeros equals claimed_count.
 */

#ifndef PRMFORGE_EXTREMAL_HPP
#define PRMFORGE_EXTREMAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prmforge/gf.hpp"
#include "prmforge/poly.hpp"
#include "prmforge/pspace.hpp"

namespace prmforge {

enum class WitnessKind { pencil, two_lines, custom };
std::string to_string(WitnessKind kind);

struct WitnessSystem {
    std::vector<Polynomial> polys;  // r forms of degree d in x_0..x_m
    unsigned d = 0;
    unsigned m = 0;
    std::int64_t claimed_count = 0;
    WitnessKind construction = WitnessKind::custom;
    std::string note;
};

/// Validates independence and the zero count; throws HypothesisViolated if
/// either fails.
WitnessSystem make_witness(const Field& field, std::vector<Polynomial> polys, unsigned d, unsigned m,
                           std::int64_t claimed_count, WitnessKind kind, std::string note = {});

/// r forms of degree d with (d-1) q^{m-1} + p_{m-2} + floor(q^{m-r}) common
/// zeros: F_1 = H G and F_i = L_i G, where G is a product of d-1 distinct
/// hyperplanes through {x_0 = x_1 = 0}, H = x_1 - beta x_0 is one more such
/// hyperplane, and L_i = x_i for 2 <= i <= m, with L_{m+1} = x_0.
/// Requires 2 <= d <= q, m >= 2 and 1 <= r <= m+1.
WitnessSystem build_pencil_witness(const Field& field, unsigned d, unsigned m, unsigned r);

/// The quadrics x_0^2, x_0x_1, x_0x_2, x_0x_3, x_1x_2 in P^3: two lines meeting
/// in a point, 2q+1 common zeros.
WitnessSystem build_five_quadrics_witness(const Field& field);

struct VeroneseImage {
    std::uint32_t q = 0;
    unsigned m = 0;
    unsigned d = 0;
    std::size_t k = 0;       // image lives in P^{k-1}
    PointList points{0, true};
    std::vector<std::vector<Element>> sorted;  // membership index
    bool contains(std::span<const Element> point) const;
};

/// Image of P^m(F_q) under the degree-d Veronese map (monomials in
/// descending lex order), normalized.
VeroneseImage veronese_image(const Field& field, unsigned d, unsigned m, std::uint64_t cap = kDefaultPointCap);

struct LineCheckResult {
    std::uint64_t lines_found = 0;
    std::optional<std::pair<ProjPoint, ProjPoint>> example;
};

/// Counts the projective lines of P^{k-1} fully contained in the image.
LineCheckResult veronese_line_check(const Field& field, const VeroneseImage& image);

}  // namespace prmforge

#endif
