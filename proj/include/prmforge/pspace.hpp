/**
 * @file pspace.hpp
 * @brief Affine and projective point sets over GF(q).
 *
 * Projective points are stored by their normalized representative, whose first
 * nonzero coordinate is 1. All listings are in ascending lexicographic order
 * of the encoded coordinate vectors, and that order is the column order of
 * every generator matrix built from them.
 */

#ifndef PRMFORGE_PSPACE_HPP
#define PRMFORGE_PSPACE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "prmforge/gf.hpp"

namespace prmforge {

/// Default cap on the number of points any enumeration may produce.
inline constexpr std::uint64_t kDefaultPointCap = 10'000'000;

/// Number of points of P^k(F_q): q^k + ... + q + 1, and 0 for k < 0.
std::int64_t p_k(std::int64_t q, std::int64_t k) noexcept;

struct ProjPoint {
    std::vector<Element> coords;
    bool operator==(const ProjPoint&) const = default;
    auto operator<=>(const ProjPoint&) const = default;
};

struct AffPoint {
    std::vector<Element> coords;
    bool operator==(const AffPoint&) const = default;
    auto operator<=>(const AffPoint&) const = default;
};

/// Flat, immutable list of points with a common coordinate count.
class PointList {
   public:
    PointList(std::size_t dim, bool projective) : dim_(dim), projective_(projective) {}

    std::size_t size() const noexcept { return dim_ == 0 ? count_ : coords_.size() / dim_; }
    std::size_t dim() const noexcept { return dim_; }
    bool projective() const noexcept { return projective_; }
    std::span<const Element> operator[](std::size_t i) const noexcept { return {coords_.data() + i * dim_, dim_}; }

    void push_back(std::span<const Element> point);

    std::vector<ProjPoint> to_proj() const;
    std::vector<AffPoint> to_aff() const;

   private:
    std::size_t dim_;
    bool projective_;
    std::size_t count_ = 0;  // only used when dim_ == 0 (A^0 has one point)
    std::vector<Element> coords_;
};

/// Normalizes v in place so its first nonzero entry is 1; returns false for
/// the zero vector.
bool normalize_projective(const Field& field, std::span<Element> v);

/// The p_m(q) normalized points of P^m(F_q). Throws SizeOverflow past `cap`.
PointList enumerate_projective_points(const Field& field, unsigned m, std::uint64_t cap = kDefaultPointCap);

/// The q^m points of A^m(F_q).
PointList enumerate_affine_points(const Field& field, unsigned m, std::uint64_t cap = kDefaultPointCap);

/// Hyperplanes of P^m(F_q) as normalized coefficient vectors (same order as
/// the points).
PointList enumerate_hyperplanes(const Field& field, unsigned m, std::uint64_t cap = kDefaultPointCap);

/// Dot product a . b over the field.
Element dot(const Field& field, std::span<const Element> a, std::span<const Element> b) noexcept;

inline bool on_hyperplane(const Field& field, std::span<const Element> point, std::span<const Element> hyperplane) noexcept {
    return dot(field, point, hyperplane) == 0;
}

struct SetBoundCheck {
    std::int64_t a = 0;      // max |X ∩ Π| over hyperplanes Π
    std::int64_t bound = 1;  // a q + 1
    bool holds = true;       // |X| <= a q + 1
};

/// Largest hyperplane section of X and the resulting a q + 1 cardinality bound.
/// `holds` is a theorem; false means a bug.
SetBoundCheck zanella_set_check(const Field& field, unsigned m, const std::vector<ProjPoint>& points);

}  // namespace prmforge

#endif
