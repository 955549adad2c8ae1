#include "prmforge/pspace.hpp"

#include <algorithm>

#include "prmforge/combinatorics.hpp"
#include "prmforge/error.hpp"

namespace prmforge {

std::int64_t p_k(std::int64_t q, std::int64_t k) noexcept {
    if (k < 0) return 0;
    std::int64_t sum = 0;
    std::int64_t term = 1;
    for (std::int64_t i = 0; i <= k; ++i) {
        sum += term;
        term *= q;
    }
    return sum;
}

void PointList::push_back(std::span<const Element> point) {
    if (point.size() != dim_) throw DimensionMismatch("point has wrong coordinate count");
    if (dim_ == 0) {
        ++count_;
        return;
    }
    coords_.insert(coords_.end(), point.begin(), point.end());
}

std::vector<ProjPoint> PointList::to_proj() const {
    std::vector<ProjPoint> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back({{(*this)[i].begin(), (*this)[i].end()}});
    return out;
}

std::vector<AffPoint> PointList::to_aff() const {
    std::vector<AffPoint> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back({{(*this)[i].begin(), (*this)[i].end()}});
    return out;
}

bool normalize_projective(const Field& field, std::span<Element> v) {
    auto lead = std::find_if(v.begin(), v.end(), [](Element x) { return x != 0; });
    if (lead == v.end()) return false;
    if (*lead != 1) {
        const Element inv = field.inv(*lead);
        for (auto it = lead; it != v.end(); ++it) *it = field.mul(*it, inv);
    }
    return true;
}

namespace {

// Advances the tail of v (positions >= from) as a base-q counter, last
// coordinate fastest. Returns false after the final tuple.
bool next_tuple(std::span<Element> v, std::size_t from, std::uint32_t q) {
    for (std::size_t i = v.size(); i-- > from;) {
        if (++v[i] < q) return true;
        v[i] = 0;
    }
    return false;
}

void check_cap(std::uint64_t count, std::uint64_t cap) {
    if (count > cap) {
        throw SizeOverflow("enumeration of " + std::to_string(count) + " points exceeds cap " + std::to_string(cap));
    }
}

}  // namespace

PointList enumerate_projective_points(const Field& field, unsigned m, std::uint64_t cap) {
    const std::uint32_t q = field.q();
    std::uint64_t count = 0;
    for (unsigned i = 0; i <= m; ++i) count = sat_add(sat_mul(count, q), 1);
    check_cap(count, cap);

    PointList out(m + 1, true);
    std::vector<Element> v(m + 1, 0);
    // Ascending lex order: the leading 1 moves from the last position to the first.
    for (std::size_t lead = m + 1; lead-- > 0;) {
        std::fill(v.begin(), v.end(), 0);
        v[lead] = 1;
        do {
            out.push_back(v);
        } while (next_tuple(v, lead + 1, q));
    }
    return out;
}

PointList enumerate_affine_points(const Field& field, unsigned m, std::uint64_t cap) {
    const std::uint32_t q = field.q();
    std::uint64_t count = 1;
    for (unsigned i = 0; i < m; ++i) count = sat_mul(count, q);
    check_cap(count, cap);

    PointList out(m, false);
    std::vector<Element> v(m, 0);
    do {
        out.push_back(v);
    } while (next_tuple(v, 0, q));
    return out;
}

PointList enumerate_hyperplanes(const Field& field, unsigned m, std::uint64_t cap) {
    if (m < 1) throw DimensionMismatch("hyperplanes need m >= 1");
    return enumerate_projective_points(field, m, cap);
}

Element dot(const Field& field, std::span<const Element> a, std::span<const Element> b) noexcept {
    Element s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = field.add(s, field.mul(a[i], b[i]));
    return s;
}

SetBoundCheck zanella_set_check(const Field& field, unsigned m, const std::vector<ProjPoint>& points) {
    SetBoundCheck out;
    if (m >= 1) {
        const PointList hyperplanes = enumerate_hyperplanes(field, m);
        for (std::size_t h = 0; h < hyperplanes.size(); ++h) {
            std::int64_t hits = 0;
            for (const auto& pt : points) {
                if (pt.coords.size() != m + 1) throw DimensionMismatch("point not in P^m");
                hits += on_hyperplane(field, pt.coords, hyperplanes[h]) ? 1 : 0;
            }
            out.a = std::max(out.a, hits);
        }
    }
    out.bound = out.a * field.q() + 1;
    out.holds = static_cast<std::int64_t>(points.size()) <= out.bound;
    return out;
}

}  // namespace prmforge
