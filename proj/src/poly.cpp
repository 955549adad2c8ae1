#include "prmforge/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "prmforge/combinatorics.hpp"
#include "prmforge/error.hpp"

namespace prmforge {

unsigned Monomial::degree() const noexcept { return std::accumulate(exponents.begin(), exponents.end(), 0u); }

namespace {

// Appends, in descending lex order, every vector whose tail from `pos` has
// sum exactly `remaining` (exact) or at most `remaining` (!exact).
void monomials_rec(std::vector<unsigned>& cur, std::size_t pos, unsigned remaining, bool exact,
                   std::vector<Monomial>& out) {
    if (pos + 1 == cur.size() && exact) {
        cur[pos] = remaining;
        out.push_back({cur});
        return;
    }
    if (pos == cur.size()) {
        out.push_back({cur});
        return;
    }
    for (unsigned v = remaining + 1; v-- > 0;) {
        cur[pos] = v;
        monomials_rec(cur, pos + 1, remaining - v, exact, out);
    }
    cur[pos] = 0;
}

std::uint64_t compositions(std::uint64_t total, std::uint64_t parts) {
    if (parts == 0) return total == 0 ? 1 : 0;
    return binomial_sat(total + parts - 1, parts - 1);
}

}  // namespace

std::vector<Monomial> enumerate_monomials(unsigned m, unsigned d, MonomialMode mode) {
    std::vector<Monomial> out;
    const bool exact = mode == MonomialMode::homogeneous;
    const unsigned nvars = exact ? m + 1 : m;
    std::vector<unsigned> cur(nvars, 0);
    if (nvars == 0) {
        out.push_back({cur});
        return out;
    }
    monomials_rec(cur, 0, d, exact, out);
    return out;
}

Monomial unrank_composition(std::uint64_t r, unsigned d, unsigned parts) {
    const std::uint64_t total = compositions(d, parts);
    if (parts == 0 || r < 1 || r > total) {
        throw RankOutOfRange("rank " + std::to_string(r) + " outside 1.." + std::to_string(total));
    }
    Monomial out{std::vector<unsigned>(parts, 0)};
    unsigned remaining = d;
    for (unsigned i = 0; i + 1 < parts; ++i) {
        // Largest value first: the block of tuples with out[i] = v has
        // compositions(remaining - v, parts - i - 1) members.
        for (unsigned v = remaining + 1; v-- > 0;) {
            const std::uint64_t block = compositions(remaining - v, parts - i - 1);
            if (r <= block) {
                out.exponents[i] = v;
                remaining -= v;
                break;
            }
            r -= block;
        }
    }
    out.exponents[parts - 1] = remaining;
    return out;
}

void Polynomial::add_term(const Field& field, const Monomial& mono, Element c) {
    if (mono.exponents.size() != nvars_) throw DimensionMismatch("monomial has wrong variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second = field.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

unsigned Polynomial::total_degree() const noexcept {
    unsigned d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
    return d;
}

bool Polynomial::is_homogeneous(unsigned d) const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

Polynomial Polynomial::times(const Field& field, const Polynomial& other) const {
    if (other.nvars_ != nvars_) throw DimensionMismatch("product of polynomials in different rings");
    Polynomial out(nvars_);
    Monomial prod{std::vector<unsigned>(nvars_)};
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            for (unsigned i = 0; i < nvars_; ++i) prod.exponents[i] = ma.exponents[i] + mb.exponents[i];
            out.add_term(field, prod, field.mul(ca, cb));
        }
    }
    return out;
}

Polynomial Polynomial::linear_form(const Field& field, std::span<const Element> coeffs) {
    const auto n = static_cast<unsigned>(coeffs.size());
    Polynomial out(n);
    for (unsigned i = 0; i < n; ++i) {
        Monomial mono{std::vector<unsigned>(n, 0)};
        mono.exponents[i] = 1;
        out.add_term(field, mono, coeffs[i]);
    }
    return out;
}

std::string format_polynomial(const Polynomial& poly) {
    if (poly.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
        if (!first) out << " + ";
        first = false;
        out << it->second << ':';
        for (std::size_t i = 0; i < it->first.exponents.size(); ++i) {
            if (i != 0) out << ',';
            out << it->first.exponents[i];
        }
    }
    return out.str();
}

namespace {

std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

unsigned parse_uint(const std::string& tok, const std::string& context) {
    const std::string t = strip(tok);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("bad integer '" + tok + "' in " + context);
    }
    try {
        return static_cast<unsigned>(std::stoul(t));
    } catch (const std::out_of_range&) {
        throw ParseError("integer '" + tok + "' out of range in " + context);
    }
}

}  // namespace

Polynomial parse_polynomial(const Field& field, const std::string& text, unsigned nvars) {
    const std::string body = strip(text);
    if (body.empty()) throw ParseError("empty polynomial");
    if (body == "0") return Polynomial(nvars);

    std::vector<std::pair<Element, Monomial>> parsed;
    std::istringstream terms(body);
    std::string term;
    while (std::getline(terms, term, '+')) {
        const auto colon = term.find(':');
        if (colon == std::string::npos) throw ParseError("term '" + strip(term) + "' lacks ':'");
        const unsigned c = parse_uint(term.substr(0, colon), "coefficient");
        if (c >= field.q()) throw ParseError("coefficient " + std::to_string(c) + " not in GF(" + std::to_string(field.q()) + ")");
        Monomial mono;
        std::istringstream exps(term.substr(colon + 1));
        std::string e;
        while (std::getline(exps, e, ',')) mono.exponents.push_back(parse_uint(e, "exponent list"));
        if (mono.exponents.empty()) throw ParseError("term '" + strip(term) + "' has no exponents");
        parsed.emplace_back(c, std::move(mono));
    }
    if (nvars == 0) nvars = static_cast<unsigned>(parsed.front().second.exponents.size());
    Polynomial out(nvars);
    for (const auto& [c, mono] : parsed) {
        if (mono.exponents.size() != nvars) throw ParseError("inconsistent variable count in polynomial");
        out.add_term(field, mono, c);
    }
    return out;
}

Element evaluate(const Field& field, const Polynomial& poly, std::span<const Element> point) {
    if (point.size() != poly.nvars()) throw DimensionMismatch("point and polynomial variable counts differ");
    Element sum = 0;
    for (const auto& [mono, c] : poly.terms()) {
        Element v = c;
        for (std::size_t i = 0; i < point.size() && v != 0; ++i) {
            if (mono.exponents[i] != 0) v = field.mul(v, field.pow(point[i], mono.exponents[i]));
        }
        sum = field.add(sum, v);
    }
    return sum;
}

Matrix evaluation_matrix(const Field& field, std::span<const Monomial> basis, const PointList& points) {
    if (basis.empty() || points.size() == 0) throw DimensionMismatch("evaluation matrix needs a basis and points");
    const std::size_t nv = points.dim();
    unsigned maxexp = 0;
    for (const auto& mono : basis) {
        if (mono.exponents.size() != nv) throw DimensionMismatch("monomial and point dimensions differ");
        for (unsigned e : mono.exponents) maxexp = std::max(maxexp, e);
    }
    Matrix out(basis.size(), points.size());
    std::vector<Element> powers(nv * (maxexp + 1));
    for (std::size_t j = 0; j < points.size(); ++j) {
        const auto pt = points[j];
        for (std::size_t v = 0; v < nv; ++v) {
            Element x = 1;
            for (unsigned e = 0; e <= maxexp; ++e) {
                powers[v * (maxexp + 1) + e] = x;
                x = field.mul(x, pt[v]);
            }
        }
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Element val = 1;
            for (std::size_t v = 0; v < nv && val != 0; ++v) {
                val = field.mul(val, powers[v * (maxexp + 1) + basis[i].exponents[v]]);
            }
            out(i, j) = val;
        }
    }
    return out;
}

std::vector<Element> value_vector(const Field& field, const Polynomial& poly, const PointList& points) {
    std::vector<Element> out(points.size(), 0);
    if (poly.is_zero()) return out;
    std::vector<Monomial> monos;
    std::vector<Element> coeffs;
    for (const auto& [mono, c] : poly.terms()) {
        monos.push_back(mono);
        coeffs.push_back(c);
    }
    const Matrix ev = evaluation_matrix(field, monos, points);
    for (std::size_t i = 0; i < monos.size(); ++i) axpy(field, coeffs[i], ev.row(i), out);
    return out;
}

std::vector<Element> coefficient_vector(const Polynomial& poly, std::span<const Monomial> basis) {
    std::vector<Element> out(basis.size(), 0);
    for (const auto& [mono, c] : poly.terms()) {
        const auto it = std::find(basis.begin(), basis.end(), mono);
        if (it == basis.end()) throw DimensionMismatch("polynomial term outside the monomial basis");
        out[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return out;
}

Polynomial from_coefficients(const Field& field, std::span<const Monomial> basis, std::span<const Element> coeffs) {
    if (basis.size() != coeffs.size()) throw DimensionMismatch("coefficient count differs from basis size");
    Polynomial out(basis.empty() ? 0 : static_cast<unsigned>(basis.front().exponents.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) out.add_term(field, basis[i], coeffs[i]);
    return out;
}

Polynomial random_polynomial(const Field& field, unsigned m, unsigned d, MonomialMode mode, std::mt19937_64& rng) {
    const auto basis = enumerate_monomials(m, d, mode);
    std::uniform_int_distribution<Element> coeff(0, field.q() - 1);
    std::vector<Element> c(basis.size());
    do {
        for (auto& x : c) x = coeff(rng);
    } while (std::all_of(c.begin(), c.end(), [](Element x) { return x == 0; }));
    return from_coefficients(field, basis, c);
}

namespace {

std::vector<bool> common_zero_mask(const Field& field, const std::vector<Polynomial>& polys, const PointList& points) {
    std::vector<bool> zero(points.size(), true);
    for (const auto& poly : polys) {
        if (poly.nvars() != points.dim()) throw DimensionMismatch("polynomial variable count does not match space");
        const auto vals = value_vector(field, poly, points);
        for (std::size_t j = 0; j < vals.size(); ++j) {
            if (vals[j] != 0) zero[j] = false;
        }
    }
    return zero;
}

}  // namespace

ZeroSet count_projective_zeros(const Field& field, const std::vector<Polynomial>& polys, unsigned m,
                               std::uint64_t cap) {
    for (const auto& poly : polys) {
        if (!poly.is_homogeneous(poly.total_degree())) throw DimensionMismatch("polynomial is not homogeneous");
    }
    const PointList points = enumerate_projective_points(field, m, cap);
    const auto zero = common_zero_mask(field, polys, points);
    ZeroSet out{0, PointList(m + 1, true)};
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (zero[j]) {
            ++out.count;
            out.points.push_back(points[j]);
        }
    }
    return out;
}

std::uint64_t count_affine_zeros(const Field& field, const std::vector<Polynomial>& polys, unsigned m,
                                 std::uint64_t cap) {
    const PointList points = enumerate_affine_points(field, m, cap);
    const auto zero = common_zero_mask(field, polys, points);
    return static_cast<std::uint64_t>(std::count(zero.begin(), zero.end(), true));
}

}  // namespace prmforge
