#include "prmforge/extremal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "prmforge/combinatorics.hpp"
#include "prmforge/error.hpp"
#include "prmforge/linalg.hpp"

namespace prmforge {

std::string to_string(WitnessKind kind) {
    switch (kind) {
        case WitnessKind::pencil: return "pencil";
        case WitnessKind::two_lines: return "two_lines";
        case WitnessKind::custom: return "custom";
    }
    return "custom";
}

WitnessSystem make_witness(const Field& field, std::vector<Polynomial> polys, unsigned d, unsigned m,
                           std::int64_t claimed_count, WitnessKind kind, std::string note) {
    const auto basis = enumerate_monomials(m, d, MonomialMode::homogeneous);
    Matrix coeffs;
    for (const auto& f : polys) {
        if (f.nvars() != m + 1 || !f.is_homogeneous(d) || f.is_zero()) {
            throw HypothesisViolated("witness polynomial is not a nonzero form of degree " + std::to_string(d));
        }
        coeffs.append_row(coefficient_vector(f, basis));
    }
    if (matrix_rank(field, coeffs) != polys.size()) throw HypothesisViolated("witness polynomials are dependent");
    const auto zeros = count_projective_zeros(field, polys, m);
    if (static_cast<std::int64_t>(zeros.count) != claimed_count) {
        throw HypothesisViolated("witness has " + std::to_string(zeros.count) + " common zeros, claimed " +
                                 std::to_string(claimed_count));
    }
    return {std::move(polys), d, m, claimed_count, kind, std::move(note)};
}

namespace {

Polynomial linear(const Field& field, unsigned nvars, std::initializer_list<std::pair<unsigned, Element>> terms) {
    std::vector<Element> c(nvars, 0);
    for (auto [var, coef] : terms) c[var] = coef;
    return Polynomial::linear_form(field, c);
}

}  // namespace

WitnessSystem build_pencil_witness(const Field& field, unsigned d, unsigned m, unsigned r) {
    const std::uint32_t q = field.q();
    if (d < 2 || d > q) throw HypothesisViolated("pencil witness needs 2 <= d <= q");
    if (m < 2) throw HypothesisViolated("pencil witness needs m >= 2");
    if (r < 1 || r > m + 1) throw HypothesisViolated("pencil witness needs 1 <= r <= m+1");

    // d scalars: the nonzero elements in encoded order, then 0 if d = q.
    std::vector<Element> scalars;
    for (Element a = 1; a < q && scalars.size() < d; ++a) scalars.push_back(a);
    if (scalars.size() < d) scalars.push_back(0);
    const Element beta = scalars.back();

    const unsigned nv = m + 1;
    Polynomial g = Polynomial::linear_form(field, std::vector<Element>(nv, 0));
    {
        Monomial one{std::vector<unsigned>(nv, 0)};
        g.add_term(field, one, 1);
    }
    for (unsigned j = 0; j + 1 < d; ++j) g = g.times(field, linear(field, nv, {{1, 1}, {0, field.neg(scalars[j])}}));

    std::vector<Polynomial> polys;
    polys.push_back(linear(field, nv, {{1, 1}, {0, field.neg(beta)}}).times(field, g));
    for (unsigned i = 2; i <= r; ++i) {
        const unsigned var = i <= m ? i : 0;  // r = m+1 closes the last affine point with x_0
        polys.push_back(linear(field, nv, {{var, 1}}).times(field, g));
    }
    const std::int64_t claimed = (d - 1) * ipow(q, m - 1) + p_k(q, static_cast<std::int64_t>(m) - 2) +
                                 (r <= m ? ipow(q, m - r) : 0);
    return make_witness(field, std::move(polys), d, m, claimed, WitnessKind::pencil);
}

WitnessSystem build_five_quadrics_witness(const Field& field) {
    const std::vector<std::vector<unsigned>> exps{
        {2, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0},
    };
    std::vector<Polynomial> polys;
    for (const auto& e : exps) {
        Polynomial f(4);
        f.add_term(field, Monomial{e}, 1);
        polys.push_back(std::move(f));
    }
    const std::int64_t q = field.q();
    std::string note = q > 3 ? "refutes T_5(2,3) = 2(q+1) since d = 2 < q-1"
                             : "q <= 3: outside the conjecture's hypothesis d < q-1";
    return make_witness(field, std::move(polys), 2, 3, 2 * q + 1, WitnessKind::two_lines, std::move(note));
}

bool VeroneseImage::contains(std::span<const Element> point) const {
    const std::vector<Element> key(point.begin(), point.end());
    return std::binary_search(sorted.begin(), sorted.end(), key);
}

VeroneseImage veronese_image(const Field& field, unsigned d, unsigned m, std::uint64_t cap) {
    const std::int64_t k = binomial(m + d, d);
    if (static_cast<std::uint64_t>(k) > cap) throw SizeOverflow("Veronese target dimension exceeds cap");
    const auto monos = enumerate_monomials(m, d, MonomialMode::homogeneous);
    const PointList src = enumerate_projective_points(field, m, cap);
    const Matrix ev = evaluation_matrix(field, monos, src);

    VeroneseImage out;
    out.q = field.q();
    out.m = m;
    out.d = d;
    out.k = static_cast<std::size_t>(k);
    out.points = PointList(out.k, true);
    std::vector<Element> v(out.k);
    for (std::size_t j = 0; j < src.size(); ++j) {
        for (std::size_t i = 0; i < out.k; ++i) v[i] = ev(i, j);
        normalize_projective(field, v);
        out.points.push_back(v);
        out.sorted.push_back(v);
    }
    std::sort(out.sorted.begin(), out.sorted.end());
    if (std::adjacent_find(out.sorted.begin(), out.sorted.end()) != out.sorted.end()) {
        throw std::logic_error("Veronese map produced a repeated point");
    }
    return out;
}

LineCheckResult veronese_line_check(const Field& field, const VeroneseImage& image) {
    LineCheckResult out;
    std::set<std::vector<std::vector<Element>>> lines;
    const std::size_t n = image.points.size();
    std::vector<Element> v(image.k);
    for (std::size_t a = 0; a < n; ++a) {
        const auto p = image.points[a];
        for (std::size_t b = a + 1; b < n; ++b) {
            const auto qpt = image.points[b];
            // The q+1 points P + lambda Q and Q.
            std::vector<std::vector<Element>> line{{qpt.begin(), qpt.end()}};
            bool contained = true;
            for (Element lambda = 0; lambda < field.q() && contained; ++lambda) {
                for (std::size_t i = 0; i < image.k; ++i) v[i] = field.add(p[i], field.mul(lambda, qpt[i]));
                normalize_projective(field, v);
                contained = image.contains(v);
                line.push_back(v);
            }
            if (!contained) continue;
            std::sort(line.begin(), line.end());
            if (lines.insert(std::move(line)).second && !out.example) {
                out.example = std::make_pair(ProjPoint{{p.begin(), p.end()}}, ProjPoint{{qpt.begin(), qpt.end()}});
            }
        }
    }
    out.lines_found = lines.size();
    return out;
}

}  // namespace prmforge
