#include "prmforge/codes.hpp"

#include "prmforge/combinatorics.hpp"
#include "prmforge/error.hpp"

namespace prmforge {

std::string LinearCode::label() const {
    switch (kind) {
        case CodeKind::rm: return "RM(" + std::to_string(d) + "," + std::to_string(m) + ")";
        case CodeKind::prm: return "PRM(" + std::to_string(d) + "," + std::to_string(m) + ")";
        case CodeKind::raw: break;
    }
    return "raw";
}

LinearCode rm_code(const Field& field, unsigned d, unsigned m) {
    if (d < 1 || d >= field.q()) {
        throw DegreeTooLarge("RM_q(d,m) needs 1 <= d < q; got d=" + std::to_string(d));
    }
    LinearCode code{field};
    code.kind = CodeKind::rm;
    code.d = d;
    code.m = m;
    code.column_points = enumerate_affine_points(field, m);
    code.row_monomials = enumerate_monomials(m, d, MonomialMode::bounded);
    code.generator = evaluation_matrix(field, code.row_monomials, code.column_points);
    code.n = code.column_points.size();
    code.k = code.generator.rows();
    return code;
}

LinearCode prm_code(const Field& field, unsigned d, unsigned m) {
    const std::uint64_t max_d = std::uint64_t{m} * (field.q() - 1);
    if (d < 1 || d > max_d) {
        throw DegreeTooLarge("PRM_q(d,m) needs 1 <= d <= m(q-1) = " + std::to_string(max_d));
    }
    LinearCode code{field};
    code.kind = CodeKind::prm;
    code.d = d;
    code.m = m;
    code.column_points = enumerate_projective_points(field, m);
    auto monos = enumerate_monomials(m, d, MonomialMode::homogeneous);
    Matrix full = evaluation_matrix(field, monos, code.column_points);
    if (d < field.q()) {
        code.generator = std::move(full);
        code.row_monomials = std::move(monos);
    } else {
        code.generator = rref(field, std::move(full)).reduced;
    }
    code.n = code.column_points.size();
    code.k = code.generator.rows();
    return code;
}

CodeParams prm_params(std::int64_t q, std::int64_t d, std::int64_t m) {
    if (d < 1 || d > m * (q - 1)) throw DegreeTooLarge("prm_params needs 1 <= d <= m(q-1)");
    CodeParams out;
    out.n = p_k(q, m);
    for (std::int64_t t = 1; t <= d; ++t) {
        if ((t - d) % (q - 1) != 0) continue;
        for (std::int64_t j = 0; j <= m + 1; ++j) {
            const std::int64_t sign = (j % 2 == 0) ? 1 : -1;
            out.k += sign * binomial(m + 1, j) * binomial(t - j * q + m, t - j * q);
        }
    }
    const std::int64_t t = (d - 1) / (q - 1);
    const std::int64_t s = (d - 1) % (q - 1);
    out.dmin = (q - s) * ipow(q, static_cast<unsigned>(m - t - 1));
    return out;
}

CodeParams rm_params(std::int64_t q, std::int64_t d, std::int64_t m) {
    if (d < 1 || d >= q) throw DegreeTooLarge("rm_params needs 1 <= d < q");
    return {ipow(q, static_cast<unsigned>(m)), binomial(m + d, d), (q - d) * ipow(q, static_cast<unsigned>(m - 1))};
}

std::int64_t prm_dual_degree(std::int64_t q, std::int64_t d, std::int64_t m) {
    if (d < 1 || d > m * (q - 1)) throw DegreeTooLarge("prm_dual_degree needs 1 <= d <= m(q-1)");
    if (d % (q - 1) == 0) {
        throw DegreeDivisible("q-1 = " + std::to_string(q - 1) + " divides d = " + std::to_string(d));
    }
    return m * (q - 1) - d;
}

LinearCode raw_code(const Field& field, const Matrix& generator) {
    LinearCode code{field};
    code.generator = rref(field, generator).reduced;
    code.n = generator.cols();
    code.k = code.generator.rows();
    if (code.generator.rows() == 0) code.generator = Matrix(0, code.n);
    return code;
}

namespace {

struct ColumnSearch {
    const std::vector<std::vector<Element>>& columns;
    IncrementalBasis basis;

    // Independent column sets of size `need` with indices >= start; true when
    // some later column falls in their span.
    bool extend(std::size_t start, unsigned need) {
        if (need == 0) {
            for (std::size_t j = start; j < columns.size(); ++j) {
                if (basis.in_span(columns[j])) return true;
            }
            return false;
        }
        for (std::size_t j = start; j + need < columns.size(); ++j) {
            if (!basis.insert(columns[j])) continue;
            const bool found = extend(j + 1, need - 1);
            basis.pop();
            if (found) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<unsigned> dual_min_distance_via_columns(const LinearCode& code, unsigned limit) {
    const Matrix& g = code.generator;
    std::vector<std::vector<Element>> columns(g.cols(), std::vector<Element>(g.rows()));
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t c = 0; c < g.cols(); ++c) columns[c][r] = g(r, c);
    }
    for (unsigned w = 1; w <= limit && w <= columns.size(); ++w) {
        // A minimal dependent set, listed by increasing index, is an
        // independent (w-1)-set followed by a column in its span.
        ColumnSearch search{columns, IncrementalBasis(code.field, g.rows())};
        if (search.extend(0, w - 1)) return w;
    }
    return std::nullopt;
}

}  // namespace prmforge
