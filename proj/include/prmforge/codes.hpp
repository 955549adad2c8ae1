/**
 * @file codes.hpp
 * @brief Affine and projective Reed-Muller codes.
 *
 * RM_q(d,m) evaluates polynomials of degree <= d at the q^m points of A^m;
 * PRM_q(d,m) evaluates degree-d forms at the p_m normalized points of P^m.
 * Columns follow the point order of pspace.hpp.
 */

#ifndef PRMFORGE_CODES_HPP
#define PRMFORGE_CODES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prmforge/gf.hpp"
#include "prmforge/linalg.hpp"
#include "prmforge/poly.hpp"
#include "prmforge/pspace.hpp"

namespace prmforge {

enum class CodeKind { rm, prm, raw };

struct LinearCode {
    explicit LinearCode(Field f) : field(std::move(f)) {}

    Field field;
    std::size_t n = 0;
    std::size_t k = 0;
    Matrix generator;  // k x n, full row rank
    PointList column_points{0, false};
    CodeKind kind = CodeKind::raw;
    unsigned d = 0;  // order, for rm/prm
    unsigned m = 0;
    /// Row i is the evaluation of basis[i] when rows are monomials; empty when
    /// the rows were reduced to a basis (PRM with d >= q).
    std::vector<Monomial> row_monomials;

    std::string label() const;
};

struct CodeParams {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t dmin = 0;
    bool operator==(const CodeParams&) const = default;
};

/// Throws DegreeTooLarge unless 1 <= d < q.
LinearCode rm_code(const Field& field, unsigned d, unsigned m);

/// Throws DegreeTooLarge unless 1 <= d <= m(q-1). For d >= q the monomial
/// evaluations are dependent and the rows are reduced to a basis.
LinearCode prm_code(const Field& field, unsigned d, unsigned m);

/// Closed-form n, k and minimum distance of PRM_q(d,m), 1 <= d <= m(q-1).
CodeParams prm_params(std::int64_t q, std::int64_t d, std::int64_t m);

/// Closed-form parameters of RM_q(d,m) for 1 <= d < q.
CodeParams rm_params(std::int64_t q, std::int64_t d, std::int64_t m);

/// Order of the dual projective Reed-Muller code, m(q-1) - d. Throws
/// DegreeDivisible when q-1 divides d.
std::int64_t prm_dual_degree(std::int64_t q, std::int64_t d, std::int64_t m);

/// Builds a code from an arbitrary generator, reducing it to full row rank.
LinearCode raw_code(const Field& field, const Matrix& generator);

/// Smallest w <= limit such that some w columns of the generator are linearly
/// dependent, i.e. the minimum distance of the dual code when it is <= limit.
/// nullopt means no such set below the limit.
std::optional<unsigned> dual_min_distance_via_columns(const LinearCode& code, unsigned limit);

}  // namespace prmforge

#endif
