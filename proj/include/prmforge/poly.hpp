/**
 * @file poly.hpp
 * @brief Monomials, sparse polynomials, evaluation matrices and zero counting.
 *
 * Monomial lists are in descending lexicographic order of exponent vectors,
 * so (d, 0, ..., 0) is first and (0, ..., 0, d) is last.
 */

#ifndef PRMFORGE_POLY_HPP
#define PRMFORGE_POLY_HPP

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "prmforge/gf.hpp"
#include "prmforge/linalg.hpp"
#include "prmforge/pspace.hpp"

namespace prmforge {

struct Monomial {
    std::vector<unsigned> exponents;

    unsigned degree() const noexcept;
    bool operator==(const Monomial&) const = default;
    auto operator<=>(const Monomial&) const = default;
};

enum class MonomialMode {
    homogeneous,  // m+1 variables, total degree exactly d
    bounded,      // m variables, total degree at most d
};

std::vector<Monomial> enumerate_monomials(unsigned m, unsigned d, MonomialMode mode);

/// r-th (1-based) composition of d into `parts` nonnegative parts in
/// descending lexicographic order, without listing the others.
/// Throws RankOutOfRange unless 1 <= r <= C(parts-1+d, d).
Monomial unrank_composition(std::uint64_t r, unsigned d, unsigned parts);

/// Sparse polynomial over GF(q): monomial -> nonzero coefficient.
/// Used both for homogeneous forms in x_0..x_m and affine polynomials in
/// x_1..x_m; the variable count is fixed at construction.
class Polynomial {
   public:
    explicit Polynomial(unsigned nvars = 0) : nvars_(nvars) {}

    unsigned nvars() const noexcept { return nvars_; }
    const std::map<Monomial, Element>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds c * monomial, merging with an existing term.
    void add_term(const Field& field, const Monomial& mono, Element c);

    /// Largest total degree (0 for the zero polynomial).
    unsigned total_degree() const noexcept;
    bool is_homogeneous(unsigned d) const noexcept;

    Polynomial times(const Field& field, const Polynomial& other) const;

    /// c_0 x_0 + ... + c_{n-1} x_{n-1}.
    static Polynomial linear_form(const Field& field, std::span<const Element> coeffs);

    bool operator==(const Polynomial&) const = default;

   private:
    unsigned nvars_;
    std::map<Monomial, Element> terms_;
};

using HomogPoly = Polynomial;
using AffinePoly = Polynomial;

/// Text form: terms `c:e0,e1,...` joined by `+`, e.g. `1:2,0,0,0 + 3:0,1,1,0`.
/// The zero polynomial is written `0`.
std::string format_polynomial(const Polynomial& poly);
/// `nvars` = 0 infers the variable count from the first term.
Polynomial parse_polynomial(const Field& field, const std::string& text, unsigned nvars = 0);

/// Throws DimensionMismatch if the variable counts differ.
Element evaluate(const Field& field, const Polynomial& poly, std::span<const Element> point);

/// Row i, column j = basis[i] evaluated at points[j].
Matrix evaluation_matrix(const Field& field, std::span<const Monomial> basis, const PointList& points);

/// Values of `poly` at every point of the list (a precompiled value-vector).
std::vector<Element> value_vector(const Field& field, const Polynomial& poly, const PointList& points);

/// Coefficients of `poly` with respect to `basis`; throws DimensionMismatch if
/// a term is not a basis monomial.
std::vector<Element> coefficient_vector(const Polynomial& poly, std::span<const Monomial> basis);

/// Polynomial sum(coeffs[i] * basis[i]).
Polynomial from_coefficients(const Field& field, std::span<const Monomial> basis, std::span<const Element> coeffs);

/// Uniformly random nonzero polynomial with terms from
/// enumerate_monomials(m, d, mode).
Polynomial random_polynomial(const Field& field, unsigned m, unsigned d, MonomialMode mode, std::mt19937_64& rng);

struct ZeroSet {
    std::uint64_t count = 0;
    PointList points;
};

/// Common zeros in P^m(F_q) of homogeneous polynomials in m+1 variables.
ZeroSet count_projective_zeros(const Field& field, const std::vector<Polynomial>& polys, unsigned m,
                               std::uint64_t cap = kDefaultPointCap);

/// Common zeros in A^m(F_q) of polynomials in m variables.
std::uint64_t count_affine_zeros(const Field& field, const std::vector<Polynomial>& polys, unsigned m,
                                 std::uint64_t cap = kDefaultPointCap);

}  // namespace prmforge

#endif
