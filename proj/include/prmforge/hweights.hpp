/**
 * @file hweights.hpp
 * @brief Generalized Hamming weights and maximum common-zero counts by
 * subspace search.
 *
 * Every search works on a k x n value matrix: row i holds the values of the
 * i-th basis polynomial (or generator row) at the n points. An r-dimensional
 * subspace of GF(q)^k, given by an r x k coefficient basis, has a common zero
 * at column j iff every basis combination vanishes there. e_r is the maximum
 * number of such columns over all r-dimensional subspaces, and the r-th
 * generalized Hamming weight of the code spanned by the rows is n - e_r.
 *
 * Canonical subspace bases are reduced row echelon forms. The stream visits
 * pivot patterns (r-subsets of the k columns) in colexicographic order and,
 * within a pattern, the free entries (row 0 first, left to right) in
 * ascending lexicographic order. Among maxima the earliest basis in this
 * stream is reported, independent of the thread count.
 *
 * Wei duality convention used by wei_duality_check: for an [n,k] code with
 * hierarchy d_1..d_k and dual hierarchy e_1..e_{n-k}, the sets {d_i} and
 * {n + 1 - e_j} partition {1, ..., n}.
 */

#ifndef PRMFORGE_HWEIGHTS_HPP
#define PRMFORGE_HWEIGHTS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "prmforge/codes.hpp"
#include "prmforge/gf.hpp"
#include "prmforge/linalg.hpp"

namespace prmforge {

/// Default budget of mask evaluations (branch-and-bound nodes) for one
/// exhaustive search.
inline constexpr std::uint64_t kDefaultSearchCostCap = 20'000'000'000ULL;
/// Largest number of RREF pivot patterns C(k,r) an exhaustive search accepts.
inline constexpr std::uint64_t kMaxPivotPatterns = 50'000'000;

/// Number of r-dimensional subspaces of GF(q)^k. Throws SizeOverflow past 2^64.
std::uint64_t gaussian_binomial(unsigned k, unsigned r, std::uint64_t q);
/// Saturating variant for feasibility estimates.
std::uint64_t gaussian_binomial_sat(unsigned k, unsigned r, std::uint64_t q) noexcept;

/// Streams canonical RREF bases of the r-dimensional subspaces of GF(q)^k in
/// the canonical order described above.
class SubspaceIter {
   public:
    SubspaceIter(const Field& field, unsigned k, unsigned r);

    /// Basis of the current subspace; valid until advance().
    const Matrix& current() const noexcept { return basis_; }
    const std::vector<unsigned>& pivots() const noexcept { return pivots_; }
    bool done() const noexcept { return done_; }
    void advance();

   private:
    void load_pattern();

    Field field_;
    unsigned k_;
    unsigned r_;
    std::vector<unsigned> pivots_;
    std::vector<std::pair<unsigned, unsigned>> free_;  // (row, column) of each free entry
    Matrix basis_;
    bool done_ = false;
};

/// Calls `visit` for every subspace in canonical order and returns the count.
/// Throws SizeOverflow when [k choose r]_q exceeds `cap`.
std::uint64_t enumerate_subspaces(const Field& field, unsigned k, unsigned r,
                                  const std::function<void(const Matrix&)>& visit,
                                  std::uint64_t cap = kDefaultSearchCostCap);

struct SearchMode {
    enum class Kind { exhaustive, randomized } kind = Kind::exhaustive;
    std::uint64_t trials = 0;  // randomized only
    std::uint64_t seed = 0;    // randomized only

    std::string to_string() const;
};

struct SearchResult {
    std::int64_t value = 0;  // max number of common zeros found
    Matrix witness;          // r x k basis attaining `value`, in RREF
    SearchMode mode;
    double elapsed_sec = 0.0;
    std::uint64_t work = 0;  // mask evaluations (exhaustive) or trials
};

struct SearchOptions {
    unsigned threads = 1;
    std::uint64_t cost_cap = kDefaultSearchCostCap;
};

/// Exact maximum, over r-dimensional subspaces of the row-coefficient space,
/// of the number of columns of `values` where the whole subspace vanishes.
/// Branch and bound: a partial basis is abandoned once its common zeros
/// cannot beat the best found. Throws SizeOverflow when the search needs
/// more than options.cost_cap mask evaluations.
SearchResult max_common_zeros(const Field& field, const Matrix& values, unsigned r, const SearchOptions& options = {});

/// Number of columns where every row of witness * values vanishes.
std::int64_t witness_zero_count(const Field& field, const Matrix& values, const Matrix& witness);

enum class Space { projective, affine };

/// Degree-d value matrix over P^m (homogeneous monomials) or A^m (monomials
/// of degree <= d), rows in descending lex monomial order.
Matrix monomial_value_matrix(const Field& field, unsigned d, unsigned m, Space space);

/// Exact e_r(d,m) (projective) or e_r^Aff(d,m) (affine) with a witness.
/// Requires 1 <= d < q and 1 <= r <= C(m+d,d).
SearchResult er_exhaustive(const Field& field, unsigned d, unsigned m, unsigned r, Space space,
                           const SearchOptions& options = {});

/// Best of `trials` uniformly sampled rank-r coefficient matrices; a lower
/// bound on e_r.
SearchResult er_random_search(const Field& field, unsigned d, unsigned m, unsigned r, std::uint64_t trials,
                              std::uint64_t seed, Space space = Space::projective);

/// d_r = n - e_r and its inverse.
constexpr std::int64_t ghw_from_er(std::int64_t n, std::int64_t er) noexcept { return n - er; }
constexpr std::int64_t er_from_ghw(std::int64_t n, std::int64_t dr) noexcept { return n - dr; }

enum class HierarchyMode { exhaustive, formula, hybrid };
std::string to_string(HierarchyMode mode);

struct WeightHierarchy {
    std::string label;
    std::int64_t n = 0;
    std::vector<std::int64_t> weights;  // d_1..d_k
    HierarchyMode mode = HierarchyMode::exhaustive;
};

enum class HierarchyMethod { exhaustive, automatic };

/// d_r for r = 1..k. `automatic` takes d_{k-s} = n - s (s <= d) for PRM
/// codes with d < q-1 from the closed form and searches only the rest.
WeightHierarchy weight_hierarchy(const LinearCode& code, HierarchyMethod method = HierarchyMethod::exhaustive,
                                 const SearchOptions& options = {});

/// 1 <= d_1 < ... < d_k <= n.
bool wei_monotonicity_check(const std::vector<std::int64_t>& weights, std::int64_t n);

/// True iff {d_i} and {n + 1 - e_j} partition {1..n}.
bool wei_duality_check(const std::vector<std::int64_t>& weights, const std::vector<std::int64_t>& dual_weights,
                       std::int64_t n);

/// The dual hierarchy forced by duality: sorted {n + 1 - c : c in {1..n} \ {d_i}}.
std::vector<std::int64_t> dual_hierarchy_from(const std::vector<std::int64_t>& weights, std::int64_t n);

}  // namespace prmforge

#endif
