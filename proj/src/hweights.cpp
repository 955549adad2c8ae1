#include "prmforge/hweights.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <random>
#include <thread>

#include "prmforge/combinatorics.hpp"
#include "prmforge/error.hpp"
#include "prmforge/poly.hpp"

namespace prmforge {

std::uint64_t gaussian_binomial_sat(unsigned k, unsigned r, std::uint64_t q) noexcept {
    if (r > k) return 0;
    // [k r] = [k-1 r-1] + q^r [k-1 r], rolled over k.
    std::vector<std::uint64_t> row(r + 1, 0);
    row[0] = 1;
    std::vector<std::uint64_t> qpow(r + 1, 1);
    for (unsigned j = 1; j <= r; ++j) qpow[j] = sat_mul(qpow[j - 1], q);
    for (unsigned kk = 1; kk <= k; ++kk) {
        for (unsigned j = std::min(kk, r); j >= 1; --j) row[j] = sat_add(row[j - 1], sat_mul(qpow[j], row[j]));
    }
    return row[r];
}

std::uint64_t gaussian_binomial(unsigned k, unsigned r, std::uint64_t q) {
    const std::uint64_t v = gaussian_binomial_sat(k, r, q);
    if (v == kSaturated) throw SizeOverflow("Gaussian binomial exceeds 64 bits");
    return v;
}

namespace {

// Next r-subset of {0..k-1} in colexicographic order.
bool next_colex(std::vector<unsigned>& c, unsigned k) {
    const std::size_t r = c.size();
    for (std::size_t i = 0; i < r; ++i) {
        const unsigned limit = (i + 1 < r) ? c[i + 1] : k;
        if (c[i] + 1 < limit) {
            ++c[i];
            for (std::size_t j = 0; j < i; ++j) c[j] = static_cast<unsigned>(j);
            return true;
        }
    }
    return false;
}

std::vector<std::vector<unsigned>> all_patterns(unsigned k, unsigned r) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> c(r);
    for (unsigned i = 0; i < r; ++i) c[i] = i;
    do {
        out.push_back(c);
    } while (next_colex(c, k));
    return out;
}

std::vector<unsigned> free_columns(const std::vector<unsigned>& pivots, std::size_t row, unsigned k) {
    std::vector<unsigned> out;
    for (unsigned j = pivots[row] + 1; j < k; ++j) {
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) out.push_back(j);
    }
    return out;
}

std::uint64_t ipow_u(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r = sat_mul(r, base);
    return r;
}

}  // namespace

SubspaceIter::SubspaceIter(const Field& field, unsigned k, unsigned r) : field_(field), k_(k), r_(r), basis_(r, k) {
    if (r > k) throw RankOutOfRange("subspace dimension exceeds ambient dimension");
    pivots_.resize(r);
    for (unsigned i = 0; i < r; ++i) pivots_[i] = i;
    load_pattern();
}

void SubspaceIter::load_pattern() {
    basis_ = Matrix(r_, k_);
    free_.clear();
    for (unsigned i = 0; i < r_; ++i) {
        basis_(i, pivots_[i]) = 1;
        for (unsigned c : free_columns(pivots_, i, k_)) free_.emplace_back(i, c);
    }
}

void SubspaceIter::advance() {
    if (done_) return;
    for (std::size_t t = free_.size(); t-- > 0;) {
        auto& x = basis_(free_[t].first, free_[t].second);
        if (++x < field_.q()) return;
        x = 0;
    }
    if (!next_colex(pivots_, k_)) {
        done_ = true;
        return;
    }
    load_pattern();
}

std::uint64_t enumerate_subspaces(const Field& field, unsigned k, unsigned r,
                                  const std::function<void(const Matrix&)>& visit, std::uint64_t cap) {
    const std::uint64_t total = gaussian_binomial_sat(k, r, field.q());
    if (total > cap) {
        throw SizeOverflow("[" + std::to_string(k) + " choose " + std::to_string(r) + "]_" + std::to_string(field.q()) +
                           " subspaces exceed cap");
    }
    std::uint64_t count = 0;
    for (SubspaceIter it(field, k, r); !it.done(); it.advance()) {
        visit(it.current());
        ++count;
    }
    return count;
}

std::string SearchMode::to_string() const {
    if (kind == Kind::exhaustive) return "exhaustive";
    return "randomized(" + std::to_string(trials) + ")";
}

namespace {

using Word = std::uint64_t;

// Shared read-only data for one search: the value matrix and its scalar
// multiples, laid out for fast row-combination.
struct SearchContext {
    const Field& field;
    const Matrix& values;
    std::size_t k;
    std::size_t n;
    std::size_t words;
    std::uint32_t q;
    std::vector<Element> scaled;  // scaled[(row * q + a) * n + j] = a * values(row, j)

    SearchContext(const Field& f, const Matrix& v)
        : field(f), values(v), k(v.rows()), n(v.cols()), words((v.cols() + 63) / 64), q(f.q()) {
        scaled.assign(k * q * n, 0);
        for (std::size_t row = 0; row < k; ++row) {
            for (std::uint32_t a = 0; a < q; ++a) {
                Element* dst = &scaled[(row * q + a) * n];
                for (std::size_t j = 0; j < n; ++j) dst[j] = field.mul(a, values(row, j));
            }
        }
    }

    const Element* multiple(std::size_t row, Element a) const { return &scaled[(row * q + a) * n]; }

    void zero_mask(const Element* vec, Word* mask) const {
        std::fill(mask, mask + words, 0);
        for (std::size_t j = 0; j < n; ++j) {
            if (vec[j] == 0) mask[j / 64] |= Word{1} << (j % 64);
        }
    }
};

// Enumerates the zero masks of every canonical row with pivot `pivot` and the
// given free columns, in ascending lexicographic order of the free entries.
class RowOdometer {
   public:
    RowOdometer(const SearchContext& ctx, unsigned pivot, std::vector<unsigned> free)
        : ctx_(ctx), pivot_(pivot), free_(std::move(free)), digits_(free_.size(), 0),
          partial_((free_.size() + 1) * ctx.n), mask_(ctx.words) {}

    void reset() {
        std::fill(digits_.begin(), digits_.end(), 0);
        const Element* base = ctx_.multiple(pivot_, 1);
        for (std::size_t t = 0; t <= free_.size(); ++t) std::copy(base, base + ctx_.n, level(t));
        ctx_.zero_mask(level(free_.size()), mask_.data());
        exhausted_ = false;
    }

    const Word* mask() const { return mask_.data(); }
    bool exhausted() const { return exhausted_; }

    void next() {
        std::size_t t = free_.size();
        while (t-- > 0) {
            if (++digits_[t] < ctx_.q) break;
            digits_[t] = 0;
        }
        if (t == static_cast<std::size_t>(-1)) {
            exhausted_ = true;
            return;
        }
        const std::size_t n = ctx_.n;
        for (std::size_t u = t; u < free_.size(); ++u) {
            const Element* prev = level(u);
            Element* cur = level(u + 1);
            const Element* add = ctx_.multiple(free_[u], digits_[u]);
            if (digits_[u] == 0) {
                std::copy(prev, prev + n, cur);
            } else {
                for (std::size_t j = 0; j < n; ++j) cur[j] = ctx_.field.add(prev[j], add[j]);
            }
        }
        ctx_.zero_mask(level(free_.size()), mask_.data());
    }

   private:
    Element* level(std::size_t t) { return partial_.data() + t * ctx_.n; }

    const SearchContext& ctx_;
    unsigned pivot_;
    std::vector<unsigned> free_;
    std::vector<Element> digits_;
    std::vector<Element> partial_;
    std::vector<Word> mask_;
    bool exhausted_ = false;
};

// Rows with at most this many mask words are materialized up front.
constexpr std::uint64_t kMaterializeWords = std::uint64_t{1} << 24;

struct RowSource {
    std::uint64_t count = 0;
    bool materialized = false;
    std::vector<Word> masks;  // count * words when materialized
    std::unique_ptr<RowOdometer> odometer;
};

// Visits are added to the shared work counter in batches of this size.
constexpr std::uint64_t kWorkBatch = 1 << 12;

// Shared search budget: total mask evaluations across all threads.
struct WorkBudget {
    std::uint64_t limit;
    std::atomic<std::uint64_t> used{0};
    std::atomic<bool> exceeded{false};

    void charge(std::uint64_t n) {
        if (used.fetch_add(n, std::memory_order_relaxed) + n > limit) exceeded.store(true, std::memory_order_relaxed);
    }
    bool stop() const { return exceeded.load(std::memory_order_relaxed); }
};

struct PatternBest {
    std::int64_t value = -1;
    std::size_t pattern = 0;
    std::vector<std::uint64_t> choice;
};

class PatternSearcher {
   public:
    PatternSearcher(const SearchContext& ctx, const std::vector<unsigned>& pivots, std::atomic<std::int64_t>& global,
                    WorkBudget& budget)
        : ctx_(ctx), pivots_(pivots), global_(global), budget_(budget), acc_((pivots.size() + 1) * ctx.words, ~Word{0}),
          choice_(pivots.size(), 0) {
        // Columns past n stay set in the all-ones start mask; clear them.
        if (ctx.n % 64 != 0) acc_[ctx.words - 1] = (Word{1} << (ctx.n % 64)) - 1;
        if (ctx.n == 0) std::fill(acc_.begin(), acc_.begin() + ctx.words, 0);
        const auto k = static_cast<unsigned>(ctx.k);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            auto free = free_columns(pivots, i, k);
            RowSource src;
            src.count = ipow_u(ctx.q, free.size());
            src.odometer = std::make_unique<RowOdometer>(ctx, pivots[i], std::move(free));
            if (sat_mul(src.count, ctx.words) <= kMaterializeWords) {
                src.materialized = true;
                src.masks.resize(src.count * ctx.words);
                src.odometer->reset();
                for (std::uint64_t c = 0; c < src.count; ++c) {
                    std::copy(src.odometer->mask(), src.odometer->mask() + ctx.words, &src.masks[c * ctx.words]);
                    src.odometer->next();
                }
                budget.charge(src.count);
            }
            rows_.push_back(std::move(src));
        }
    }

    // Search with the caller's running best; returns true if improved.
    bool run(PatternBest& best, std::size_t pattern_index) {
        best_ = &best;
        pattern_index_ = pattern_index;
        improved_ = false;
        descend(0);
        budget_.charge(pending_);
        pending_ = 0;
        return improved_;
    }

   private:
    void descend(std::size_t level) {
        const std::size_t words = ctx_.words;
        const Word* acc = &acc_[level * words];
        Word* next = &acc_[(level + 1) * words];
        RowSource& src = rows_[level];
        const bool leaf = level + 1 == rows_.size();

        auto visit = [&](std::uint64_t idx, const Word* mask) {
            if (++pending_ == kWorkBatch) {
                budget_.charge(pending_);
                pending_ = 0;
            }
            std::int64_t pc = 0;
            for (std::size_t w = 0; w < words; ++w) {
                next[w] = acc[w] & mask[w];
                pc += std::popcount(next[w]);
            }
            // Ties go to the earliest basis: locally we need a strict
            // improvement, across threads only a strictly better value prunes.
            if (pc <= best_->value || pc < global_.load(std::memory_order_relaxed)) return;
            choice_[level] = idx;
            if (leaf) {
                best_->value = pc;
                best_->pattern = pattern_index_;
                best_->choice = choice_;
                improved_ = true;
                std::int64_t g = global_.load(std::memory_order_relaxed);
                while (pc > g && !global_.compare_exchange_weak(g, pc, std::memory_order_relaxed)) {
                }
                return;
            }
            descend(level + 1);
        };

        if (src.materialized) {
            for (std::uint64_t idx = 0; idx < src.count && !budget_.stop(); ++idx) visit(idx, &src.masks[idx * words]);
        } else {
            // Fresh odometer state per visit of this level.
            RowOdometer& od = *src.odometer;
            od.reset();
            for (std::uint64_t idx = 0; !od.exhausted() && !budget_.stop(); ++idx) {
                visit(idx, od.mask());
                od.next();
            }
        }
    }

    const SearchContext& ctx_;
    const std::vector<unsigned>& pivots_;
    std::atomic<std::int64_t>& global_;
    WorkBudget& budget_;
    std::uint64_t pending_ = 0;
    std::vector<Word> acc_;
    std::vector<std::uint64_t> choice_;
    std::vector<RowSource> rows_;
    PatternBest* best_ = nullptr;
    std::size_t pattern_index_ = 0;
    bool improved_ = false;
};

Matrix decode_witness(const Field& field, const std::vector<unsigned>& pivots, const std::vector<std::uint64_t>& choice,
                      unsigned k) {
    Matrix basis(pivots.size(), k);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        basis(i, pivots[i]) = 1;
        const auto free = free_columns(pivots, i, k);
        std::uint64_t idx = choice[i];
        for (std::size_t t = free.size(); t-- > 0;) {
            basis(i, free[t]) = static_cast<Element>(idx % field.q());
            idx /= field.q();
        }
    }
    return basis;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

SearchResult max_common_zeros(const Field& field, const Matrix& values, unsigned r, const SearchOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const auto k = static_cast<unsigned>(values.rows());
    if (r < 1 || r > k) {
        throw RankOutOfRange("subspace dimension " + std::to_string(r) + " outside 1.." + std::to_string(k));
    }
    if (binomial_sat(k, r) > kMaxPivotPatterns) {
        throw SizeOverflow("exhaustive search over " + std::to_string(k) + " choose " + std::to_string(r) +
                           " pivot patterns is too large; use randomized search");
    }

    const SearchContext ctx(field, values);
    const auto patterns = all_patterns(k, r);
    std::atomic<std::size_t> next_pattern{0};
    std::atomic<std::int64_t> global{-1};
    WorkBudget budget{options.cost_cap};
    std::mutex merge_mutex;
    PatternBest overall;

    auto worker = [&] {
        PatternBest local;
        for (std::size_t p = next_pattern.fetch_add(1); p < patterns.size() && !budget.stop();
             p = next_pattern.fetch_add(1)) {
            PatternSearcher searcher(ctx, patterns[p], global, budget);
            searcher.run(local, p);
        }
        std::lock_guard lock(merge_mutex);
        if (local.value > overall.value || (local.value == overall.value && local.pattern < overall.pattern)) {
            overall = local;
        }
    };

    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(patterns.size())));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    if (budget.stop()) {
        throw SizeOverflow("exhaustive search over [" + std::to_string(k) + " choose " + std::to_string(r) + "]_" +
                           std::to_string(field.q()) + " subspaces exceeded its budget of " +
                           std::to_string(options.cost_cap) + " mask evaluations; use randomized search");
    }

    SearchResult out;
    out.value = overall.value;
    out.witness = decode_witness(field, patterns[overall.pattern], overall.choice, k);
    out.mode = {};
    out.elapsed_sec = seconds_since(start);
    out.work = budget.used.load();
    return out;
}

std::int64_t witness_zero_count(const Field& field, const Matrix& values, const Matrix& witness) {
    if (witness.cols() != values.rows()) throw DimensionMismatch("witness width differs from value-matrix height");
    std::int64_t count = 0;
    for (std::size_t j = 0; j < values.cols(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < witness.rows() && zero; ++i) {
            Element s = 0;
            for (std::size_t c = 0; c < witness.cols(); ++c) s = field.add(s, field.mul(witness(i, c), values(c, j)));
            zero = s == 0;
        }
        count += zero ? 1 : 0;
    }
    return count;
}

Matrix monomial_value_matrix(const Field& field, unsigned d, unsigned m, Space space) {
    if (space == Space::projective) {
        const auto monos = enumerate_monomials(m, d, MonomialMode::homogeneous);
        return evaluation_matrix(field, monos, enumerate_projective_points(field, m));
    }
    const auto monos = enumerate_monomials(m, d, MonomialMode::bounded);
    return evaluation_matrix(field, monos, enumerate_affine_points(field, m));
}

namespace {

void check_er_hypotheses(const Field& field, unsigned d, unsigned m, unsigned r) {
    if (d < 1 || d >= field.q()) {
        throw HypothesisViolated("e_r search needs 1 <= d < q so monomial evaluations are independent");
    }
    const std::int64_t k = binomial(m + d, d);
    if (r < 1 || r > k) throw RankOutOfRange("r must lie in 1.." + std::to_string(k));
}

}  // namespace

SearchResult er_exhaustive(const Field& field, unsigned d, unsigned m, unsigned r, Space space,
                           const SearchOptions& options) {
    check_er_hypotheses(field, d, m, r);
    const auto start = std::chrono::steady_clock::now();
    const Matrix values = monomial_value_matrix(field, d, m, space);
    SearchResult out = max_common_zeros(field, values, r, options);
    out.elapsed_sec = seconds_since(start);
    return out;
}

SearchResult er_random_search(const Field& field, unsigned d, unsigned m, unsigned r, std::uint64_t trials,
                              std::uint64_t seed, Space space) {
    check_er_hypotheses(field, d, m, r);
    if (trials < 1) throw HypothesisViolated("randomized search needs at least one trial");
    const auto start = std::chrono::steady_clock::now();
    const Matrix values = monomial_value_matrix(field, d, m, space);
    const std::size_t k = values.rows();

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Element> coeff(0, field.q() - 1);
    SearchResult out;
    out.value = -1;
    Matrix sample(r, k);
    for (std::uint64_t t = 0; t < trials; ++t) {
        EchelonForm ech;
        do {
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t c = 0; c < k; ++c) sample(i, c) = coeff(rng);
            }
            ech = rref(field, sample);
        } while (ech.pivots.size() < r);
        const std::int64_t zeros = witness_zero_count(field, values, ech.reduced);
        if (zeros > out.value) {
            out.value = zeros;
            out.witness = std::move(ech.reduced);
        }
    }
    out.mode = {SearchMode::Kind::randomized, trials, seed};
    out.work = trials;
    out.elapsed_sec = seconds_since(start);
    return out;
}

std::string to_string(HierarchyMode mode) {
    switch (mode) {
        case HierarchyMode::exhaustive: return "exhaustive";
        case HierarchyMode::formula: return "formula";
        case HierarchyMode::hybrid: return "hybrid";
    }
    return "unknown";
}

WeightHierarchy weight_hierarchy(const LinearCode& code, HierarchyMethod method, const SearchOptions& options) {
    WeightHierarchy out;
    out.label = code.label();
    out.n = static_cast<std::int64_t>(code.n);
    const auto k = static_cast<unsigned>(code.k);
    const auto n = static_cast<std::int64_t>(code.n);
    const std::uint64_t q = code.field.q();
    bool used_formula = false;
    bool used_search = false;
    for (unsigned r = 1; r <= k; ++r) {
        const std::int64_t s = static_cast<std::int64_t>(k) - r;
        const bool terminal = code.kind == CodeKind::prm && code.d + 1 < q && s <= static_cast<std::int64_t>(code.d);
        if (method == HierarchyMethod::automatic && terminal) {
            out.weights.push_back(n - s);
            used_formula = true;
            continue;
        }
        out.weights.push_back(ghw_from_er(n, max_common_zeros(code.field, code.generator, r, options).value));
        used_search = true;
    }
    out.mode = used_formula ? (used_search ? HierarchyMode::hybrid : HierarchyMode::formula) : HierarchyMode::exhaustive;
    return out;
}

bool wei_monotonicity_check(const std::vector<std::int64_t>& weights, std::int64_t n) {
    if (weights.empty()) return true;
    if (weights.front() < 1 || weights.back() > n) return false;
    return std::adjacent_find(weights.begin(), weights.end(), std::greater_equal<>()) == weights.end();
}

bool wei_duality_check(const std::vector<std::int64_t>& weights, const std::vector<std::int64_t>& dual_weights,
                       std::int64_t n) {
    if (static_cast<std::int64_t>(weights.size() + dual_weights.size()) != n) return false;
    std::vector<int> hits(static_cast<std::size_t>(n) + 1, 0);
    auto mark = [&](std::int64_t v) {
        if (v < 1 || v > n) return false;
        return ++hits[static_cast<std::size_t>(v)] == 1;
    };
    for (auto d : weights) {
        if (!mark(d)) return false;
    }
    for (auto e : dual_weights) {
        if (!mark(n + 1 - e)) return false;
    }
    return true;
}

std::vector<std::int64_t> dual_hierarchy_from(const std::vector<std::int64_t>& weights, std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t c = 1; c <= n; ++c) {
        if (std::find(weights.begin(), weights.end(), c) == weights.end()) out.push_back(n + 1 - c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace prmforge
