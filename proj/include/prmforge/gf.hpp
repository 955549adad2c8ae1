/**
 * @file gf.hpp
 * @brief Exact arithmetic in GF(p^e).
 *
 * An element of GF(q), q = p^e, is the integer in [0, q) whose base-p digits
 * (least significant first) are the coefficients of its residue polynomial
 * modulo the field's monic irreducible modulus. 0 and 1 encode the additive
 * and multiplicative identities.
 *
 * A Field is a cheap handle onto immutable shared tables, so it can be copied
 * freely and read concurrently from any number of threads.
 */

#ifndef PRMFORGE_GF_HPP
#define PRMFORGE_GF_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prmforge {

using Element = std::uint32_t;

/// Coefficients of a polynomial over GF(p), little-endian.
using Coefficients = std::vector<unsigned>;

struct FieldSpec {
    unsigned p = 2;
    unsigned e = 1;
    std::uint32_t q = 2;
    /// Monic modulus c0 + c1 x + ... + x^e; {0, 1} for prime fields.
    Coefficients modulus{0, 1};

    bool operator==(const FieldSpec&) const = default;
};

/// Fields up to this order get log/antilog multiplication tables.
inline constexpr std::uint32_t kLogTableLimit = 1u << 10;
/// Largest order accepted without an explicit modulus.
inline constexpr std::uint32_t kMaxImplicitOrder = 1u << 20;

bool is_prime(std::uint64_t n) noexcept;

/// Writes q = p^e; returns false when q is not a prime power.
bool factor_prime_power(std::uint64_t q, unsigned& p, unsigned& e) noexcept;

/// True iff the monic polynomial is irreducible over GF(p). Trial division by
/// every monic polynomial of degree 1..deg/2.
bool is_irreducible(unsigned p, std::span<const unsigned> monic);

/// Irreducible monic of degree e minimizing sum(c_i p^i, i < e).
Coefficients smallest_irreducible(unsigned p, unsigned e);

struct ModulusRecord {
    unsigned p;
    unsigned e;
    Coefficients modulus;
};

/// The built-in table: one entry for every prime power p^e <= 1024 with e >= 2.
const std::vector<ModulusRecord>& builtin_moduli();
std::optional<Coefficients> builtin_modulus(unsigned p, unsigned e);

/// Table file format: one `p e c0 c1 ... ce` record per line, '#' comments.
std::vector<ModulusRecord> read_modulus_table(std::istream& in);
void write_modulus_table(std::ostream& out, std::span<const ModulusRecord> records);

/// Parses the comma-separated `--modulus` form, e.g. "1,1,1".
Coefficients parse_modulus_list(const std::string& text);

enum class FieldOp { add, sub, mul, div, neg, inv, pow };

class Field {
   public:
    /// GF(p^e) with the given modulus or the built-in one.
    /// Throws NotPrime, ReducibleModulus or UnsupportedFieldSize.
    static Field make(unsigned p, unsigned e, std::optional<Coefficients> modulus = std::nullopt);
    /// Same as make() but takes the order q and factors it.
    static Field of_order(std::uint64_t q, std::optional<Coefficients> modulus = std::nullopt);

    const FieldSpec& spec() const noexcept;
    std::uint32_t q() const noexcept { return q_; }
    unsigned p() const noexcept { return p_; }
    unsigned e() const noexcept;

    Element add(Element a, Element b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (prime_) {
            const Element s = a + b;
            return s >= q_ ? s - q_ : s;
        }
        return add_slow(a, b);
    }
    Element neg(Element a) const noexcept;
    Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
    Element mul(Element a, Element b) const noexcept {
        if (a == 0 || b == 0) return 0;
        if (!log_.empty()) {
            std::uint32_t s = log_[a] + log_[b];
            if (s >= q_ - 1) s -= q_ - 1;
            return exp_[s];
        }
        return mul_slow(a, b);
    }
    /// Throws DivisionByZero for a == 0.
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    /// a^n with 0^0 = 1.
    Element pow(Element a, std::uint64_t n) const noexcept;

    /// A generator of the multiplicative group (smallest encoding).
    Element primitive() const noexcept;

    /// [0, 1, ..., q-1].
    std::vector<Element> elements() const;

    bool operator==(const Field& other) const noexcept;

   private:
    struct Tables;
    explicit Field(std::shared_ptr<const Tables> t);

    Element add_slow(Element a, Element b) const noexcept;
    Element mul_slow(Element a, Element b) const noexcept;

    std::shared_ptr<const Tables> tables_;
    // Hot-path copies of table data.
    std::uint32_t q_ = 2;
    unsigned p_ = 2;
    bool prime_ = true;
    std::span<const std::uint32_t> log_;
    std::span<const Element> exp_;
};

/// Dispatches one of the basic operations; `b` is the exponent for pow and
/// ignored for neg/inv.
Element field_arith(const Field& field, Element a, Element b, FieldOp op);

/// Alias matching the enumeration contract: all q elements in ascending order.
inline std::vector<Element> enumerate_elements(const Field& field) { return field.elements(); }

}  // namespace prmforge

#endif
