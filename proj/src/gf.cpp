#include "prmforge/gf.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "prmforge/error.hpp"

namespace prmforge {

namespace {

using Poly = std::vector<unsigned>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor, both over GF(p).
Poly poly_rem(Poly a, std::span<const unsigned> monic, unsigned p) {
    const std::size_t dl = monic.size();
    trim(a);
    while (a.size() >= dl) {
        const unsigned c = a.back();
        const std::size_t shift = a.size() - dl;
        for (std::size_t i = 0; i < dl; ++i) {
            a[shift + i] = (a[shift + i] + (p - c) * monic[i]) % p;
        }
        trim(a);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

bool factor_prime_power(std::uint64_t q, unsigned& p, unsigned& e) noexcept {
    if (q < 2) return false;
    std::uint64_t f = 2;
    while (f * f <= q && q % f != 0) ++f;
    if (q % f != 0) f = q;
    unsigned exp = 0;
    std::uint64_t rest = q;
    while (rest % f == 0) {
        rest /= f;
        ++exp;
    }
    if (rest != 1) return false;
    p = static_cast<unsigned>(f);
    e = exp;
    return true;
}

bool is_irreducible(unsigned p, std::span<const unsigned> monic) {
    if (monic.size() < 2 || monic.back() != 1) return false;
    const std::size_t deg = monic.size() - 1;
    if (deg == 1) return true;
    for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
        // Every monic divisor candidate of degree dd: low coefficients run over
        // all p^dd tuples.
        Poly divisor(dd + 1, 0);
        divisor[dd] = 1;
        while (true) {
            const Poly rem = poly_rem(Poly(monic.begin(), monic.end()), divisor, p);
            if (rem.empty()) return false;
            std::size_t i = 0;
            while (i < dd && ++divisor[i] == p) divisor[i++] = 0;
            if (i == dd) break;
        }
    }
    return true;
}

Coefficients smallest_irreducible(unsigned p, unsigned e) {
    if (e == 1) return {0, 1};
    Coefficients mod(e + 1, 0);
    mod[e] = 1;
    while (true) {
        if (is_irreducible(p, mod)) return mod;
        std::size_t i = 0;
        while (i < e && ++mod[i] == p) mod[i++] = 0;
        if (i == e) break;
    }
    throw ReducibleModulus("no irreducible polynomial found");  // unreachable
}

std::vector<ModulusRecord> read_modulus_table(std::istream& in) {
    std::vector<ModulusRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        ModulusRecord rec{};
        if (!(ls >> rec.p)) continue;
        if (!(ls >> rec.e)) throw ParseError("modulus table line " + std::to_string(lineno) + ": missing e");
        unsigned c = 0;
        while (ls >> c) rec.modulus.push_back(c);
        if (!ls.eof() || rec.modulus.size() != rec.e + 1) {
            throw ParseError("modulus table line " + std::to_string(lineno) + ": expected e+1 coefficients");
        }
        out.push_back(std::move(rec));
    }
    return out;
}

void write_modulus_table(std::ostream& out, std::span<const ModulusRecord> records) {
    for (const auto& rec : records) {
        out << rec.p << ' ' << rec.e;
        for (unsigned c : rec.modulus) out << ' ' << c;
        out << '\n';
    }
}

Coefficients parse_modulus_list(const std::string& text) {
    Coefficients out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t used = 0;
            const long v = std::stol(tok, &used);
            if (v < 0 || tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
            out.push_back(static_cast<unsigned>(v));
        } catch (const std::logic_error&) {
            throw ParseError("bad modulus coefficient '" + tok + "'");
        }
    }
    if (out.empty()) throw ParseError("empty modulus list");
    return out;
}

std::optional<Coefficients> builtin_modulus(unsigned p, unsigned e) {
    for (const auto& rec : builtin_moduli()) {
        if (rec.p == p && rec.e == e) return rec.modulus;
    }
    return std::nullopt;
}

struct Field::Tables {
    FieldSpec spec;
    Element primitive = 1;
    std::vector<std::uint32_t> log;
    std::vector<Element> exp;
    std::vector<std::uint32_t> pow_p;  // p^i for i <= e
};

Field::Field(std::shared_ptr<const Tables> t) : tables_(std::move(t)) {
    q_ = tables_->spec.q;
    p_ = tables_->spec.p;
    prime_ = tables_->spec.e == 1;
    log_ = tables_->log;
    exp_ = tables_->exp;
}

Field Field::make(unsigned p, unsigned e, std::optional<Coefficients> modulus) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    if (e == 0) throw NotPrime("exponent must be positive");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > (std::uint64_t{1} << 31)) throw UnsupportedFieldSize("field order too large");
    }

    auto t = std::make_shared<Tables>();
    t->spec.p = p;
    t->spec.e = e;
    t->spec.q = static_cast<std::uint32_t>(q);

    if (modulus) {
        if (modulus->size() != e + 1 || modulus->back() != 1) {
            throw ReducibleModulus("modulus must be monic of degree " + std::to_string(e));
        }
        for (unsigned c : *modulus) {
            if (c >= p) throw ReducibleModulus("modulus coefficient out of range");
        }
        if (e > 1 && !is_irreducible(p, *modulus)) throw ReducibleModulus("modulus is reducible");
        t->spec.modulus = e == 1 ? Coefficients{0, 1} : *modulus;
    } else if (e == 1) {
        t->spec.modulus = {0, 1};
    } else if (auto b = builtin_modulus(p, e)) {
        t->spec.modulus = *b;
    } else if (q <= kMaxImplicitOrder) {
        t->spec.modulus = smallest_irreducible(p, e);
    } else {
        throw UnsupportedFieldSize("GF(" + std::to_string(q) + ") requires an explicit modulus");
    }
    if (!modulus && e > 1 && !is_irreducible(p, t->spec.modulus)) {
        throw ReducibleModulus("built-in modulus failed irreducibility check");
    }

    t->pow_p.resize(e + 1);
    t->pow_p[0] = 1;
    for (unsigned i = 1; i <= e; ++i) t->pow_p[i] = t->pow_p[i - 1] * p;

    // Find the primitive element using table-free arithmetic first.
    Field bare(t);
    const auto factors = prime_factors(q - 1);
    for (Element g = 1; g < q; ++g) {
        bool ok = true;
        for (auto f : factors) {
            if (bare.pow(g, (q - 1) / f) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            t->primitive = g;
            break;
        }
    }

    if (q <= kLogTableLimit) {
        t->log.assign(q, 0);
        t->exp.assign(q, 0);
        Element x = 1;
        for (std::uint32_t i = 0; i + 1 < q; ++i) {
            t->exp[i] = x;
            t->log[x] = i;
            x = bare.mul_slow(x, t->primitive);
        }
        t->exp[q - 1] = 1;
    }
    return Field(std::move(t));
}

Field Field::of_order(std::uint64_t q, std::optional<Coefficients> modulus) {
    unsigned p = 0;
    unsigned e = 0;
    if (!factor_prime_power(q, p, e)) throw NotPrime(std::to_string(q) + " is not a prime power");
    return make(p, e, std::move(modulus));
}

const FieldSpec& Field::spec() const noexcept { return tables_->spec; }

unsigned Field::e() const noexcept { return tables_->spec.e; }

Element Field::primitive() const noexcept { return tables_->primitive; }

bool Field::operator==(const Field& other) const noexcept {
    return tables_ == other.tables_ || tables_->spec == other.tables_->spec;
}

Element Field::add_slow(Element a, Element b) const noexcept {
    Element out = 0;
    for (std::uint32_t place = 1; a != 0 || b != 0; place *= p_) {
        const unsigned da = a % p_;
        const unsigned db = b % p_;
        out += ((da + db) % p_) * place;
        a /= p_;
        b /= p_;
    }
    return out;
}

Element Field::neg(Element a) const noexcept {
    if (p_ == 2 || a == 0) return a;
    if (prime_) return q_ - a;
    Element out = 0;
    for (std::uint32_t place = 1; a != 0; place *= p_) {
        out += ((p_ - a % p_) % p_) * place;
        a /= p_;
    }
    return out;
}

Element Field::mul_slow(Element a, Element b) const noexcept {
    if (prime_) return static_cast<Element>((std::uint64_t{a} * b) % p_);
    const auto& spec = tables_->spec;
    const unsigned e = spec.e;
    std::vector<unsigned> da(e), db(e), prod(2 * e - 1, 0);
    for (unsigned i = 0; i < e; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    for (unsigned i = 0; i < e; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    for (std::size_t top = prod.size(); top-- > e;) {
        const unsigned c = prod[top];
        if (c == 0) continue;
        for (unsigned i = 0; i <= e; ++i) {
            auto& slot = prod[top - e + i];
            slot = (slot + (p_ - c) * spec.modulus[i]) % p_;
        }
    }
    Element out = 0;
    for (unsigned i = e; i-- > 0;) out = out * p_ + prod[i];
    return out;
}

Element Field::inv(Element a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, q_ - 2);
}

Element Field::pow(Element a, std::uint64_t n) const noexcept {
    Element r = 1;
    Element base = a;
    while (n != 0) {
        if (n & 1u) r = log_.empty() ? mul_slow(r, base) : mul(r, base);
        base = log_.empty() ? mul_slow(base, base) : mul(base, base);
        n >>= 1;
    }
    return r;
}

std::vector<Element> Field::elements() const {
    std::vector<Element> out(q_);
    for (std::uint32_t i = 0; i < q_; ++i) out[i] = i;
    return out;
}

Element field_arith(const Field& field, Element a, Element b, FieldOp op) {
    switch (op) {
        case FieldOp::add: return field.add(a, b);
        case FieldOp::sub: return field.sub(a, b);
        case FieldOp::mul: return field.mul(a, b);
        case FieldOp::div: return field.div(a, b);
        case FieldOp::neg: return field.neg(a);
        case FieldOp::inv: return field.inv(a);
        case FieldOp::pow: return field.pow(a, b);
    }
    return 0;
}

}  // namespace prmforge
