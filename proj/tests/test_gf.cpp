#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "prmforge/error.hpp"
#include "prmforge/gf.hpp"

using namespace prmforge;

TEST_CASE("make_field") {
    const Field f2 = Field::make(2, 1);
    CHECK(f2.q() == 2);
    CHECK(f2.spec().modulus == Coefficients{0, 1});

    const Field f4 = Field::make(2, 2, Coefficients{1, 1, 1});
    CHECK(f4.q() == 4);
    CHECK(f4.spec().modulus == Coefficients{1, 1, 1});

    CHECK_THROWS_AS(Field::make(2, 2, Coefficients{1, 0, 1}), ReducibleModulus);
    CHECK_THROWS_AS(Field::make(4, 1), NotPrime);
    CHECK_THROWS_AS(Field::make(2, 2, Coefficients{1, 1, 0}), Error);
    CHECK_THROWS_AS(Field::of_order(6), NotPrime);
    CHECK_THROWS_AS(Field::of_order(std::uint64_t{1} << 21), UnsupportedFieldSize);
    CHECK(Field::of_order(std::uint64_t{1} << 11).q() == 2048);
}

TEST_CASE("field_arith examples") {
    const Field f4 = Field::of_order(4);
    CHECK(field_arith(f4, 2, 2, FieldOp::mul) == 3);
    CHECK(field_arith(Field::of_order(5), 2, 0, FieldOp::inv) == 3);
    CHECK_THROWS_AS(f4.inv(0), DivisionByZero);
    CHECK_THROWS_AS(field_arith(f4, 1, 0, FieldOp::div), DivisionByZero);
    CHECK(f4.pow(0, 0) == 1);
    for (unsigned q : {2u, 3u, 4u, 8u, 9u, 25u, 27u, 49u}) {
        const Field f = Field::of_order(q);
        for (Element a = 0; a < q; ++a) CHECK(f.add(a, f.neg(a)) == 0);
    }
}

TEST_CASE("enumerate_elements") {
    CHECK(enumerate_elements(Field::of_order(2)) == std::vector<Element>{0, 1});
    CHECK(enumerate_elements(Field::of_order(4)) == std::vector<Element>{0, 1, 2, 3});
    CHECK(enumerate_elements(Field::of_order(9)).size() == 9);
}

TEST_CASE("multiplication matches schoolbook residue products") {
    for (unsigned q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u, 81u, 125u, 128u, 2048u}) {
        const Field f = Field::of_order(q);
        const auto& mod = f.spec().modulus;
        std::mt19937 rng(q);
        std::uniform_int_distribution<Element> pick(0, q - 1);
        const unsigned samples = q <= 64 ? q * q : 4000;
        for (unsigned s = 0; s < samples; ++s) {
            const Element a = q <= 64 ? s / q : pick(rng);
            const Element b = q <= 64 ? s % q : pick(rng);
            REQUIRE(f.mul(a, b) == oracle::poly_mul(f.p(), mod, a, b));
        }
    }
}

TEST_CASE("field axioms exhaustively for q <= 16") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        const Field f = Field::of_order(q);
        for (Element a = 0; a < q; ++a) {
            for (Element b = 0; b < q; ++b) {
                REQUIRE(f.add(a, b) == f.add(b, a));
                REQUIRE(f.mul(a, b) == f.mul(b, a));
                for (Element c = 0; c < q; ++c) {
                    REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("inverses and Lagrange for q <= 64") {
    for (std::uint64_t q = 2; q <= 64; ++q) {
        unsigned p = 0, e = 0;
        if (!factor_prime_power(q, p, e)) continue;
        const Field f = Field::of_order(q);
        for (Element a = 1; a < q; ++a) {
            REQUIRE(f.mul(a, f.inv(a)) == 1);
            REQUIRE(f.pow(a, q - 1) == 1);
        }
        // The primitive element generates the whole multiplicative group.
        std::set<Element> seen;
        Element x = 1;
        for (std::uint64_t i = 0; i + 1 < q; ++i, x = f.mul(x, f.primitive())) seen.insert(x);
        CHECK(seen.size() == q - 1);
    }
}

TEST_CASE("randomized axioms for larger fields") {
    for (unsigned q : {243u, 256u, 343u, 512u, 729u, 1024u, 4096u}) {
        const Field f = Field::of_order(q);
        std::mt19937 rng(q);
        std::uniform_int_distribution<Element> pick(0, q - 1);
        for (int i = 0; i < 2000; ++i) {
            const Element a = pick(rng), b = pick(rng), c = pick(rng);
            REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            if (a != 0) REQUIRE(f.mul(a, f.inv(a)) == 1);
        }
    }
}

TEST_CASE("built-in modulus table") {
    const auto& table = builtin_moduli();
    // Every proper prime power up to 1024 is covered and every entry is irreducible.
    for (std::uint64_t q = 2; q <= 1024; ++q) {
        unsigned p = 0, e = 0;
        if (!factor_prime_power(q, p, e) || e == 1) continue;
        const auto mod = builtin_modulus(p, e);
        REQUIRE(mod.has_value());
        CHECK(mod->size() == e + 1);
        CHECK(is_irreducible(p, *mod));
        CHECK(*mod == smallest_irreducible(p, e));
    }
    // The data file and the compiled-in table agree.
    std::ifstream in(std::string(PRMFORGE_SOURCE_DIR) + "/data/moduli.txt");
    REQUIRE(in);
    const auto from_file = read_modulus_table(in);
    std::vector<ModulusRecord> nontrivial;
    for (const auto& rec : table) {
        if (rec.e > 1) nontrivial.push_back(rec);
    }
    std::vector<ModulusRecord> file_nontrivial;
    for (const auto& rec : from_file) {
        if (rec.e > 1) file_nontrivial.push_back(rec);
    }
    REQUIRE(file_nontrivial.size() == nontrivial.size());
    for (std::size_t i = 0; i < nontrivial.size(); ++i) {
        CHECK(file_nontrivial[i].p == nontrivial[i].p);
        CHECK(file_nontrivial[i].e == nontrivial[i].e);
        CHECK(file_nontrivial[i].modulus == nontrivial[i].modulus);
    }
}

TEST_CASE("modulus table round trip and parsing") {
    std::ostringstream out;
    const std::vector<ModulusRecord> recs{{2, 2, {1, 1, 1}}, {3, 2, {1, 0, 1}}};
    write_modulus_table(out, recs);
    std::istringstream in(out.str());
    const auto back = read_modulus_table(in);
    REQUIRE(back.size() == 2);
    CHECK(back[1].modulus == Coefficients{1, 0, 1});
    CHECK(parse_modulus_list("1,1,1") == Coefficients{1, 1, 1});
    CHECK_THROWS_AS(parse_modulus_list("1,x"), ParseError);
}

TEST_CASE("explicit modulus changes the encoding but not the field") {
    // x^2 + x + 2 is irreducible over GF(3), as is the built-in x^2 + 1.
    const Field a = Field::make(3, 2, Coefficients{2, 1, 1});
    const Field b = Field::make(3, 2);
    CHECK_FALSE(a == b);
    for (Element x = 0; x < 9; ++x) {
        for (Element y = 0; y < 9; ++y) REQUIRE(a.mul(x, y) == oracle::poly_mul(3, {2, 1, 1}, x, y));
    }
}
