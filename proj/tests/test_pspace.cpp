#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "prmforge/error.hpp"
#include "prmforge/poly.hpp"
#include "prmforge/pspace.hpp"

using namespace prmforge;

TEST_CASE("p_k") {
    CHECK(p_k(4, 2) == 21);
    CHECK(p_k(4, -1) == 0);
    CHECK(p_k(4, 3) == 85);
    CHECK(p_k(4, 0) == 1);
}

TEST_CASE("projective points") {
    const auto p1 = enumerate_projective_points(Field::of_order(2), 1).to_proj();
    REQUIRE(p1.size() == 3);
    CHECK(p1[0].coords == std::vector<Element>{0, 1});
    CHECK(p1[1].coords == std::vector<Element>{1, 0});
    CHECK(p1[2].coords == std::vector<Element>{1, 1});
    CHECK(enumerate_projective_points(Field::of_order(4), 2).size() == 21);
    CHECK(enumerate_projective_points(Field::of_order(4), 3).size() == 85);
    CHECK_THROWS_AS(enumerate_projective_points(Field::of_order(4), 3, 50), SizeOverflow);
}

TEST_CASE("projective points agree with scalar-class enumeration") {
    for (auto [q, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 2}, {4, 2}, {5, 2}, {4, 3}}) {
        const Field f = Field::of_order(q);
        const auto pts = enumerate_projective_points(f, m).to_proj();
        const auto classes = oracle::projective_points(f, m);
        REQUIRE(pts.size() == classes.size());
        REQUIRE(static_cast<std::int64_t>(pts.size()) == p_k(q, m));
        CHECK(std::is_sorted(pts.begin(), pts.end()));
        CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
        for (const auto& p : pts) {
            const auto first = std::find_if(p.coords.begin(), p.coords.end(), [](Element x) { return x != 0; });
            REQUIRE(first != p.coords.end());
            CHECK(*first == 1);
            // Same class as the oracle's representative.
            std::vector<Element> best;
            for (Element s = 1; s < q; ++s) {
                std::vector<Element> w;
                for (auto x : p.coords) w.push_back(f.mul(s, x));
                if (best.empty() || w < best) best = w;
            }
            CHECK(classes.count(best) == 1);
        }
    }
}

TEST_CASE("affine points and hyperplanes") {
    CHECK(enumerate_affine_points(Field::of_order(2), 2).size() == 4);
    CHECK(enumerate_affine_points(Field::of_order(4), 2).size() == 16);
    CHECK(enumerate_affine_points(Field::of_order(5), 3).size() == 125);
    CHECK(enumerate_affine_points(Field::of_order(5), 0).size() == 1);
    CHECK(enumerate_hyperplanes(Field::of_order(2), 2).size() == 7);
    CHECK(enumerate_hyperplanes(Field::of_order(4), 2).size() == 21);
    const Field f = Field::of_order(4);
    CHECK(on_hyperplane(f, std::vector<Element>{1, 0, 0}, std::vector<Element>{0, 1, 0}));
    // Each hyperplane of P^2(F_4) holds q+1 points and each point lies on q+1 lines.
    const auto pts = enumerate_projective_points(f, 2);
    const auto hyps = enumerate_hyperplanes(f, 2);
    for (std::size_t h = 0; h < hyps.size(); ++h) {
        int on = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) on += on_hyperplane(f, pts[i], hyps[h]) ? 1 : 0;
        CHECK(on == 5);
    }
}

TEST_CASE("normalize_projective") {
    const Field f = Field::of_order(5);
    std::vector<Element> v{0, 3, 1};
    CHECK(normalize_projective(f, v));
    CHECK(v == std::vector<Element>{0, 1, 2});
    std::vector<Element> z{0, 0};
    CHECK_FALSE(normalize_projective(f, z));
}

TEST_CASE("set bound examples") {
    const Field f = Field::of_order(4);
    auto empty = zanella_set_check(f, 2, {});
    CHECK(empty.a == 0);
    CHECK(empty.bound == 1);
    CHECK(empty.holds);

    const auto all = enumerate_projective_points(f, 2).to_proj();
    auto full = zanella_set_check(f, 2, all);
    CHECK(full.a == 5);
    CHECK(full.bound == 21);
    CHECK(full.holds);

    // Conic x0 x2 = x1^2: q+1 points, no three collinear, so a = 2.
    const auto conic_poly = parse_polynomial(f, "1:1,0,1 + 1:0,2,0");
    const auto conic = count_projective_zeros(f, {conic_poly}, 2);
    CHECK(conic.count == 5);
    std::int64_t a = 0;
    const auto hyps = enumerate_hyperplanes(f, 2);
    for (std::size_t h = 0; h < hyps.size(); ++h) {
        std::int64_t on = 0;
        for (std::size_t i = 0; i < conic.points.size(); ++i) on += on_hyperplane(f, conic.points[i], hyps[h]) ? 1 : 0;
        a = std::max(a, on);
    }
    const auto res = zanella_set_check(f, 2, conic.points.to_proj());
    CHECK(res.a == a);
    CHECK(res.a == 2);
    CHECK(res.holds);
}

TEST_CASE("set bound holds on random sets") {
    std::mt19937 rng(7);
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        const Field f = Field::of_order(q);
        const auto all = enumerate_projective_points(f, 3).to_proj();
        for (int t = 0; t < 50; ++t) {
            std::vector<ProjPoint> pts;
            for (const auto& p : all) {
                if (rng() % 3 == 0) pts.push_back(p);
            }
            const auto res = zanella_set_check(f, 3, pts);
            CHECK(res.holds);
            CHECK(static_cast<std::int64_t>(pts.size()) <= res.a * q + 1);
        }
    }
}
