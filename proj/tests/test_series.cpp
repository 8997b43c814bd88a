#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homlie/algebra.hpp"
#include "homlie/series.hpp"
#include "test_util.hpp"

using namespace homlie;
using namespace homlie::testutil;

TEST_CASE("scalar series multiplication") {
    auto reg = small_registry();
    MultiPoly one = MultiPoly::constant(reg, 1);

    PolySeries<MultiPoly> a({one, one}, 2);   // 1 + t
    PolySeries<MultiPoly> b({one, -one}, 2);  // 1 - t
    PolySeries<MultiPoly> prod = series_mul(a, b);
    CHECK(prod.at(0) == one);
    CHECK(prod.at(1).is_zero());

    PolySeries<MultiPoly> c({one, one}, 3);
    PolySeries<MultiPoly> sq = series_mul(c, c);  // 1 + 2t + t^2
    CHECK(sq.at(0) == one);
    CHECK(sq.at(1) == MultiPoly::constant(reg, 2));
    CHECK(sq.at(2) == one);

    PolySeries<MultiPoly> short_series({one}, 3);
    CHECK_THROWS_AS(series_mul(a, short_series), InputError);
}

TEST_CASE("matrix series with first-order inverse") {
    auto reg = small_registry();
    LinMap id = LinMap::identity(reg, 3);
    std::mt19937_64 rng(5);
    LinMap a = rand_map(rng, reg, 3);  // arbitrary alpha_1
    PolySeries<LinMap> s({id, a}, 2);
    PolySeries<LinMap> t({id, -a}, 2);
    CHECK(series_equal(series_mul(s, t), series_identity_like(s)));
}

TEST_CASE("series_invert_unipotent") {
    auto reg = small_registry();
    LinMap id = LinMap::identity(reg, 3);
    MultiPoly one = MultiPoly::constant(reg, 1);

    SUBCASE("id + t*alpha1 at N=2 inverts to id - t*alpha1") {
        std::mt19937_64 rng(31);
        LinMap a = rand_map(rng, reg, 3);
        PolySeries<LinMap> s({id, a}, 2);
        PolySeries<LinMap> inv = series_invert_unipotent(s);
        CHECK(inv.at(0) == id);
        CHECK(inv.at(1) == -a);
    }

    SUBCASE("identity series is its own inverse") {
        PolySeries<LinMap> s({id}, 3);
        CHECK(series_equal(series_invert_unipotent(s), series_identity_like(s)));
    }

    SUBCASE("(1+t)*id at N=3 inverts to (1 - t + t^2)*id") {
        PolySeries<LinMap> s({id, id}, 3);
        PolySeries<LinMap> inv = series_invert_unipotent(s);
        CHECK(inv.at(0) == id);
        CHECK(inv.at(1) == -id);
        CHECK(inv.at(2) == id);
    }

    SUBCASE("non-unipotent order-0 is rejected") {
        LinMap two = MultiPoly::constant(reg, 2) * id;
        CHECK_THROWS_AS(series_invert_unipotent(PolySeries<LinMap>({two}, 2)), InputError);
    }

    SUBCASE("inverse composes to the identity at every order, random series") {
        std::mt19937_64 rng(37);
        for (int it = 0; it < 20; ++it) {
            std::vector<LinMap> coeffs{id};
            for (int k = 1; k < 4; ++k) coeffs.push_back(rand_map(rng, reg, 3));
            PolySeries<LinMap> s(coeffs, 4);
            PolySeries<LinMap> inv = series_invert_unipotent(s);
            CHECK(series_equal(series_mul(s, inv), series_identity_like(s)));
            CHECK(series_equal(series_mul(inv, s), series_identity_like(s)));
        }
    }
}
