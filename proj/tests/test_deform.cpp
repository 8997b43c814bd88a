#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homlie/deform.hpp"
#include "test_util.hpp"

using namespace homlie;
using namespace homlie::testutil;

namespace {

struct Paper {
    Registry reg;
    Deformation def;
};

Paper paper_instance() {
    auto reg = std::make_shared<ParamRegistry>();
    for (const char* n : {"a11", "a12", "a13", "a22", "a23", "a32", "a21", "a31", "a33", "p1",
                          "p2", "p3", "q1", "q2", "q3", "r1", "r2", "r3"})
        reg->intern(n);
    BracketConstants b0 = sl2(reg).bracket;
    BracketConstants b1 = generic_bracket(reg, "p", "q", "r");
    LinMap a1 = generic_map(reg, "a");
    Deformation def(Basis::standard(3), {b0, b1}, {LinMap::identity(reg, 3), a1}, 2);
    return {reg, std::move(def)};
}

}  // namespace

TEST_CASE("expand_hom_jacobi reproduces J0 and J1") {
    Paper p = paper_instance();
    ExpansionReport rep = expand_hom_jacobi(p.def, {1, 2, 3});
    REQUIRE(rep.per_order.size() == 4);  // default order (2-1)*2 + (2-1) = 3

    CHECK(rep.per_order[0].is_zero());
    CHECK(rep.per_order[1].coords[0].str() == "2*a22 - 2*a33 - p2 - q3");
    CHECK(rep.per_order[1].coords[1].str() == "4*a13 - 2*a21 + 2*q1 + 2*r2");
    CHECK(rep.per_order[1].coords[2].str() == "-4*a12 + 2*a31 + 2*p1 - 2*r3");
}

TEST_CASE("undeformed algebra has zero expansion at every positive order") {
    auto reg = std::make_shared<ParamRegistry>();
    BracketConstants b0 = sl2(reg).bracket;
    Deformation def(Basis::standard(3), {b0, BracketConstants(reg, 3)},
                    {LinMap::identity(reg, 3), LinMap::zero(reg, 3)}, 2);
    ExpansionReport rep = expand_hom_jacobi(def, {1, 2, 3}, 5);
    for (const auto& v : rep.per_order) CHECK(v.is_zero());
}

TEST_CASE("expand_jacobi reproduces K1 and K2") {
    Paper p = paper_instance();
    ExpansionReport rep = expand_jacobi(p.def, {1, 2, 3});
    REQUIRE(rep.per_order.size() == 3);  // default order (2-1)*2 = 2

    CHECK(rep.per_order[0].is_zero());
    CHECK(rep.per_order[1].coords[0].str() == "-p2 - q3");
    CHECK(rep.per_order[1].coords[1].str() == "2*q1 + 2*r2");
    CHECK(rep.per_order[1].coords[2].str() == "2*p1 - 2*r3");
    CHECK(rep.per_order[2].coords[0].str() == "p1*r2 - p2*r1 + q1*r3 - q3*r1");
    CHECK(rep.per_order[2].coords[1].str() == "-p1*q2 + p2*q1 + q2*r3 - q3*r2");
    CHECK(rep.per_order[2].coords[2].str() == "-p1*q3 - p2*r3 + p3*q1 + p3*r2");
}

TEST_CASE("J1 is linear and K2 quadratic in the parameters") {
    Paper p = paper_instance();
    ExpansionReport hom = expand_hom_jacobi(p.def, {1, 2, 3});
    for (const auto& c : hom.per_order[1].coords) CHECK(c.degree() <= 1);
    ExpansionReport jac = expand_jacobi(p.def, {1, 2, 3});
    for (const auto& c : jac.per_order[2].coords) CHECK(c.degree() <= 2);
}

TEST_CASE("vanishing_constraints") {
    Paper p = paper_instance();
    ExpansionReport hom = expand_hom_jacobi(p.def, {1, 2, 3});
    auto d = vanishing_constraints(hom, {1});
    REQUIRE(d.size() == 3);
    CHECK(d[0].str() == "2*a22 - 2*a33 - p2 - q3");

    ExpansionReport jac = expand_jacobi(p.def, {1, 2, 3});
    auto k1 = vanishing_constraints(jac, {1});
    REQUIRE(k1.size() == 3);
    CHECK(k1[0].str() == "-p2 - q3");

    CHECK_THROWS_AS(vanishing_constraints(jac, {9}), InputError);

    auto reg = std::make_shared<ParamRegistry>();
    Deformation undeformed(Basis::standard(3), {sl2(reg).bracket},
                           {LinMap::identity(reg, 3)}, 2);
    ExpansionReport rep = expand_jacobi(undeformed, {1, 2, 3}, 2);
    CHECK(vanishing_constraints(rep, {0, 1, 2}).empty());
}

TEST_CASE("expand_hom_jacobi with identity twist equals expand_jacobi") {
    auto reg = small_registry();
    std::mt19937_64 rng(59);
    for (int it = 0; it < 10; ++it) {
        std::vector<BracketConstants> brackets{rand_bracket(rng, reg, 3, 1),
                                               rand_bracket(rng, reg, 3, 1)};
        Deformation def(Basis::standard(3), brackets, {LinMap::identity(reg, 3)}, 3);
        ExpansionReport a = expand_hom_jacobi(def, {1, 2, 3}, 3);
        ExpansionReport b = expand_jacobi(def, {1, 2, 3}, 3);
        for (std::size_t m = 0; m < a.per_order.size(); ++m)
            CHECK(a.per_order[m] == b.per_order[m]);
    }
}

TEST_CASE("expansion is alternating in the triple") {
    Paper p = paper_instance();
    ExpansionReport fwd = expand_hom_jacobi(p.def, {1, 2, 3});
    ExpansionReport swapped = expand_hom_jacobi(p.def, {2, 1, 3});
    REQUIRE(fwd.per_order.size() == swapped.per_order.size());
    for (std::size_t m = 0; m < fwd.per_order.size(); ++m)
        CHECK(swapped.per_order[m] == -fwd.per_order[m]);
    CHECK_THROWS_AS(expand_hom_jacobi(p.def, {1, 1, 3}), InputError);
    CHECK_THROWS_AS(expand_hom_jacobi(p.def, {1, 2, 4}), InputError);
}

TEST_CASE("order-0 coefficient matches check_hom_jacobi") {
    auto reg = small_registry();
    std::mt19937_64 rng(61);
    for (int it = 0; it < 10; ++it) {
        BracketConstants b0 = rand_bracket(rng, reg, 3, 0);
        LinMap a0 = rand_map(rng, reg, 3, 0);
        Deformation def(Basis::standard(3), {b0}, {a0}, 2);
        ExpansionReport rep = expand_hom_jacobi(def, {1, 2, 3}, 0);
        bool zero0 = rep.per_order[0].is_zero();
        bool holds = check_hom_jacobi(HomAlgebra{Basis::standard(3), b0, a0}).holds;
        CHECK(zero0 == holds);
    }
}

TEST_CASE("untwist") {
    auto reg = small_registry();

    SUBCASE("alpha1 = 0 leaves the bracket unchanged") {
        std::mt19937_64 rng(67);
        BracketConstants b0 = rand_bracket(rng, reg, 3);
        BracketConstants b1 = rand_bracket(rng, reg, 3);
        Deformation def(Basis::standard(3), {b0, b1},
                        {LinMap::identity(reg, 3), LinMap::zero(reg, 3)}, 2);
        Deformation u = untwist(def);
        CHECK(u.brackets[0] == b0);
        CHECK(u.brackets[1] == b1);
        CHECK(u.maps.size() == 1);
        CHECK(u.maps[0].is_identity());
    }

    SUBCASE("paper instance: bracket1 becomes [.,.]_1 - alpha1([.,.]_0)") {
        std::mt19937_64 rng(71);
        BracketConstants b0 = rand_bracket(rng, reg, 3);
        BracketConstants b1 = rand_bracket(rng, reg, 3);
        LinMap a1 = rand_map(rng, reg, 3);
        Deformation def(Basis::standard(3), {b0, b1}, {LinMap::identity(reg, 3), a1}, 2);
        Deformation u = untwist(def);
        CHECK(u.brackets[0] == b0);
        CHECK(u.brackets[1] == b1 + b0.map_through(-a1));
    }

    SUBCASE("scalar cancellation: alpha_t = (1+t) id, bracket_t = (1+t) bracket0") {
        BracketConstants b0 = sl2(reg).bracket;
        LinMap id = LinMap::identity(reg, 3);
        Deformation def(Basis::standard(3), {b0, b0}, {id, id}, 2);
        Deformation u = untwist(def);
        CHECK(u.brackets.size() == 1);
        CHECK(u.brackets[0] == b0);
    }

    SUBCASE("non-unipotent twist is rejected") {
        BracketConstants b0 = sl2(reg).bracket;
        LinMap two = MultiPoly::constant(reg, 2) * LinMap::identity(reg, 3);
        Deformation def(Basis::standard(3), {b0}, {two}, 2);
        CHECK_THROWS_AS(untwist(def), InputError);
    }
}

TEST_CASE("yau_twist") {
    auto reg = small_registry();
    BracketConstants b0 = sl2(reg).bracket;
    LinMap id = LinMap::identity(reg, 3);

    SUBCASE("identity series leaves the bracket unchanged") {
        Deformation def(Basis::standard(3), {b0}, {id}, 2);
        Deformation t = yau_twist(def, {id});
        CHECK(t.brackets.size() == 1);
        CHECK(t.brackets[0] == b0);
    }

    SUBCASE("m = id + t id gives (1+t) bracket0") {
        Deformation def(Basis::standard(3), {b0}, {id}, 2);
        Deformation t = yau_twist(def, {id, id});
        REQUIRE(t.brackets.size() == 2);
        CHECK(t.brackets[0] == b0);
        CHECK(t.brackets[1] == b0);
    }
}

TEST_CASE("untwist then yau_twist round-trips on random unipotent deformations") {
    auto reg = small_registry();
    std::mt19937_64 rng(73);
    std::uniform_int_distribution<int> trunc(2, 4);
    for (int it = 0; it < 25; ++it) {
        int n = trunc(rng);
        std::vector<BracketConstants> brackets;
        std::vector<LinMap> maps{LinMap::identity(reg, 3)};
        for (int m = 0; m < n; ++m) brackets.push_back(rand_bracket(rng, reg, 3, 1));
        for (int m = 1; m < n; ++m) maps.push_back(rand_map(rng, reg, 3, 1));
        Deformation def(Basis::standard(3), brackets, maps, n);
        Deformation round = yau_twist(untwist(def), def.maps);
        for (int m = 0; m < n; ++m) CHECK(round.bracket_at(m) == def.bracket_at(m));
    }
}
