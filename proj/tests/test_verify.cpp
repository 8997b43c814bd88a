#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homlie/verify.hpp"

using namespace homlie;

TEST_CASE("all scenarios pass") {
    for (const auto& rep : run_all_scenarios()) {
        INFO(rep.str());
        CHECK(rep.overall());
        CHECK_FALSE(rep.steps.empty());
    }
}

TEST_CASE("scenario reports are deterministic") {
    auto a = run_all_scenarios();
    auto b = run_all_scenarios();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].str() == b[i].str());
}

TEST_CASE("injected sign fault is caught") {
    ScenarioOptions opts;
    opts.sl2_sign_fault = true;
    auto reports = run_all_scenarios(opts);
    int failing = 0;
    for (const auto& rep : reports)
        if (!rep.overall()) ++failing;
    // every scenario that derives anything from the bracket must notice
    CHECK(failing >= 4);
    CHECK_FALSE(scenario_constraint_H(opts).overall());
    CHECK_FALSE(scenario_condition_D(opts).overall());
}

TEST_CASE("solved_paper_family") {
    PaperFamily fam = solved_paper_family();
    CHECK(fam.solution.free_params.size() == 12);
    CHECK(fam.def.brackets.size() == 2);
    CHECK(fam.def.maps.size() == 2);

    // the constrained twist really is Hom-Lie for the order-0 bracket
    HomAlgebra alg{fam.def.basis, fam.def.brackets[0], fam.def.maps[1]};
    CHECK(check_hom_jacobi(alg).holds);

    // the deformed bracket has zero Jacobiator symbolically, order by order
    ExpansionReport rep = expand_jacobi(fam.def, {1, 2, 3}, 4);
    for (const auto& v : rep.per_order) CHECK(v.is_zero());
}

TEST_CASE("random_audit") {
    SUBCASE("the solved family passes every sample") {
        PaperFamily fam = solved_paper_family();
        AuditReport rep = random_audit(fam.def, 50, 42);
        CHECK(rep.pass());
        CHECK(rep.samples == 50);
        CHECK(rep.failures == 0);
        CHECK(rep.first_failure.empty());
    }

    SUBCASE("same seed gives the same report") {
        PaperFamily fam = solved_paper_family();
        AuditReport a = random_audit(fam.def, 10, 7);
        AuditReport b = random_audit(fam.def, 10, 7);
        CHECK(a.failures == b.failures);
        CHECK(a.first_failure == b.first_failure);
        CHECK(a.polys_per_sample == b.polys_per_sample);
    }

    SUBCASE("the counterexample fails every sample") {
        auto reg = std::make_shared<ParamRegistry>();
        BracketConstants b0 = sl2(reg).bracket;
        BracketConstants b1(reg, 3);
        b1.set(1, 2, 2, MultiPoly::constant(reg, 2));
        LinMap a1(reg, 3);
        a1.set(2, 2, MultiPoly::constant(reg, 1));
        Deformation def(Basis::standard(3), {b0, b1}, {LinMap::identity(reg, 3), a1}, 2);

        AuditReport rep = random_audit(def, 20, 1);
        CHECK_FALSE(rep.pass());
        // K1 = -2 x1 is constant, so every sample trips on it
        CHECK(rep.failures == 20);
        CHECK(rep.first_failure.find("= -2") != std::string::npos);
    }

    SUBCASE("sample count must be positive") {
        PaperFamily fam = solved_paper_family();
        CHECK_THROWS_AS(random_audit(fam.def, 0, 42), InputError);
    }
}
