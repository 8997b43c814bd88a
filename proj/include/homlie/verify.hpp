#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "homlie/deform.hpp"
#include "homlie/linsolve.hpp"
#include "homlie/parse.hpp"

namespace homlie {

struct VerificationStep {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass;
};

struct VerificationReport {
    std::string scenario;
    std::vector<VerificationStep> steps;

    bool overall() const {
        for (const auto& s : steps)
            if (!s.pass) return false;
        return true;
    }

    std::string str() const {
        std::string out = "scenario: " + scenario + "\n";
        for (const auto& s : steps) {
            out += std::string("  [") + (s.pass ? "PASS" : "FAIL") + "] " + s.name + "\n";
            out += "         expected: " + s.expected + "\n";
            out += "         computed: " + s.computed + "\n";
        }
        out += std::string("  overall: ") + (overall() ? "PASS" : "FAIL") + "\n";
        return out;
    }
};

/// Knobs for self-testing the pipeline; the sign fault corrupts [x2,x3]_0 so
/// every downstream derivation must notice.
struct ScenarioOptions {
    bool sl2_sign_fault = false;
};

namespace detail {

inline void add_eq(VerificationReport& r, const std::string& name, const std::string& expected,
                   const std::string& computed) {
    r.steps.push_back({name, expected, computed, expected == computed});
}

inline BracketConstants paper_sl2_bracket(const RegistryView& reg, const ScenarioOptions& opts) {
    BracketConstants c(reg, 3);
    c.set(1, 2, 2, MultiPoly::constant(reg, 2));
    c.set(1, 3, 3, MultiPoly::constant(reg, -2));
    c.set(2, 3, 1, MultiPoly::constant(reg, opts.sl2_sign_fault ? -1 : 1));
    return c;
}

inline std::vector<std::string> paper_param_names() {
    return {"a11", "a12", "a13", "a22", "a23", "a32", "a21", "a31", "a33",
            "p1",  "p2",  "p3",  "q1",  "q2",  "q3",  "r1",  "r2",  "r3"};
}

inline Registry make_paper_registry() {
    auto reg = std::make_shared<ParamRegistry>();
    for (const auto& n : paper_param_names()) reg->intern(n);
    return reg;
}

inline std::vector<ParamId> all_params(const RegistryView& reg) {
    std::vector<ParamId> ids;
    for (int i = 0; i < reg->size(); ++i) ids.push_back(ParamId{i});
    return ids;
}

inline std::vector<MultiPoly> parse_all(const std::vector<std::string>& exprs,
                                        const RegistryView& reg) {
    std::vector<MultiPoly> out;
    for (const auto& e : exprs) out.push_back(parse_poly(e, reg));
    return out;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

inline std::string coords_str(const Vec& v) { return v.str(); }

inline std::string free_names(const SolutionSpace& sol) {
    std::vector<std::string> names;
    for (const auto& p : sol.free_params) names.push_back(sol.reg->name(p));
    return join(names, " ");
}

inline std::string pivot_assignments_str(const SolutionSpace& sol) {
    std::vector<std::string> parts;
    for (const auto& [pivot, aff] : sol.pivots)
        parts.push_back(sol.reg->name(pivot) + " = " + sol.affine_str(aff));
    return join(parts, "; ");
}

// The displayed constraint systems of the derivation, used as expected row
// spaces. (H): the twist alone is Hom-Lie; (D): the infinitesimal Hom-Jacobi
// condition moved to "expression = 0" form; (E): the bracket-only relations.
inline std::vector<std::string> system_H_rows() {
    return {"2*a22 - 2*a33", "4*a13 - 2*a21", "-4*a12 + 2*a31"};
}
inline std::vector<std::string> system_D_rows() {
    return {"2*a22 - 2*a33 - p2 - q3", "4*a13 - 2*a21 + 2*q1 + 2*r2",
            "-4*a12 + 2*a31 + 2*p1 - 2*r3"};
}
inline std::vector<std::string> system_E_rows() { return {"p2 + q3", "q1 + r2", "p1 - r3"}; }

struct PaperSetup {
    Registry reg;
    BracketConstants bracket0;
    BracketConstants bracket1;
    LinMap alpha1;
    Deformation def;
};

inline PaperSetup make_paper_setup(const ScenarioOptions& opts) {
    Registry reg = make_paper_registry();
    BracketConstants b0 = paper_sl2_bracket(reg, opts);
    LinMap alpha1 = generic_map(reg, "a");
    BracketConstants b1 = generic_bracket(reg, "p", "q", "r");
    Deformation def(Basis::standard(3), {b0, b1}, {LinMap::identity(reg, 3), alpha1}, 2);
    return PaperSetup{reg, std::move(b0), std::move(b1), std::move(alpha1), std::move(def)};
}

// Constraints forcing (V, [.,.]_0, alpha1) to be Hom-Lie, straight from the
// twisted Jacobiator on the basis triple.
inline std::vector<MultiPoly> derive_H_constraints(const PaperSetup& s) {
    Vec j = hom_jacobiator(s.bracket0, s.alpha1, Vec::basis(s.reg, 3, 1),
                           Vec::basis(s.reg, 3, 2), Vec::basis(s.reg, 3, 3));
    std::vector<MultiPoly> out;
    for (const auto& c : j.coords)
        if (!c.is_zero()) out.push_back(c);
    return out;
}

inline std::vector<MultiPoly> derive_D_constraints(const PaperSetup& s) {
    return vanishing_constraints(expand_hom_jacobi(s.def, {1, 2, 3}), {1});
}

}  // namespace detail

/// The solved 12-parameter family: the generic sl2 deformation with the combined
/// (H) and (D) constraints substituted in.
struct PaperFamily {
    Deformation def;
    SolutionSpace solution;
};

inline PaperFamily solved_paper_family(const ScenarioOptions& opts = {}) {
    detail::PaperSetup s = detail::make_paper_setup(opts);
    std::vector<MultiPoly> combined = detail::derive_H_constraints(s);
    for (auto& p : detail::derive_D_constraints(s)) combined.push_back(std::move(p));
    SolutionSpace sol = solve(linearize(combined, detail::all_params(s.reg)));
    auto bindings = sol.bindings();

    BracketConstants b1(s.reg, 3);
    for (const auto& [ij, v] : s.bracket1.stored())
        for (int k = 1; k <= 3; ++k)
            b1.set(ij.first, ij.second, k,
                   v.coords[static_cast<std::size_t>(k - 1)].substitute(bindings));
    LinMap a1(s.reg, 3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) a1.set(i, j, s.alpha1.entry(i, j).substitute(bindings));

    Deformation def(Basis::standard(3), {s.bracket0, std::move(b1)},
                    {LinMap::identity(s.reg, 3), std::move(a1)}, 2);
    return PaperFamily{std::move(def), std::move(sol)};
}

/// Derives the constraint that the generic twist makes sl2 Hom-Lie and checks
/// it against the displayed system (H) and its six-parameter solution.
inline VerificationReport scenario_constraint_H(const ScenarioOptions& opts = {}) {
    using namespace detail;
    VerificationReport r{"constraint (H): sl2 with generic twist", {}};
    auto reg = std::make_shared<ParamRegistry>();
    for (const auto& n : {"a11", "a12", "a13", "a22", "a23", "a32", "a21", "a31", "a33"})
        reg->intern(n);
    BracketConstants b0 = paper_sl2_bracket(reg, opts);
    LinMap alpha = generic_map(reg, "a");
    HomAlgebra alg{Basis::standard(3), b0, alpha};

    JacobiCheck chk = check_hom_jacobi(alg);
    add_eq(r, "generic twist violates hom-Jacobi, first witness", "2*a22 - 2*a33",
           chk.holds ? "(holds)" : chk.witness.str());

    Vec j = hom_jacobiator(alg, Vec::basis(reg, 3, 1), Vec::basis(reg, 3, 2),
                           Vec::basis(reg, 3, 3));
    std::vector<MultiPoly> constraints;
    for (const auto& c : j.coords)
        if (!c.is_zero()) constraints.push_back(c);
    add_eq(r, "number of constraints", "3", std::to_string(constraints.size()));

    auto unknowns = all_params(reg);
    LinearSystem sys = linearize(constraints, unknowns);
    LinearSystem expected = linearize(parse_all(system_H_rows(), reg), unknowns);
    add_eq(r, "derived system has the row space of (H)", "equivalent",
           systems_equivalent(sys, expected) ? "equivalent" : "not equivalent");

    SolutionSpace sol = solve(sys);
    add_eq(r, "free parameters", "a11 a12 a13 a22 a23 a32", free_names(sol));
    add_eq(r, "pivot assignments", "a21 = 2*a13; a31 = 2*a12; a33 = a22",
           pivot_assignments_str(sol));

    // substituting the solution back must produce an honest Hom-Lie twist
    auto bindings = sol.bindings();
    LinMap alpha_sub(reg, 3);
    for (int i = 1; i <= 3; ++i)
        for (int jj = 1; jj <= 3; ++jj) alpha_sub.set(i, jj, alpha.entry(i, jj).substitute(bindings));
    JacobiCheck chk2 = check_hom_jacobi(HomAlgebra{Basis::standard(3), b0, alpha_sub});
    add_eq(r, "constrained twist satisfies hom-Jacobi", "holds",
           chk2.holds ? "holds" : chk2.witness.str());
    return r;
}

/// Expands the Hom-Jacobi identity of the deformed structure and checks the
/// order-0/order-1 coefficients and the system (D).
inline VerificationReport scenario_condition_D(const ScenarioOptions& opts = {}) {
    using namespace detail;
    VerificationReport r{"condition (D): first-order hom-Jacobi expansion", {}};
    PaperSetup s = make_paper_setup(opts);
    ExpansionReport rep = expand_hom_jacobi(s.def, {1, 2, 3});
    add_eq(r, "J0 vanishes", "(0, 0, 0)", rep.per_order[0].str());
    add_eq(r, "J1 coefficient of x1", "2*a22 - 2*a33 - p2 - q3", rep.per_order[1].coords[0].str());
    add_eq(r, "J1 coefficient of x2", "4*a13 - 2*a21 + 2*q1 + 2*r2",
           rep.per_order[1].coords[1].str());
    add_eq(r, "J1 coefficient of x3", "-4*a12 + 2*a31 + 2*p1 - 2*r3",
           rep.per_order[1].coords[2].str());

    auto unknowns = all_params(s.reg);
    LinearSystem derived = linearize(vanishing_constraints(rep, {1}), unknowns);
    LinearSystem expected = linearize(parse_all(system_D_rows(), s.reg), unknowns);
    add_eq(r, "order-1 system has the row space of (D)", "equivalent",
           systems_equivalent(derived, expected) ? "equivalent" : "not equivalent");
    return r;
}

/// Checks that modulo (H) the condition (D) is exactly (E), and that neither
/// implication degenerates.
inline VerificationReport scenario_lemma_E(const ScenarioOptions& opts = {}) {
    using namespace detail;
    VerificationReport r{"lemma (E): (D) is (E) modulo (H)", {}};
    PaperSetup s = make_paper_setup(opts);
    auto unknowns = all_params(s.reg);

    std::vector<MultiPoly> H = derive_H_constraints(s);
    std::vector<MultiPoly> D = derive_D_constraints(s);
    std::vector<MultiPoly> E = parse_all(system_E_rows(), s.reg);

    auto unite = [](std::vector<MultiPoly> a, const std::vector<MultiPoly>& b) {
        for (const auto& p : b) a.push_back(p);
        return a;
    };
    LinearSystem HD = linearize(unite(H, D), unknowns);
    LinearSystem HE = linearize(unite(H, E), unknowns);
    LinearSystem sysH = linearize(H, unknowns);
    LinearSystem sysD = linearize(D, unknowns);
    LinearSystem sysE = linearize(E, unknowns);

    add_eq(r, "(H u D) against (H u E)", "equivalent",
           systems_equivalent(HD, HE) ? "equivalent" : "not equivalent");
    add_eq(r, "(D) alone against (E) alone", "not equivalent",
           systems_equivalent(sysD, sysE) ? "equivalent" : "not equivalent");
    add_eq(r, "(H u D) against (H) alone", "not equivalent",
           systems_equivalent(HD, sysH) ? "equivalent" : "not equivalent");
    return r;
}

/// Reproduces K1 and K2 and checks: K1 = 0 is (E); (E) annihilates K2.
inline VerificationReport scenario_lemmas_K(const ScenarioOptions& opts = {}) {
    using namespace detail;
    VerificationReport r{"lemmas (K1)/(K2): Jacobiator coefficients", {}};
    PaperSetup s = make_paper_setup(opts);
    ExpansionReport rep = expand_jacobi(s.def, {1, 2, 3}, 2);

    add_eq(r, "K0 vanishes", "(0, 0, 0)", rep.per_order[0].str());
    add_eq(r, "K1", "(-p2 - q3, 2*q1 + 2*r2, 2*p1 - 2*r3)", rep.per_order[1].str());
    add_eq(r, "K2 coefficient of x1", "p1*r2 - p2*r1 + q1*r3 - q3*r1",
           rep.per_order[2].coords[0].str());
    add_eq(r, "K2 coefficient of x2", "-p1*q2 + p2*q1 + q2*r3 - q3*r2",
           rep.per_order[2].coords[1].str());
    add_eq(r, "K2 coefficient of x3", "-p1*q3 - p2*r3 + p3*q1 + p3*r2",
           rep.per_order[2].coords[2].str());

    auto unknowns = all_params(s.reg);
    LinearSystem sysK1 = linearize(vanishing_constraints(rep, {1}), unknowns);
    LinearSystem sysE = linearize(parse_all(system_E_rows(), s.reg), unknowns);
    add_eq(r, "K1 = 0 has the row space of (E)", "equivalent",
           systems_equivalent(sysK1, sysE) ? "equivalent" : "not equivalent");

    SolutionSpace solE = solve(sysE);
    std::vector<std::string> after;
    for (const auto& c : rep.per_order[2].coords)
        after.push_back(substitute_solution(solE, c).str());
    add_eq(r, "K2 under the (E) relations", "0; 0; 0", join(after, "; "));
    return r;
}

/// End-to-end pipeline: solve (H) and (D) together and show the full
/// Jacobiator of [.,.]_t vanishes order by order on the solution family.
inline VerificationReport scenario_theorem_main(const ScenarioOptions& opts = {}) {
    using namespace detail;
    VerificationReport r{"main theorem: the deformed bracket is a Lie bracket", {}};
    PaperSetup s = make_paper_setup(opts);

    std::vector<MultiPoly> combined = derive_H_constraints(s);
    for (auto& p : derive_D_constraints(s)) combined.push_back(std::move(p));
    SolutionSpace sol = solve(linearize(combined, all_params(s.reg)));
    add_eq(r, "dimension of the solution family", "12",
           std::to_string(sol.free_params.size()));
    add_eq(r, "free parameters", "a11 a12 a13 a22 a23 a32 p1 p2 p3 q1 q2 r1",
           free_names(sol));

    // expand well past the maximal possible degree; orders 3 and 4 are
    // identically zero already
    ExpansionReport rep = expand_jacobi(s.def, {1, 2, 3}, 4);
    bool all_zero = true;
    std::string first_nonzero = "all zero";
    for (std::size_t m = 0; m < rep.per_order.size() && all_zero; ++m)
        for (std::size_t k = 0; k < rep.per_order[m].coords.size(); ++k) {
            MultiPoly sub = substitute_solution(sol, rep.per_order[m].coords[k]);
            if (!sub.is_zero()) {
                all_zero = false;
                first_nonzero = "order " + std::to_string(m) + ", coordinate " +
                                std::to_string(k + 1) + ": " + sub.str();
                break;
            }
        }
    add_eq(r, "Jacobiator of [.,.]_t vanishes on the family (orders 0..4)", "all zero",
           first_nonzero);
    return r;
}

/// Dropping the (H) hypothesis breaks the conclusion: a valid infinitesimal
/// Hom-Lie deformation whose bracket is not a Lie bracket.
inline VerificationReport scenario_counterexample_without_H(const ScenarioOptions& opts = {}) {
    using namespace detail;
    VerificationReport r{"counterexample: hypothesis (H) is necessary", {}};
    auto reg = std::make_shared<ParamRegistry>();
    BracketConstants b0 = paper_sl2_bracket(reg, opts);
    // a22 = 1, all other a's zero: violates (H) since a22 != a33
    LinMap alpha1(reg, 3);
    alpha1.set(2, 2, MultiPoly::constant(reg, 1));
    // p2 = 2, all other p/q/r zero: (D) holds, p2 + q3 = 2 = 2 a22 - 2 a33
    BracketConstants b1(reg, 3);
    b1.set(1, 2, 2, MultiPoly::constant(reg, 2));
    Deformation def(Basis::standard(3), {b0, b1}, {LinMap::identity(reg, 3), alpha1}, 2);

    ExpansionReport hom = expand_hom_jacobi(def, {1, 2, 3});
    add_eq(r, "J1 = 0: this is an infinitesimal Hom-Lie deformation", "(0, 0, 0)",
           hom.per_order[1].str());

    JacobiCheck chk = check_hom_jacobi(HomAlgebra{Basis::standard(3), b0, alpha1});
    add_eq(r, "(sl2, alpha1) violates hom-Jacobi with witness", "2",
           chk.holds ? "(holds)" : chk.witness.str());

    ExpansionReport jac = expand_jacobi(def, {1, 2, 3}, 2);
    add_eq(r, "K1 = -2 x1: the deformed bracket is not Lie", "(-2, 0, 0)",
           jac.per_order[1].str());
    add_eq(r, "K2", "(0, 0, 0)", jac.per_order[2].str());
    return r;
}

inline std::vector<VerificationReport> run_all_scenarios(const ScenarioOptions& opts = {}) {
    return {scenario_constraint_H(opts),  scenario_condition_D(opts),
            scenario_lemma_E(opts),       scenario_lemmas_K(opts),
            scenario_theorem_main(opts),  scenario_counterexample_without_H(opts)};
}

struct AuditReport {
    int samples = 0;
    int polys_per_sample = 0;
    int failures = 0;
    std::string first_failure;

    bool pass() const { return failures == 0; }
};

/// Seeded numeric cross-check: instantiates every parameter with random
/// rationals (numerators in [-9, 9], denominators in {1, 2, 3, 5}) and
/// verifies that every t-coefficient of the Jacobiator evaluates to exactly
/// zero. Exact arithmetic throughout, so any nonzero value is a disproof.
inline AuditReport random_audit(const Deformation& d, int samples, std::uint64_t seed) {
    if (samples < 1) throw InputError("audit needs at least one sample");
    const RegistryView& reg = d.registry();
    int n = d.dim();
    int max_order = default_jacobi_expansion_order(d);

    struct Labeled {
        int order;
        int coord;
        MultiPoly poly;
    };
    std::vector<Labeled> polys;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                ExpansionReport rep = expand_jacobi(d, {i, j, k}, max_order);
                for (int m = 0; m <= max_order; ++m)
                    for (int c = 0; c < n; ++c) {
                        const MultiPoly& p =
                            rep.per_order[static_cast<std::size_t>(m)]
                                .coords[static_cast<std::size_t>(c)];
                        if (!p.is_zero()) polys.push_back({m, c + 1, p});
                    }
            }

    AuditReport out;
    out.samples = samples;
    out.polys_per_sample = static_cast<int>(polys.size());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num_dist(-9, 9);
    const int dens[4] = {1, 2, 3, 5};
    std::uniform_int_distribution<int> den_dist(0, 3);

    for (int s = 0; s < samples; ++s) {
        std::map<int, Rational> point;
        for (int p = 0; p < reg->size(); ++p)
            point[p] = Rational(num_dist(rng), dens[den_dist(rng)]);
        for (const auto& lp : polys) {
            Rational v = lp.poly.eval(point);
            if (v != 0) {
                ++out.failures;
                if (out.first_failure.empty()) {
                    std::string pt;
                    for (const auto& [idx, val] : point) {
                        if (!pt.empty()) pt += ", ";
                        pt += reg->name(ParamId{idx}) + " = " + rational_str(val);
                    }
                    out.first_failure = "sample " + std::to_string(s) + ", t-order " +
                                        std::to_string(lp.order) + ", coordinate x" +
                                        std::to_string(lp.coord) + " = " + rational_str(v) +
                                        " at {" + pt + "}";
                }
                break;  // one failure per sample is enough
            }
        }
    }
    return out;
}

}  // namespace homlie
