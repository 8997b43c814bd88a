// hld: exact symbolic workbench for Hom-Lie structure constants and their
// one-parameter deformations.
//
// Exit codes: 0 = all checks pass, 1 = a mathematical check failed,
// 2 = input or usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "homlie/algfile.hpp"
#include "homlie/verify.hpp"

namespace {

using namespace homlie;

constexpr int kExitPass = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInputError = 2;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("HLD_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InputError("HLD_SEED is not a valid integer");
        }
    }
    return 42;
}

int run_check(const std::string& path, bool deformed, int order) {
    AlgebraFile f = load_algebra_file(path);
    const Deformation& d = *f.def;
    if (!deformed) {
        HomAlgebra alg{d.basis, d.brackets.front(), d.maps.front()};
        JacobiCheck chk = check_hom_jacobi(alg);
        if (chk.holds) {
            std::cout << "hom-Jacobi identity holds\n";
            return kExitPass;
        }
        std::cout << "hom-Jacobi identity violated at triple (" << chk.triple[0] << ", "
                  << chk.triple[1] << ", " << chk.triple[2] << "): witness "
                  << chk.witness.str() << "\n";
        return kExitViolated;
    }
    if (order < 0) throw InputError("--order must be >= 0");
    int n = d.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                ExpansionReport rep = expand_hom_jacobi(d, {i, j, k}, order);
                for (int m = 0; m <= order; ++m)
                    for (const auto& coord : rep.per_order[static_cast<std::size_t>(m)].coords)
                        if (!coord.is_zero()) {
                            std::cout << "deformed hom-Jacobi identity violated at triple (" << i
                                      << ", " << j << ", " << k << "), t-order " << m
                                      << ": witness " << coord.str() << "\n";
                            return kExitViolated;
                        }
            }
    std::cout << "deformed hom-Jacobi identity holds through t-order " << order << "\n";
    return kExitPass;
}

int run_derive(const std::string& path, int order) {
    if (order < 0) throw InputError("--order must be >= 0");
    AlgebraFile f = load_algebra_file(path);
    const Deformation& d = *f.def;
    std::vector<MultiPoly> linear, nonlinear;
    std::set<int> orders;
    for (int m = 0; m <= order; ++m) orders.insert(m);
    int n = d.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                ExpansionReport rep = expand_hom_jacobi(d, {i, j, k}, order);
                for (const auto& p : vanishing_constraints(rep, orders)) {
                    bool is_linear = p.degree() <= 1;
                    (is_linear ? linear : nonlinear).push_back(p);
                }
            }
    if (linear.empty() && nonlinear.empty()) {
        std::cout << "no constraints\n";
        return kExitPass;
    }
    std::vector<ParamId> unknowns;
    for (int i = 0; i < f.reg->size(); ++i) unknowns.push_back(ParamId{i});
    if (!linear.empty()) {
        std::cout << "linear constraints:\n";
        for (const auto& p : linear) std::cout << "  " << p.str() << " = 0\n";
        SolutionSpace sol = solve(linearize(linear, unknowns));
        std::cout << "solved form:\n";
        for (const auto& [pivot, aff] : sol.pivots)
            std::cout << "  " << sol.reg->name(pivot) << " = " << sol.affine_str(aff) << "\n";
        std::cout << "free parameters:";
        for (const auto& p : sol.free_params) std::cout << " " << sol.reg->name(p);
        std::cout << "\n";
    }
    if (!nonlinear.empty()) {
        std::cout << "nonlinear (not solved):\n";
        for (const auto& p : nonlinear) std::cout << "  " << p.str() << " = 0\n";
    }
    return kExitPass;
}

int run_untwist(const std::string& path, const std::string& out_path, bool retwist) {
    AlgebraFile f = load_algebra_file(path);
    Deformation u = untwist(*f.def);
    if (retwist) u = yau_twist(u, f.def->maps);
    save_algebra_file(out_path, u, f.params);
    std::cout << "wrote " << out_path << "\n";
    return kExitPass;
}

int run_verify_paper(const std::string& json_path, bool inject_fault) {
    ScenarioOptions opts;
    opts.sl2_sign_fault = inject_fault;
    std::vector<VerificationReport> reports = run_all_scenarios(opts);
    bool all_pass = true;
    std::string first_fail;
    for (const auto& r : reports) {
        std::cout << r.str() << "\n";
        if (!r.overall() && all_pass) {
            all_pass = false;
            for (const auto& s : r.steps)
                if (!s.pass) {
                    first_fail = r.scenario + " / " + s.name;
                    break;
                }
        }
    }
    if (!json_path.empty()) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : reports) {
            nlohmann::json jr;
            jr["scenario"] = r.scenario;
            jr["overall"] = r.overall() ? "pass" : "fail";
            jr["steps"] = nlohmann::json::array();
            for (const auto& s : r.steps)
                jr["steps"].push_back({{"step", s.name},
                                       {"expected", s.expected},
                                       {"computed", s.computed},
                                       {"verdict", s.pass ? "pass" : "fail"}});
            j.push_back(std::move(jr));
        }
        std::ofstream out(json_path);
        if (!out) throw InputError("cannot write report: " + json_path);
        out << j.dump(2) << "\n";
    }
    if (all_pass) {
        std::cout << "verify-paper: all " << reports.size() << " scenarios pass\n";
        return kExitPass;
    }
    std::cout << "verify-paper: FAILED, first failing step: " << first_fail << "\n";
    return kExitViolated;
}

int run_audit(const std::string& path, int samples, std::uint64_t seed) {
    AlgebraFile f = load_algebra_file(path);
    AuditReport rep = random_audit(*f.def, samples, seed);
    std::cout << "audit: " << (rep.samples - rep.failures) << "/" << rep.samples
              << " samples with exactly zero Jacobiator coefficients (" << rep.polys_per_sample
              << " nonzero symbolic coefficients checked per sample, seed " << seed << ")\n";
    if (!rep.pass()) {
        std::cout << "first failure: " << rep.first_failure << "\n";
        return kExitViolated;
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hld: exact workbench for Hom-Lie deformations of structure constants"};
    app.require_subcommand(1);

    std::string path, out_path, json_path;
    bool deformed = false, retwist = false, inject_fault = false;
    int order = 1;
    int samples = 1000;
    std::uint64_t seed = 0;
    bool seed_given = false;

    auto* check = app.add_subcommand("check", "check the hom-Jacobi identity");
    check->add_option("path", path, "algebra file")->required();
    check->add_flag("--deformed", deformed, "check vanishing of the expansion orders <= --order");
    check->add_option("--order", order, "highest t-order to check (with --deformed)");

    auto* derive = app.add_subcommand("derive", "derive and solve vanishing constraints");
    derive->add_option("path", path, "algebra file")->required();
    derive->add_option("--order", order, "highest t-order to derive");

    auto* untw = app.add_subcommand("untwist", "apply the inverse twist to the bracket series");
    untw->add_option("path", path, "algebra file")->required();
    untw->add_option("--out", out_path, "output file")->required();
    untw->add_flag("--retwist", retwist, "untwist then re-apply the original twist");

    auto* verify = app.add_subcommand("verify-paper", "run the full verification pipeline");
    verify->add_option("--json", json_path, "write a machine-readable report");
    verify->add_flag("--inject-sl2-fault", inject_fault,
                     "flip a sign in the sl2 constants (self-test of the pipeline)");

    auto* audit = app.add_subcommand("audit", "random numeric audit of the Jacobiator");
    audit->add_option("path", path, "algebra file")->required();
    audit->add_option("--samples", samples, "number of random instantiations");
    audit->add_option("--seed", seed, "RNG seed (default: HLD_SEED or 42)")
        ->each([&](const std::string&) { seed_given = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInputError;
    }

    try {
        if (check->parsed()) return run_check(path, deformed, order);
        if (derive->parsed()) return run_derive(path, order);
        if (untw->parsed()) return run_untwist(path, out_path, retwist);
        if (verify->parsed()) return run_verify_paper(json_path, inject_fault);
        if (audit->parsed()) return run_audit(path, samples, seed_given ? seed : default_seed());
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
