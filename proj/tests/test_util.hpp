#pragma once

#include <random>
#include <vector>

#include "homlie/algebra.hpp"
#include "homlie/poly.hpp"

namespace homlie::testutil {

inline Rational rand_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    const int dens[4] = {1, 2, 3, 5};
    std::uniform_int_distribution<int> den(0, 3);
    return Rational(num(rng), dens[den(rng)]);
}

inline Rational rand_nonzero_rational(std::mt19937_64& rng) {
    Rational r = rand_rational(rng);
    while (r == 0) r = rand_rational(rng);
    return r;
}

inline MultiPoly rand_poly(std::mt19937_64& rng, const RegistryView& reg, int max_terms = 4,
                           int max_deg = 2) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> var(0, reg->size() - 1);
    std::vector<MultiPoly::Term> terms;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m;
        int d = deg(rng);
        for (int i = 0; i < d; ++i) m = m * Monomial::variable(ParamId{var(rng)});
        terms.push_back({m, rand_rational(rng)});
    }
    return MultiPoly::from_terms(reg, terms);
}

inline Vec rand_vec(std::mt19937_64& rng, const RegistryView& reg, int dim, int max_deg = 1) {
    Vec v = Vec::zero(reg, dim);
    for (auto& c : v.coords) c = rand_poly(rng, reg, 2, max_deg);
    return v;
}

inline BracketConstants rand_bracket(std::mt19937_64& rng, const RegistryView& reg, int dim,
                                     int max_deg = 1) {
    BracketConstants b(reg, dim);
    for (int i = 1; i <= dim; ++i)
        for (int j = i + 1; j <= dim; ++j)
            for (int k = 1; k <= dim; ++k) b.set(i, j, k, rand_poly(rng, reg, 2, max_deg));
    return b;
}

inline LinMap rand_map(std::mt19937_64& rng, const RegistryView& reg, int dim, int max_deg = 1) {
    LinMap m(reg, dim);
    for (int i = 1; i <= dim; ++i)
        for (int j = 1; j <= dim; ++j) m.set(i, j, rand_poly(rng, reg, 2, max_deg));
    return m;
}

inline Registry small_registry(int nparams = 4) {
    auto reg = std::make_shared<ParamRegistry>();
    for (int i = 1; i <= nparams; ++i) reg->intern("u" + std::to_string(i));
    return reg;
}

}  // namespace homlie::testutil
