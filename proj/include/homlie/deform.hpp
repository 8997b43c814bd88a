#pragma once

#include <array>
#include <set>
#include <vector>

#include "homlie/algebra.hpp"

namespace homlie {

/// One-parameter deformation: [.,.]_t = sum_m t^m brackets[m],
/// alpha_t = sum_m t^m maps[m], computed modulo t^truncation_order.
struct Deformation {
    Basis basis;
    std::vector<BracketConstants> brackets;
    std::vector<LinMap> maps;
    int truncation_order;

    Deformation(Basis b, std::vector<BracketConstants> br, std::vector<LinMap> mp, int n)
        : basis(std::move(b)),
          brackets(std::move(br)),
          maps(std::move(mp)),
          truncation_order(n) {
        if (n < 1) throw InputError("truncation order must be >= 1");
        if (brackets.empty()) throw InputError("deformation needs at least the order-0 bracket");
        if (maps.empty()) throw InputError("deformation needs at least the order-0 map");
        if (static_cast<int>(brackets.size()) > n || static_cast<int>(maps.size()) > n)
            throw InputError("more t-orders than the truncation order allows");
        int dim = basis.dim();
        for (const auto& c : brackets)
            if (c.dim() != dim) throw InputError("bracket order dimension mismatch");
        for (const auto& m : maps)
            if (m.dim() != dim) throw InputError("map order dimension mismatch");
    }

    const RegistryView& registry() const { return brackets.front().registry(); }
    int dim() const { return basis.dim(); }

    /// Bracket coefficient of t^m (zero beyond the stored list).
    BracketConstants bracket_at(int m) const {
        if (m < static_cast<int>(brackets.size())) return brackets[static_cast<std::size_t>(m)];
        return BracketConstants(registry(), dim());
    }

    LinMap map_at(int m) const {
        if (m < static_cast<int>(maps.size())) return maps[static_cast<std::size_t>(m)];
        return LinMap::zero(registry(), dim());
    }
};

/// Coefficients of t^0..t^K of an identity evaluated on one basis triple.
struct ExpansionReport {
    std::array<int, 3> triple;
    std::vector<Vec> per_order;
};

namespace detail {

inline void check_triple(const Deformation& d, const std::array<int, 3>& t) {
    int n = d.dim();
    for (int v : t)
        if (v < 1 || v > n) throw InputError("basis triple index out of range");
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
        throw InputError("basis triple indices must be distinct");
}

// Coefficient of t^m of sum_cyc [alpha_t(x), [y, z]_t]_t as a full polynomial
// in t (no truncation): the Hom-Jacobi expansion when `maps` is the alpha
// series, the plain Jacobiator expansion when `maps` = {identity}.
inline Vec expansion_coefficient(const Deformation& d, const std::vector<LinMap>& maps,
                                 const std::array<int, 3>& triple, int m) {
    const RegistryView& reg = d.registry();
    int n = d.dim();
    Vec acc = Vec::zero(reg, n);
    const std::array<std::array<int, 3>, 3> cyc{{{triple[0], triple[1], triple[2]},
                                                 {triple[1], triple[2], triple[0]},
                                                 {triple[2], triple[0], triple[1]}}};
    int nb = static_cast<int>(d.brackets.size());
    int nm = static_cast<int>(maps.size());
    for (const auto& [x, y, z] : cyc) {
        Vec ex = Vec::basis(reg, n, x), ey = Vec::basis(reg, n, y), ez = Vec::basis(reg, n, z);
        for (int a = 0; a < nm && a <= m; ++a)
            for (int b = 0; b < nb && a + b <= m; ++b) {
                int c = m - a - b;
                if (c >= nb) continue;
                Vec inner = bracket_eval(d.brackets[static_cast<std::size_t>(c)], ey, ez);
                Vec ax = maps[static_cast<std::size_t>(a)].apply(ex);
                acc = acc + bracket_eval(d.brackets[static_cast<std::size_t>(b)], ax, inner);
            }
    }
    return acc;
}

inline ExpansionReport expand(const Deformation& d, const std::vector<LinMap>& maps,
                              const std::array<int, 3>& triple, int max_order) {
    check_triple(d, triple);
    if (max_order < 0) throw InputError("expansion order must be >= 0");
    ExpansionReport r{triple, {}};
    for (int m = 0; m <= max_order; ++m)
        r.per_order.push_back(expansion_coefficient(d, maps, triple, m));
    return r;
}

}  // namespace detail

/// Maximal t-degree the expansion can produce: two bracket factors and one
/// map factor.
inline int default_hom_expansion_order(const Deformation& d) {
    return (static_cast<int>(d.brackets.size()) - 1) * 2 +
           (static_cast<int>(d.maps.size()) - 1);
}

inline int default_jacobi_expansion_order(const Deformation& d) {
    return (static_cast<int>(d.brackets.size()) - 1) * 2;
}

/// Expands sum_cyc [alpha_t(x_i), [x_j, x_k]_t]_t in powers of t, as a full
/// polynomial (not reduced modulo t^N), up to the requested order.
inline ExpansionReport expand_hom_jacobi(const Deformation& d, const std::array<int, 3>& triple,
                                         int max_order) {
    return detail::expand(d, d.maps, triple, max_order);
}

inline ExpansionReport expand_hom_jacobi(const Deformation& d, const std::array<int, 3>& triple) {
    return expand_hom_jacobi(d, triple, default_hom_expansion_order(d));
}

/// Expands the Jacobiator of [.,.]_t (twist ignored) in powers of t.
inline ExpansionReport expand_jacobi(const Deformation& d, const std::array<int, 3>& triple,
                                     int max_order) {
    std::vector<LinMap> id{LinMap::identity(d.registry(), d.dim())};
    return detail::expand(d, id, triple, max_order);
}

inline ExpansionReport expand_jacobi(const Deformation& d, const std::array<int, 3>& triple) {
    return expand_jacobi(d, triple, default_jacobi_expansion_order(d));
}

/// All nonzero coordinate polynomials at the requested orders; these are the
/// left sides of the vanishing constraints "p = 0".
inline std::vector<MultiPoly> vanishing_constraints(const ExpansionReport& report,
                                                    const std::set<int>& orders) {
    std::vector<MultiPoly> out;
    for (int m : orders) {
        if (m < 0 || m >= static_cast<int>(report.per_order.size()))
            throw InputError("requested expansion order not present in report");
        for (const auto& coord : report.per_order[static_cast<std::size_t>(m)].coords)
            if (!coord.is_zero()) out.push_back(coord);
    }
    return out;
}

/// Inverse of the map series modulo t^N; requires maps[0] = identity.
inline std::vector<LinMap> invert_map_series(const std::vector<LinMap>& maps, int n) {
    PolySeries<LinMap> s(maps, n);
    return series_invert_unipotent(s).coeff;
}

/// Yau untwisting {x,y}_t = alpha_t^{-1}([x,y]_t) modulo t^N. The result has
/// identity map orders. Requires alpha_0 = identity.
inline Deformation untwist(const Deformation& d) {
    if (!d.maps.front().is_identity())
        throw InputError("untwist requires alpha_0 = identity (unipotent twist)");
    std::vector<LinMap> inv = invert_map_series(d.maps, d.truncation_order);
    std::vector<BracketConstants> out;
    for (int m = 0; m < d.truncation_order; ++m) {
        BracketConstants acc(d.registry(), d.dim());
        for (int a = 0; a <= m && a < static_cast<int>(inv.size()); ++a)
            acc = acc + d.bracket_at(m - a).map_through(inv[static_cast<std::size_t>(a)]);
        out.push_back(std::move(acc));
    }
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return Deformation(d.basis, std::move(out), {LinMap::identity(d.registry(), d.dim())},
                       d.truncation_order);
}

/// Yau twisting [x,y]_t = m_t({x,y}_t) modulo t^N; the twist of the result is
/// the given map series. Inverse of untwist when m is the original series.
inline Deformation yau_twist(const Deformation& d, const std::vector<LinMap>& m) {
    if (m.empty() || !m.front().is_identity())
        throw InputError("yau_twist requires a map series with identity order-0 term");
    std::vector<BracketConstants> out;
    for (int k = 0; k < d.truncation_order; ++k) {
        BracketConstants acc(d.registry(), d.dim());
        for (int a = 0; a <= k && a < static_cast<int>(m.size()); ++a)
            acc = acc + d.bracket_at(k - a).map_through(m[static_cast<std::size_t>(a)]);
        out.push_back(std::move(acc));
    }
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return Deformation(d.basis, std::move(out), m, d.truncation_order);
}

}  // namespace homlie
