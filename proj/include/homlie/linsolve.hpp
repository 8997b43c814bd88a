#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "homlie/poly.hpp"

namespace homlie {

/// A constraint was not linear in the declared unknowns; the caller must fall
/// back to substitute-then-check.
struct NonlinearConstraintError : InputError {
    explicit NonlinearConstraintError(MultiPoly p)
        : InputError("nonlinear constraint: " + p.str()), poly(std::move(p)) {}

    MultiPoly poly;
};

/// Linear equations over the rationals in an ordered list of unknowns. Each
/// row has |params| coefficients plus a trailing constant term; a row means
/// sum_i row[i] * params[i] + row[last] = 0.
struct LinearSystem {
    RegistryView reg;
    std::vector<ParamId> params;
    std::vector<std::vector<Rational>> rows;

    int cols() const { return static_cast<int>(params.size()); }
};

/// Parametric solution of a linear system: every pivot unknown expressed as
/// an affine combination of the free unknowns.
struct SolutionSpace {
    struct Affine {
        std::vector<std::pair<ParamId, Rational>> terms;
        Rational constant;
    };

    RegistryView reg;
    std::vector<std::pair<ParamId, Affine>> pivots;  // ordered by parameter index
    std::vector<ParamId> free_params;                // in system column order

    /// Pivot assignments as substitution bindings (pivot -> polynomial in the
    /// free parameters).
    std::map<int, MultiPoly> bindings() const {
        std::map<int, MultiPoly> b;
        for (const auto& [pivot, aff] : pivots) {
            MultiPoly p = MultiPoly::constant(reg, aff.constant);
            for (const auto& [param, coeff] : aff.terms)
                p = p + coeff * MultiPoly::variable(reg, param);
            b.emplace(pivot.index, std::move(p));
        }
        return b;
    }

    std::string affine_str(const Affine& aff) const {
        MultiPoly p = MultiPoly::constant(reg, aff.constant);
        for (const auto& [param, coeff] : aff.terms)
            p = p + coeff * MultiPoly::variable(reg, param);
        return p.str();
    }
};

/// Extracts one linear row per polynomial. Every monomial must be constant or
/// a single unknown of exponent 1; anything else raises
/// NonlinearConstraintError (degree > 1 in the unknowns) or InputError (a
/// parameter outside the unknown list).
inline LinearSystem linearize(const std::vector<MultiPoly>& polys,
                              const std::vector<ParamId>& unknowns) {
    LinearSystem sys;
    sys.params = unknowns;
    std::map<int, int> column;
    for (std::size_t c = 0; c < unknowns.size(); ++c)
        column[unknowns[c].index] = static_cast<int>(c);
    for (const auto& p : polys) {
        if (!sys.reg) sys.reg = p.registry();
        require_same_registry(sys.reg, p.registry());
        std::vector<Rational> row(unknowns.size() + 1, Rational(0));
        for (const auto& t : p.terms()) {
            const auto& factors = t.mono.factors();
            if (factors.empty()) {
                row.back() += t.coeff;
                continue;
            }
            if (t.mono.total_degree() > 1) throw NonlinearConstraintError(p);
            auto it = column.find(factors[0].first);
            if (it == column.end())
                throw InputError("constraint mentions parameter outside the unknown list: " +
                                 p.registry()->name(ParamId{factors[0].first}));
            row[static_cast<std::size_t>(it->second)] += t.coeff;
        }
        sys.rows.push_back(std::move(row));
    }
    return sys;
}

namespace detail {

// Reduced row echelon form. Pivot columns are chosen scanning from the last
// unknown column towards the first, taking the first remaining row with a
// nonzero entry; the constant column never pivots. Scanning right to left
// binds the latest-registered parameters, which reproduces the pivot/free
// split used throughout the sl2 derivations (a33, a21, a31 bound; q3, r2, r3
// bound).
struct Rref {
    std::vector<std::vector<Rational>> rows;  // pivot rows first, then any
                                              // nonzero constant-only rows
    std::vector<int> pivot_cols;              // pivot column of rows[r]
};

inline bool row_is_zero(const std::vector<Rational>& row) {
    for (const auto& v : row)
        if (v != 0) return false;
    return true;
}

inline Rref rref(std::vector<std::vector<Rational>> rows, int ncols) {
    Rref out;
    std::size_t next_row = 0;
    for (int col = ncols - 1; col >= 0; --col) {
        std::size_t r = next_row;
        while (r < rows.size() && rows[r][static_cast<std::size_t>(col)] == 0) ++r;
        if (r == rows.size()) continue;
        std::swap(rows[next_row], rows[r]);
        Rational inv = 1 / rows[next_row][static_cast<std::size_t>(col)];
        for (auto& v : rows[next_row]) v *= inv;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == next_row) continue;
            Rational f = rows[k][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (std::size_t c = 0; c < rows[k].size(); ++c)
                rows[k][c] -= f * rows[next_row][c];
        }
        out.pivot_cols.push_back(col);
        ++next_row;
    }
    // rows below the pivots have zero in every unknown column; keep the ones
    // with a nonzero constant so inconsistency stays visible
    std::size_t keep = next_row;
    for (std::size_t k = next_row; k < rows.size(); ++k)
        if (!row_is_zero(rows[k])) std::swap(rows[keep++], rows[k]);
    rows.resize(keep);
    out.rows = std::move(rows);
    return out;
}

// Reduces a row against an RREF; returns the remainder.
inline std::vector<Rational> reduce_row(std::vector<Rational> row, const Rref& r) {
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
        Rational f = row[static_cast<std::size_t>(r.pivot_cols[k])];
        if (f == 0) continue;
        for (std::size_t c = 0; c < row.size(); ++c) row[c] -= f * r.rows[k][c];
    }
    return row;
}

}  // namespace detail

/// Exact Gaussian elimination to reduced row echelon form, returned as a
/// parametric solution. Throws InputError on an inconsistent system (which
/// cannot happen for homogeneous input).
inline SolutionSpace solve(const LinearSystem& sys) {
    detail::Rref r = detail::rref(sys.rows, sys.cols());
    // a row 0 ... 0 | c with c != 0 means no solution
    for (std::size_t k = 0; k < r.rows.size(); ++k) {
        bool all_zero = true;
        for (int c = 0; c < sys.cols(); ++c)
            if (r.rows[k][static_cast<std::size_t>(c)] != 0) all_zero = false;
        if (all_zero && r.rows[k].back() != 0) throw InputError("inconsistent linear system");
    }
    std::vector<bool> is_pivot(sys.params.size(), false);
    SolutionSpace sol;
    sol.reg = sys.reg;
    std::vector<std::pair<int, std::size_t>> ordered;  // (pivot col, rref row)
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
        is_pivot[static_cast<std::size_t>(r.pivot_cols[k])] = true;
        ordered.emplace_back(r.pivot_cols[k], k);
    }
    std::sort(ordered.begin(), ordered.end());
    for (const auto& [col, k] : ordered) {
        SolutionSpace::Affine aff;
        aff.constant = -r.rows[k].back();
        for (int c = 0; c < sys.cols(); ++c) {
            if (c == col) continue;
            Rational v = r.rows[k][static_cast<std::size_t>(c)];
            if (v != 0) aff.terms.emplace_back(sys.params[static_cast<std::size_t>(c)], -v);
        }
        sol.pivots.emplace_back(sys.params[static_cast<std::size_t>(col)], std::move(aff));
    }
    for (std::size_t c = 0; c < sys.params.size(); ++c)
        if (!is_pivot[c]) sol.free_params.push_back(sys.params[c]);
    return sol;
}

/// Applies the pivot assignments to a polynomial; the result mentions only
/// free parameters of this system and parameters foreign to it.
inline MultiPoly substitute_solution(const SolutionSpace& sol, const MultiPoly& p) {
    require_same_registry(sol.reg, p.registry());
    return p.substitute(sol.bindings());
}

/// True iff the two systems have the same row space (hence the same solution
/// set). Requires identical unknown lists.
inline bool systems_equivalent(const LinearSystem& s1, const LinearSystem& s2) {
    if (!(s1.params == s2.params)) throw InputError("systems have different parameter lists");
    detail::Rref r1 = detail::rref(s1.rows, s1.cols());
    detail::Rref r2 = detail::rref(s2.rows, s2.cols());
    for (const auto& row : s1.rows)
        if (!detail::row_is_zero(detail::reduce_row(row, r2))) return false;
    for (const auto& row : s2.rows)
        if (!detail::row_is_zero(detail::reduce_row(row, r1))) return false;
    return true;
}

}  // namespace homlie
