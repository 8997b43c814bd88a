#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homlie/poly.hpp"
#include "homlie/series.hpp"

namespace homlie {

struct Basis {
    std::vector<std::string> names;

    static Basis standard(int n) {
        if (n < 1) throw InputError("basis dimension must be >= 1");
        Basis b;
        for (int i = 1; i <= n; ++i) b.names.push_back("x" + std::to_string(i));
        return b;
    }

    int dim() const { return static_cast<int>(names.size()); }

    friend bool operator==(const Basis& a, const Basis& b) { return a.names == b.names; }
};

/// Element of V with symbolic coordinates in a fixed basis.
struct Vec {
    RegistryView reg;
    std::vector<MultiPoly> coords;

    static Vec zero(RegistryView r, int n) {
        Vec v{r, {}};
        for (int i = 0; i < n; ++i) v.coords.push_back(MultiPoly::zero(r));
        return v;
    }

    /// 1-based basis vector e_i.
    static Vec basis(RegistryView r, int n, int i) {
        if (i < 1 || i > n) throw InputError("basis index out of range");
        Vec v = zero(r, n);
        v.coords[static_cast<std::size_t>(i - 1)] = MultiPoly::constant(r, 1);
        return v;
    }

    int dim() const { return static_cast<int>(coords.size()); }

    bool is_zero() const {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }

    friend Vec operator+(const Vec& a, const Vec& b) {
        if (a.dim() != b.dim()) throw InputError("vector dimension mismatch");
        Vec r{a.reg, {}};
        for (int i = 0; i < a.dim(); ++i) r.coords.push_back(a.coords[i] + b.coords[i]);
        return r;
    }

    friend Vec operator-(const Vec& a) {
        Vec r{a.reg, {}};
        for (const auto& c : a.coords) r.coords.push_back(-c);
        return r;
    }

    friend Vec operator-(const Vec& a, const Vec& b) { return a + (-b); }

    friend Vec operator*(const MultiPoly& s, const Vec& a) {
        Vec r{a.reg, {}};
        for (const auto& c : a.coords) r.coords.push_back(s * c);
        return r;
    }

    friend Vec operator*(const Rational& s, const Vec& a) {
        return MultiPoly::constant(a.reg, s) * a;
    }

    friend bool operator==(const Vec& a, const Vec& b) { return a.coords == b.coords; }

    std::string str() const {
        std::string out = "(";
        for (int i = 0; i < dim(); ++i) {
            if (i) out += ", ";
            out += coords[static_cast<std::size_t>(i)].str();
        }
        return out + ")";
    }
};

/// Linear endomorphism of V: entry(i, j) is the coefficient of x_i in the
/// image of x_j, so column j is the image of the j-th basis vector.
class LinMap {
  public:
    LinMap(RegistryView reg, int n) : reg_(std::move(reg)), n_(n) {
        if (n < 1) throw InputError("map dimension must be >= 1");
        m_.assign(static_cast<std::size_t>(n),
                  std::vector<MultiPoly>(static_cast<std::size_t>(n), MultiPoly::zero(reg_)));
    }

    static LinMap identity(RegistryView reg, int n) {
        LinMap a(reg, n);
        for (int i = 1; i <= n; ++i) a.set(i, i, MultiPoly::constant(reg, 1));
        return a;
    }

    static LinMap zero(RegistryView reg, int n) { return LinMap(std::move(reg), n); }

    int dim() const { return n_; }
    const RegistryView& registry() const { return reg_; }

    const MultiPoly& entry(int i, int j) const {
        check_index(i), check_index(j);
        return m_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }

    void set(int i, int j, MultiPoly v) {
        check_index(i), check_index(j);
        require_same_registry(reg_, v.registry());
        m_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = std::move(v);
    }

    Vec apply(const Vec& v) const {
        if (v.dim() != n_) throw InputError("map/vector dimension mismatch");
        Vec r = Vec::zero(reg_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                r.coords[static_cast<std::size_t>(i)] =
                    r.coords[static_cast<std::size_t>(i)] +
                    m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                        v.coords[static_cast<std::size_t>(j)];
        return r;
    }

    /// Matrix product: (a.compose(b))(v) = a(b(v)).
    LinMap compose(const LinMap& b) const {
        if (b.n_ != n_) throw InputError("map dimension mismatch");
        require_same_registry(reg_, b.reg_);
        LinMap r(reg_, n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) {
                MultiPoly acc = MultiPoly::zero(reg_);
                for (int k = 1; k <= n_; ++k) acc = acc + entry(i, k) * b.entry(k, j);
                r.set(i, j, std::move(acc));
            }
        return r;
    }

    friend LinMap operator+(const LinMap& a, const LinMap& b) {
        if (a.n_ != b.n_) throw InputError("map dimension mismatch");
        LinMap r(a.reg_, a.n_);
        for (int i = 1; i <= a.n_; ++i)
            for (int j = 1; j <= a.n_; ++j) r.set(i, j, a.entry(i, j) + b.entry(i, j));
        return r;
    }

    friend LinMap operator-(const LinMap& a) {
        LinMap r(a.reg_, a.n_);
        for (int i = 1; i <= a.n_; ++i)
            for (int j = 1; j <= a.n_; ++j) r.set(i, j, -a.entry(i, j));
        return r;
    }

    friend LinMap operator*(const MultiPoly& s, const LinMap& a) {
        LinMap r(a.reg_, a.n_);
        for (int i = 1; i <= a.n_; ++i)
            for (int j = 1; j <= a.n_; ++j) r.set(i, j, s * a.entry(i, j));
        return r;
    }

    friend bool operator==(const LinMap& a, const LinMap& b) {
        return a.n_ == b.n_ && a.m_ == b.m_;
    }

    bool is_identity() const { return *this == identity(reg_, n_); }
    bool is_zero() const { return *this == zero(reg_, n_); }

  private:
    void check_index(int i) const {
        if (i < 1 || i > n_) throw InputError("map index out of range");
    }

    RegistryView reg_;
    int n_;
    std::vector<std::vector<MultiPoly>> m_;
};

// Series payload hooks so PolySeries<LinMap> works (Neumann inversion of
// unipotent map series).
inline LinMap payload_add(const LinMap& a, const LinMap& b) { return a + b; }
inline LinMap payload_mul(const LinMap& a, const LinMap& b) { return a.compose(b); }
inline LinMap payload_zero_like(const LinMap& a) { return LinMap::zero(a.registry(), a.dim()); }
inline LinMap payload_identity_like(const LinMap& a) {
    return LinMap::identity(a.registry(), a.dim());
}
inline bool payload_is_zero(const LinMap& a) { return a.is_zero(); }
inline bool payload_is_identity(const LinMap& a) { return a.is_identity(); }
inline LinMap negate_payload(const LinMap& a) { return -a; }

/// Skew-symmetric structure constants: [x_i, x_j] = sum_k c(i,j,k) x_k.
/// Only i < j is stored; the rest follows from skew-symmetry.
class BracketConstants {
  public:
    BracketConstants(RegistryView reg, int n) : reg_(std::move(reg)), n_(n) {
        if (n < 1) throw InputError("bracket dimension must be >= 1");
    }

    int dim() const { return n_; }
    const RegistryView& registry() const { return reg_; }

    void set(int i, int j, Vec v) {
        check_pair(i, j);
        if (v.dim() != n_) throw InputError("bracket entry dimension mismatch");
        c_[{i, j}] = std::move(v);
    }

    void set(int i, int j, int k, MultiPoly coeff) {
        check_pair(i, j);
        if (k < 1 || k > n_) throw InputError("bracket coordinate index out of range");
        auto it = c_.find({i, j});
        if (it == c_.end()) it = c_.emplace(std::make_pair(i, j), Vec::zero(reg_, n_)).first;
        it->second.coords[static_cast<std::size_t>(k - 1)] = std::move(coeff);
    }

    MultiPoly lookup(int i, int j, int k) const {
        Vec v = bracket_basis(i, j);
        if (k < 1 || k > n_) throw InputError("bracket coordinate index out of range");
        return v.coords[static_cast<std::size_t>(k - 1)];
    }

    /// [x_i, x_j] with skew-symmetry applied; zero on the diagonal.
    Vec bracket_basis(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) throw InputError("basis index out of range");
        if (i == j) return Vec::zero(reg_, n_);
        bool flip = i > j;
        if (flip) std::swap(i, j);
        auto it = c_.find({i, j});
        Vec v = it == c_.end() ? Vec::zero(reg_, n_) : it->second;
        return flip ? -v : v;
    }

    const std::map<std::pair<int, int>, Vec>& stored() const { return c_; }

    /// Post-composition with a linear map: (A . [.,.])(x_i, x_j) = A([x_i, x_j]).
    BracketConstants map_through(const LinMap& a) const {
        BracketConstants r(reg_, n_);
        for (const auto& [ij, v] : c_) r.set(ij.first, ij.second, a.apply(v));
        return r;
    }

    friend BracketConstants operator+(const BracketConstants& a, const BracketConstants& b) {
        if (a.n_ != b.n_) throw InputError("bracket dimension mismatch");
        BracketConstants r(a.reg_, a.n_);
        for (int i = 1; i <= a.n_; ++i)
            for (int j = i + 1; j <= a.n_; ++j) {
                Vec v = a.bracket_basis(i, j) + b.bracket_basis(i, j);
                if (!v.is_zero()) r.set(i, j, std::move(v));
            }
        return r;
    }

    friend bool operator==(const BracketConstants& a, const BracketConstants& b) {
        if (a.n_ != b.n_) return false;
        for (int i = 1; i <= a.n_; ++i)
            for (int j = i + 1; j <= a.n_; ++j)
                if (!(a.bracket_basis(i, j) == b.bracket_basis(i, j))) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& [ij, v] : c_)
            if (!v.is_zero()) return false;
        return true;
    }

  private:
    void check_pair(int i, int j) const {
        if (i < 1 || j < 1 || i > n_ || j > n_) throw InputError("bracket index out of range");
        if (i >= j) throw InputError("lower-triangle entry; specify i < j");
    }

    RegistryView reg_;
    int n_;
    std::map<std::pair<int, int>, Vec> c_;
};

struct HomAlgebra {
    Basis basis;
    BracketConstants bracket;
    LinMap twist;
};

/// sl2 with the classical bracket [x1,x2] = 2 x2, [x1,x3] = -2 x3,
/// [x2,x3] = x1, twisted by the identity.
inline HomAlgebra sl2(RegistryView reg) {
    BracketConstants c(reg, 3);
    c.set(1, 2, 2, MultiPoly::constant(reg, 2));
    c.set(1, 3, 3, MultiPoly::constant(reg, -2));
    c.set(2, 3, 1, MultiPoly::constant(reg, 1));
    return HomAlgebra{Basis::standard(3), std::move(c), LinMap::identity(reg, 3)};
}

inline std::string index_pair_name(const std::string& prefix, int i, int j, int n) {
    if (n <= 9) return prefix + std::to_string(i) + std::to_string(j);
    return prefix + std::to_string(i) + "_" + std::to_string(j);
}

/// n x n matrix of fresh (or pre-registered) parameters prefix_ij.
inline LinMap generic_map(const Registry& reg, const std::string& prefix, int n = 3) {
    LinMap a(reg, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            a.set(i, j, MultiPoly::variable(reg, reg->intern(index_pair_name(prefix, i, j, n))));
    return a;
}

/// The fully generic skew bracket in dimension 3:
/// [x1,x2] = p_k x_k, [x1,x3] = q_k x_k, [x2,x3] = r_k x_k.
inline BracketConstants generic_bracket(const Registry& reg, const std::string& p,
                                        const std::string& q, const std::string& r) {
    BracketConstants c(reg, 3);
    const std::array<std::pair<std::pair<int, int>, std::string>, 3> rows{
        {{{1, 2}, p}, {{1, 3}, q}, {{2, 3}, r}}};
    for (const auto& [ij, name] : rows)
        for (int k = 1; k <= 3; ++k)
            c.set(ij.first, ij.second, k,
                  MultiPoly::variable(reg, reg->intern(name + std::to_string(k))));
    return c;
}

/// Bilinear extension of the structure constants to symbolic vectors.
inline Vec bracket_eval(const BracketConstants& b, const Vec& u, const Vec& v) {
    if (u.dim() != b.dim() || v.dim() != b.dim())
        throw InputError("bracket/vector dimension mismatch");
    Vec r = Vec::zero(b.registry(), b.dim());
    for (int i = 1; i <= b.dim(); ++i)
        for (int j = i + 1; j <= b.dim(); ++j) {
            // [u, v] picks up c(i,j) * (u_i v_j - u_j v_i)
            MultiPoly w = u.coords[static_cast<std::size_t>(i - 1)] *
                              v.coords[static_cast<std::size_t>(j - 1)] -
                          u.coords[static_cast<std::size_t>(j - 1)] *
                              v.coords[static_cast<std::size_t>(i - 1)];
            if (w.is_zero()) continue;
            r = r + w * b.bracket_basis(i, j);
        }
    return r;
}

/// [u,[v,w]] + [v,[w,u]] + [w,[u,v]].
inline Vec jacobiator(const BracketConstants& b, const Vec& u, const Vec& v, const Vec& w) {
    return bracket_eval(b, u, bracket_eval(b, v, w)) +
           bracket_eval(b, v, bracket_eval(b, w, u)) +
           bracket_eval(b, w, bracket_eval(b, u, v));
}

/// [a(u),[v,w]] + [a(v),[w,u]] + [a(w),[u,v]].
inline Vec hom_jacobiator(const BracketConstants& b, const LinMap& a, const Vec& u, const Vec& v,
                          const Vec& w) {
    return bracket_eval(b, a.apply(u), bracket_eval(b, v, w)) +
           bracket_eval(b, a.apply(v), bracket_eval(b, w, u)) +
           bracket_eval(b, a.apply(w), bracket_eval(b, u, v));
}

inline Vec hom_jacobiator(const HomAlgebra& alg, const Vec& u, const Vec& v, const Vec& w) {
    return hom_jacobiator(alg.bracket, alg.twist, u, v, w);
}

struct JacobiCheck {
    bool holds;
    std::array<int, 3> triple;  // first failing triple when !holds
    MultiPoly witness;          // first nonzero coordinate; zero when holds
};

/// Decides the Hom-Jacobi identity by evaluating the twisted Jacobiator on
/// all basis triples i < j < k, in lexicographic order.
inline JacobiCheck check_hom_jacobi(const HomAlgebra& alg) {
    int n = alg.bracket.dim();
    const RegistryView& reg = alg.bracket.registry();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                Vec r = hom_jacobiator(alg, Vec::basis(reg, n, i), Vec::basis(reg, n, j),
                                       Vec::basis(reg, n, k));
                for (const auto& coord : r.coords)
                    if (!coord.is_zero()) return JacobiCheck{false, {i, j, k}, coord};
            }
    return JacobiCheck{true, {0, 0, 0}, MultiPoly::zero(reg)};
}

}  // namespace homlie
