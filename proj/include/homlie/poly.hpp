#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homlie/param.hpp"
#include "homlie/rational.hpp"

namespace homlie {

/// Power product of parameters. Factors are sorted by parameter index and
/// carry strictly positive exponents; the empty monomial is 1.
class Monomial {
  public:
    using Factor = std::pair<int, int>;  // (parameter index, exponent)

    Monomial() = default;

    explicit Monomial(std::vector<Factor> factors) : f_(std::move(factors)) {
        std::sort(f_.begin(), f_.end());
        for (std::size_t i = 0; i < f_.size(); ++i) {
            if (f_[i].second <= 0) throw InputError("monomial exponent must be positive");
            if (i > 0 && f_[i].first == f_[i - 1].first)
                throw InputError("duplicate parameter in monomial");
        }
    }

    static Monomial one() { return Monomial{}; }
    static Monomial variable(ParamId p) { return Monomial({{p.index, 1}}); }

    bool is_constant() const { return f_.empty(); }

    int total_degree() const {
        int d = 0;
        for (const auto& [p, e] : f_) d += e;
        return d;
    }

    const std::vector<Factor>& factors() const { return f_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        std::size_t i = 0, j = 0;
        while (i < a.f_.size() || j < b.f_.size()) {
            if (j == b.f_.size() || (i < a.f_.size() && a.f_[i].first < b.f_[j].first)) {
                r.f_.push_back(a.f_[i++]);
            } else if (i == a.f_.size() || b.f_[j].first < a.f_[i].first) {
                r.f_.push_back(b.f_[j++]);
            } else {
                r.f_.emplace_back(a.f_[i].first, a.f_[i].second + b.f_[j].second);
                ++i, ++j;
            }
        }
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    /// Graded lexicographic order: higher total degree is greater; ties are
    /// broken at the smallest parameter index where exponents differ, the
    /// larger exponent winning. Returns <0, 0, >0 as a <, ==, > b.
    static int compare(const Monomial& a, const Monomial& b) {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db ? -1 : 1;
        std::size_t i = 0, j = 0;
        while (i < a.f_.size() && j < b.f_.size()) {
            if (a.f_[i].first != b.f_[j].first) {
                // the monomial owning the smaller index has positive exponent there
                return a.f_[i].first < b.f_[j].first ? 1 : -1;
            }
            if (a.f_[i].second != b.f_[j].second)
                return a.f_[i].second < b.f_[j].second ? -1 : 1;
            ++i, ++j;
        }
        return 0;  // equal degree and all shared factors match => identical
    }

  private:
    std::vector<Factor> f_;
};

/// Comparator placing greater monomials first (leading term order).
struct MonomialDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::compare(a, b) > 0;
    }
};

/// Sparse multivariate polynomial over the rationals. Terms are stored in
/// strictly decreasing graded-lex order with no zero coefficients, so
/// structural equality is polynomial equality.
class MultiPoly {
  public:
    struct Term {
        Monomial mono;
        Rational coeff;

        friend bool operator==(const Term& a, const Term& b) {
            return a.mono == b.mono && a.coeff == b.coeff;
        }
    };

    static MultiPoly zero(RegistryView reg) { return MultiPoly(std::move(reg), {}); }

    static MultiPoly constant(RegistryView reg, Rational c) {
        std::vector<Term> t;
        if (c != 0) t.push_back({Monomial::one(), std::move(c)});
        return MultiPoly(std::move(reg), std::move(t));
    }

    static MultiPoly variable(RegistryView reg, ParamId p) {
        return MultiPoly(std::move(reg), {{Monomial::variable(p), Rational(1)}});
    }

    /// Builds from arbitrary terms, merging duplicates and dropping zeros.
    static MultiPoly from_terms(RegistryView reg, const std::vector<Term>& raw) {
        std::map<Monomial, Rational, MonomialDescending> acc;
        for (const auto& t : raw) acc[t.mono] += t.coeff;
        return from_map(std::move(reg), acc);
    }

    bool is_zero() const { return terms_.empty(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
        return d;
    }

    const std::vector<Term>& terms() const { return terms_; }
    const RegistryView& registry() const { return reg_; }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        require_same_registry(a.reg_, b.reg_);
        std::vector<Term> out;
        out.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size()) {
                out.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size()) {
                out.push_back(b.terms_[j++]);
            } else {
                int c = Monomial::compare(a.terms_[i].mono, b.terms_[j].mono);
                if (c > 0) {
                    out.push_back(a.terms_[i++]);
                } else if (c < 0) {
                    out.push_back(b.terms_[j++]);
                } else {
                    Rational s = a.terms_[i].coeff + b.terms_[j].coeff;
                    if (s != 0) out.push_back({a.terms_[i].mono, std::move(s)});
                    ++i, ++j;
                }
            }
        }
        return MultiPoly(a.reg_, std::move(out));
    }

    friend MultiPoly operator-(const MultiPoly& a) {
        std::vector<Term> out = a.terms_;
        for (auto& t : out) t.coeff = -t.coeff;
        return MultiPoly(a.reg_, std::move(out));
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        require_same_registry(a.reg_, b.reg_);
        std::map<Monomial, Rational, MonomialDescending> acc;
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) acc[ta.mono * tb.mono] += ta.coeff * tb.coeff;
        return from_map(a.reg_, acc);
    }

    friend MultiPoly operator*(const MultiPoly& a, const Rational& c) {
        if (c == 0) return zero(a.reg_);
        std::vector<Term> out = a.terms_;
        for (auto& t : out) t.coeff *= c;
        return MultiPoly(a.reg_, std::move(out));
    }

    friend MultiPoly operator*(const Rational& c, const MultiPoly& a) { return a * c; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.reg_.get() == b.reg_.get() && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Exact substitution of parameters by polynomials; unbound parameters
    /// stay as themselves. Bindings are keyed by parameter index.
    MultiPoly substitute(const std::map<int, MultiPoly>& bindings) const {
        for (const auto& [idx, val] : bindings) require_same_registry(reg_, val.registry());
        MultiPoly acc = zero(reg_);
        for (const auto& t : terms_) {
            MultiPoly factor = constant(reg_, t.coeff);
            for (const auto& [p, e] : t.mono.factors()) {
                auto it = bindings.find(p);
                MultiPoly base =
                    it != bindings.end() ? it->second : variable(reg_, ParamId{p});
                for (int k = 0; k < e; ++k) factor = factor * base;
            }
            acc = acc + factor;
        }
        return acc;
    }

    /// Exact evaluation; every parameter occurring in the polynomial must be bound.
    Rational eval(const std::map<int, Rational>& point) const {
        Rational acc(0);
        for (const auto& t : terms_) {
            Rational v = t.coeff;
            for (const auto& [p, e] : t.mono.factors()) {
                auto it = point.find(p);
                if (it == point.end())
                    throw InputError("unbound parameter in eval: " + reg_->name(ParamId{p}));
                for (int k = 0; k < e; ++k) v *= it->second;
            }
            acc += v;
        }
        return acc;
    }

    /// Canonical rendering: terms in graded-lex order, explicit '*' and '^'.
    /// Re-parsing the output reproduces the polynomial exactly.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const Term& t = terms_[i];
            bool neg = t.coeff < 0;
            Rational mag = neg ? Rational(-t.coeff) : t.coeff;
            if (i == 0) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (t.mono.is_constant()) {
                out += rational_str(mag);
            } else {
                if (mag != 1) out += rational_str(mag) + "*";
                bool first = true;
                for (const auto& [p, e] : t.mono.factors()) {
                    if (!first) out += "*";
                    first = false;
                    out += reg_->name(ParamId{p});
                    if (e != 1) out += "^" + std::to_string(e);
                }
            }
        }
        return out;
    }

  private:
    MultiPoly(RegistryView reg, std::vector<Term> terms)
        : reg_(std::move(reg)), terms_(std::move(terms)) {
        if (!reg_) throw InputError("polynomial requires a registry");
    }

    static MultiPoly from_map(RegistryView reg,
                              const std::map<Monomial, Rational, MonomialDescending>& acc) {
        std::vector<Term> out;
        out.reserve(acc.size());
        for (const auto& [m, c] : acc)
            if (c != 0) out.push_back({m, c});
        return MultiPoly(std::move(reg), std::move(out));
    }

    RegistryView reg_;
    std::vector<Term> terms_;
};

}  // namespace homlie
