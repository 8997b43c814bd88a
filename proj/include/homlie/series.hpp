#pragma once

#include <vector>

#include "homlie/poly.hpp"

namespace homlie {

// Payload hooks for scalar (MultiPoly) coefficients; matrix payloads provide
// their own overloads (found by ADL at instantiation).
inline MultiPoly payload_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
inline MultiPoly payload_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
inline MultiPoly payload_zero_like(const MultiPoly& a) { return MultiPoly::zero(a.registry()); }
inline MultiPoly payload_identity_like(const MultiPoly& a) {
    return MultiPoly::constant(a.registry(), 1);
}
inline bool payload_is_zero(const MultiPoly& a) { return a.is_zero(); }
inline bool payload_is_identity(const MultiPoly& a) {
    return a == MultiPoly::constant(a.registry(), 1);
}
inline MultiPoly negate_payload(const MultiPoly& a) { return -a; }

/// Element of K[t]/(t^N) with payload coefficients: coeff[k] is the
/// coefficient of t^k. All arithmetic discards orders >= truncation_order.
template <class T>
struct PolySeries {
    std::vector<T> coeff;
    int truncation_order;

    PolySeries(std::vector<T> c, int n) : coeff(std::move(c)), truncation_order(n) {
        if (n < 1) throw InputError("truncation order must be >= 1");
        if (coeff.empty()) throw InputError("series needs at least the order-0 coefficient");
        if (static_cast<int>(coeff.size()) > n)
            throw InputError("series has more coefficients than its truncation order");
    }

    /// Coefficient of t^k, zero beyond the stored list.
    T at(int k) const {
        if (k < 0 || k >= truncation_order) throw InputError("series order out of range");
        if (k < static_cast<int>(coeff.size())) return coeff[static_cast<std::size_t>(k)];
        return payload_zero_like(coeff[0]);
    }
};

template <class T>
bool series_equal(const PolySeries<T>& a, const PolySeries<T>& b) {
    if (a.truncation_order != b.truncation_order) return false;
    for (int k = 0; k < a.truncation_order; ++k)
        if (!(a.at(k) == b.at(k))) return false;
    return true;
}

template <class T>
PolySeries<T> series_add(const PolySeries<T>& a, const PolySeries<T>& b) {
    if (a.truncation_order != b.truncation_order)
        throw InputError("series truncation order mismatch");
    std::vector<T> out;
    for (int k = 0; k < a.truncation_order; ++k) out.push_back(payload_add(a.at(k), b.at(k)));
    return PolySeries<T>(std::move(out), a.truncation_order);
}

/// Cauchy product truncated at the common order.
template <class T>
PolySeries<T> series_mul(const PolySeries<T>& a, const PolySeries<T>& b) {
    if (a.truncation_order != b.truncation_order)
        throw InputError("series truncation order mismatch");
    int n = a.truncation_order;
    std::vector<T> out;
    for (int k = 0; k < n; ++k) {
        T acc = payload_zero_like(a.coeff[0]);
        for (int i = 0; i <= k; ++i) acc = payload_add(acc, payload_mul(a.at(i), b.at(k - i)));
        out.push_back(std::move(acc));
    }
    return PolySeries<T>(std::move(out), n);
}

template <class T>
PolySeries<T> series_identity_like(const PolySeries<T>& a) {
    std::vector<T> out{payload_identity_like(a.coeff[0])};
    for (int k = 1; k < a.truncation_order; ++k) out.push_back(payload_zero_like(a.coeff[0]));
    return PolySeries<T>(std::move(out), a.truncation_order);
}

/// Two-sided inverse of a unipotent series (order-0 coefficient = identity)
/// via the recursive Neumann relations inv_k = -sum_{i=1..k} s_i * inv_{k-i}.
template <class T>
PolySeries<T> series_invert_unipotent(const PolySeries<T>& s) {
    if (!payload_is_identity(s.coeff[0]))
        throw InputError("series is not unipotent: order-0 coefficient must be the identity");
    std::vector<T> inv{payload_identity_like(s.coeff[0])};
    for (int k = 1; k < s.truncation_order; ++k) {
        T acc = payload_zero_like(s.coeff[0]);
        for (int i = 1; i <= k; ++i)
            acc = payload_add(acc, payload_mul(s.at(i), inv[static_cast<std::size_t>(k - i)]));
        inv.push_back(negate_payload(acc));
    }
    return PolySeries<T>(std::move(inv), s.truncation_order);
}

}  // namespace homlie
