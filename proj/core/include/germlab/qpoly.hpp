#pragma once

#include "germlab/rational.hpp"

#include <stdexcept>
#include <vector>

// Dense univariate polynomials over Q, coefficient c[i] of s^i.
namespace germlab::qpoly {

using Poly = std::vector<Rational>;

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }
inline bool is_zero(const Poly& p) { return p.empty(); }

inline Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size())
        a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (is_zero(a) || is_zero(b))
        return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    if (is_zero(b))
        throw std::invalid_argument("qpoly: division by zero");
    Poly q;
    if (a.size() >= b.size())
        q.assign(a.size() - b.size() + 1, Rational(0));
    while (!is_zero(a) && a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= c * b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}

/// Exact quotient; nullopt-style signalled by throwing when remainder != 0 is
/// not acceptable: use divides() to probe first.
inline bool divides(const Poly& b, const Poly& a) {
    if (is_zero(a))
        return true;
    if (is_zero(b) || a.size() < b.size())
        return false;
    return is_zero(divmod(a, b).second);
}

inline Poly monic(Poly p) {
    trim(p);
    if (is_zero(p))
        return p;
    Rational c = p.back();
    for (auto& x : p)
        x /= c;
    return p;
}

inline Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!is_zero(b)) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

inline Poly derivative(const Poly& p) {
    if (p.size() <= 1)
        return {};
    Poly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i)
        r[i - 1] = p[i] * Rational(static_cast<long>(i));
    return r;
}

inline Poly squarefree_part(const Poly& p) {
    if (degree(p) <= 0)
        return monic(p);
    Poly g = gcd(p, derivative(p));
    return monic(divmod(p, g).first);
}

} // namespace germlab::qpoly
