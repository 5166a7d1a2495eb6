#pragma once

// Order-2 forward-mode jets: value, gradient and Hessian w.r.t. a fixed set
// of base variables, propagated exactly through arithmetic and the
// elementary functions of the expression language. Nesting Taylor2 inside
// Taylor2 yields fourth-order information, which the diagnostics use to
// differentiate derived scalar fields (e.g. mean-curvature norms) exactly.

#include <cmath>
#include <vector>

#include "tlab/errors.hpp"
#include "tlab/small_linalg.hpp"

namespace tlab {

template <class S>
struct Taylor2 {
    S v{};
    std::vector<S> d1;  // size m
    std::vector<S> d2;  // m*m row-major, symmetric

    Taylor2() = default;

    int vars() const { return static_cast<int>(d1.size()); }

    S& hess(int i, int j) { return d2[static_cast<size_t>(i) * d1.size() + j]; }
    const S& hess(int i, int j) const { return d2[static_cast<size_t>(i) * d1.size() + j]; }

    static Taylor2 constant(const S& c, int m) {
        Taylor2 t;
        t.v = c;
        t.d1.assign(m, from_constant(0.0, c));
        t.d2.assign(static_cast<size_t>(m) * m, from_constant(0.0, c));
        return t;
    }

    static Taylor2 variable(const S& x, int index, int m) {
        Taylor2 t = constant(x, m);
        t.d1[index] = from_constant(1.0, x);
        return t;
    }
};

template <class S>
double scalar_value(const Taylor2<S>& t) {
    return scalar_value(t.v);
}

template <class S>
Taylor2<S> from_constant(double c, const Taylor2<S>& like) {
    return Taylor2<S>::constant(from_constant(c, like.v), like.vars());
}

template <class S>
Taylor2<S> operator-(const Taylor2<S>& u) {
    Taylor2<S> r = u;
    r.v = -r.v;
    for (auto& x : r.d1) x = -x;
    for (auto& x : r.d2) x = -x;
    return r;
}

template <class S>
Taylor2<S> operator+(const Taylor2<S>& u, const Taylor2<S>& w) {
    Taylor2<S> r = u;
    r.v = r.v + w.v;
    for (size_t i = 0; i < r.d1.size(); ++i) r.d1[i] = r.d1[i] + w.d1[i];
    for (size_t i = 0; i < r.d2.size(); ++i) r.d2[i] = r.d2[i] + w.d2[i];
    return r;
}

template <class S>
Taylor2<S> operator-(const Taylor2<S>& u, const Taylor2<S>& w) {
    Taylor2<S> r = u;
    r.v = r.v - w.v;
    for (size_t i = 0; i < r.d1.size(); ++i) r.d1[i] = r.d1[i] - w.d1[i];
    for (size_t i = 0; i < r.d2.size(); ++i) r.d2[i] = r.d2[i] - w.d2[i];
    return r;
}

template <class S>
Taylor2<S> operator*(const Taylor2<S>& u, const Taylor2<S>& w) {
    const int m = u.vars();
    Taylor2<S> r = Taylor2<S>::constant(u.v * w.v, m);
    for (int i = 0; i < m; ++i) r.d1[i] = u.d1[i] * w.v + u.v * w.d1[i];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            r.hess(i, j) = u.hess(i, j) * w.v + u.d1[i] * w.d1[j] + u.d1[j] * w.d1[i] + u.v * w.hess(i, j);
    return r;
}

// Chain rule for f(u) given f(u.v), f'(u.v), f''(u.v).
template <class S>
Taylor2<S> apply_unary(const Taylor2<S>& u, const S& f0, const S& f1, const S& f2) {
    const int m = u.vars();
    Taylor2<S> r = Taylor2<S>::constant(f0, m);
    for (int i = 0; i < m; ++i) r.d1[i] = f1 * u.d1[i];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            r.hess(i, j) = f1 * u.hess(i, j) + f2 * u.d1[i] * u.d1[j];
    return r;
}

template <class S>
Taylor2<S> reciprocal(const Taylor2<S>& u) {
    if (scalar_value(u.v) == 0.0) throw EvalDomainError("division by zero");
    const S one = from_constant(1.0, u.v);
    const S inv = one / u.v;
    const S inv2 = inv * inv;
    return apply_unary(u, inv, -inv2, from_constant(2.0, u.v) * inv2 * inv);
}

template <class S>
Taylor2<S> operator/(const Taylor2<S>& u, const Taylor2<S>& w) {
    return u * reciprocal(w);
}

using std::cosh;
using std::exp;
using std::log;
using std::pow;
using std::sinh;
using std::sqrt;
using std::tanh;

inline double sech(double x) { return 1.0 / std::cosh(x); }

template <class S>
Taylor2<S> exp(const Taylor2<S>& u) {
    const S e = exp(u.v);
    return apply_unary(u, e, e, e);
}

template <class S>
Taylor2<S> log(const Taylor2<S>& u) {
    if (scalar_value(u.v) <= 0.0) throw EvalDomainError("ln of a non-positive value");
    const S inv = from_constant(1.0, u.v) / u.v;
    return apply_unary(u, log(u.v), inv, -(inv * inv));
}

template <class S>
Taylor2<S> sinh(const Taylor2<S>& u) {
    const S s = sinh(u.v);
    const S c = cosh(u.v);
    return apply_unary(u, s, c, s);
}

template <class S>
Taylor2<S> cosh(const Taylor2<S>& u) {
    const S s = sinh(u.v);
    const S c = cosh(u.v);
    return apply_unary(u, c, s, c);
}

template <class S>
Taylor2<S> tanh(const Taylor2<S>& u) {
    const S t = tanh(u.v);
    const S sc = from_constant(1.0, u.v) - t * t; // sech^2
    return apply_unary(u, t, sc, from_constant(-2.0, u.v) * sc * t);
}

template <class S>
S sech(const S& x) {
    return from_constant(1.0, x) / cosh(x);
}

template <class S>
Taylor2<S> sech(const Taylor2<S>& u) {
    const S s = sech(u.v);
    const S t = tanh(u.v);
    // (sech)' = -sech*tanh, (sech)'' = sech*tanh^2 - sech^3
    return apply_unary(u, s, -(s * t), s * (t * t) - s * (s * s));
}

template <class S>
Taylor2<S> sqrt(const Taylor2<S>& u) {
    if (scalar_value(u.v) <= 0.0) throw EvalDomainError("sqrt of a non-positive value");
    const S r = sqrt(u.v);
    const S half_inv = from_constant(0.5, u.v) / r;
    const S quarter = from_constant(-0.25, u.v) / (r * u.v);
    return apply_unary(u, r, half_inv, quarter);
}

inline bool is_integral(double p) { return p == std::floor(p) && std::abs(p) < 1e15; }

/// u^p for a constant exponent. Negative bases are allowed only for integral p.
inline double pow_const(double v, double p) {
    if (v < 0.0 && !is_integral(p)) throw EvalDomainError("non-integer power of a negative value");
    if (v == 0.0 && p < 0.0) throw EvalDomainError("negative power of zero");
    return std::pow(v, p);
}

template <class S>
Taylor2<S> pow_const(const Taylor2<S>& u, double p) {
    if (p == 0.0) return from_constant(1.0, u);
    if (p == 1.0) return u;
    const S f0 = pow_const(u.v, p);
    const S f1 = from_constant(p, u.v) * pow_const(u.v, p - 1.0);
    const S f2 = from_constant(p * (p - 1.0), u.v) * pow_const(u.v, p - 2.0);
    return apply_unary(u, f0, f1, f2);
}

} // namespace tlab
