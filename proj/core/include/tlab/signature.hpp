#pragma once

// The ambient pseudo-Euclidean space R^{m+n}_n: the first m coordinates carry
// a plus sign, the last n a minus sign.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "tlab/errors.hpp"
#include "tlab/small_linalg.hpp"

namespace tlab {

inline constexpr double default_spacelike_tol = 1e-9;
inline constexpr double default_lightlike_tol = 1e-9;

struct SpaceSignature {
    int m = 0; // graph (spatial) dimension
    int n = 0; // codimension / index

    SpaceSignature() = default;
    SpaceSignature(int m_, int n_) : m(m_), n(n_) {
        if (m < 1 || n < 1) throw InvalidInputError("signature requires m >= 1 and n >= 1");
    }

    int dim() const { return m + n; }

    bool operator==(const SpaceSignature&) const = default;
};

enum class CausalClass { spacelike, lightlike, timelike };

inline const char* to_string(CausalClass c) {
    switch (c) {
        case CausalClass::spacelike: return "spacelike";
        case CausalClass::lightlike: return "lightlike";
        case CausalClass::timelike: return "timelike";
    }
    return "?";
}

/// <v,w> = sum_{i<=m} v_i w_i - sum_{A>m} v_A w_A.
template <class S>
S inner(const std::vector<S>& v, const std::vector<S>& w, const SpaceSignature& sig) {
    if (static_cast<int>(v.size()) != sig.dim() || static_cast<int>(w.size()) != sig.dim())
        throw InvalidInputError("inner(): vector length must equal m+n");
    S acc = from_constant(0.0, v[0]);
    for (int i = 0; i < sig.m; ++i) acc = acc + v[i] * w[i];
    for (int a = sig.m; a < sig.dim(); ++a) acc = acc - v[a] * w[a];
    return acc;
}

/// Sign trichotomy of <v,v> with a tolerance band around zero.
inline CausalClass causal_class(const std::vector<double>& v, const SpaceSignature& sig,
                                double lightlike_tol = default_lightlike_tol) {
    bool all_zero = true;
    for (double x : v)
        if (x != 0.0) { all_zero = false; break; }
    if (all_zero) throw InvalidInputError("causal_class(): zero vector has no causal class");
    const double c = inner(v, v, sig);
    if (std::abs(c) <= lightlike_tol) return CausalClass::lightlike;
    return c > 0.0 ? CausalClass::spacelike : CausalClass::timelike;
}

} // namespace tlab
