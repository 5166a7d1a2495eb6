#pragma once

// Pointwise tensor kernel for spacelike graphs in R^{m+n}_n.
//
// Everything here is a pure function of a second-order point jet of the graph
// functions. The kernel is templated on the scalar so that the same formulas
// evaluate on plain doubles (finite-difference jets, solver states) and on
// Taylor2 scalars (exact derivatives of derived fields for the diagnostics).
//
// Conventions:
//   - tangent frame  e_i = E_i + u^a_i E_{m+a}, induced metric
//     g_ij = delta_ij - sum_a u^a_i u^a_j (positive definite iff spacelike);
//   - the second fundamental form is kept ambient-vector valued,
//     B_ij = d_i d_j X - Gamma^k_ij e_k, so no component sign convention
//     leaks into downstream formulas;
//   - H = g^{ij} B_ij, |H|^2 = -<H,H>, |B|^2 = -g^{ik}g^{jl}<B_ij,B_kl>
//     (non-negative: the normal bundle is negative definite);
//   - frame components h^a_ij = <B_ij, n_a> are taken against a
//     Gram-Schmidt orthonormalization (under the ambient product) of the
//     graph unit normals, which are unit but not mutually orthogonal.

#include <cmath>
#include <string>
#include <vector>

#include "tlab/errors.hpp"
#include "tlab/jet2.hpp"
#include "tlab/signature.hpp"
#include "tlab/small_linalg.hpp"
#include "tlab/taylor2.hpp"

namespace tlab {

struct GeoOptions {
    double spacelike_tol = default_spacelike_tol;
};

/// The constant translating vector, split into graph-coordinate components
/// a^i (first m) and fiber components b^a (last n).
struct TranslatorSpec {
    std::vector<double> a; // m
    std::vector<double> b; // n

    TranslatorSpec() = default;
    TranslatorSpec(std::vector<double> a_, std::vector<double> b_)
        : a(std::move(a_)), b(std::move(b_)) {
        bool all_zero = true;
        for (double x : a)
            if (x != 0.0) all_zero = false;
        for (double x : b)
            if (x != 0.0) all_zero = false;
        if (all_zero) throw InvalidInputError("translating vector must be non-zero");
    }

    double c0() const {
        double s = 0.0;
        for (double x : a) s += x * x;
        for (double x : b) s -= x * x;
        return s;
    }

    CausalClass causal(double lightlike_tol = default_lightlike_tol) const {
        const double c = c0();
        if (std::abs(c) <= lightlike_tol) return CausalClass::lightlike;
        return c > 0.0 ? CausalClass::spacelike : CausalClass::timelike;
    }

    std::vector<double> ambient() const {
        std::vector<double> v;
        v.reserve(a.size() + b.size());
        v.insert(v.end(), a.begin(), a.end());
        v.insert(v.end(), b.begin(), b.end());
        return v;
    }
};

template <class S>
struct MetricDataT {
    SquareMat<S> g;
    SquareMat<S> g_inv;
    S det_g{};
    std::vector<S> christoffel; // m*m*m, [k][i][j]
    double lambda_min = 0.0;

    const S& gamma(int k, int i, int j) const {
        const int m = g.n;
        return christoffel[(static_cast<size_t>(k) * m + i) * m + j];
    }
    S& gamma(int k, int i, int j) {
        const int m = g.n;
        return christoffel[(static_cast<size_t>(k) * m + i) * m + j];
    }
};
using MetricData = MetricDataT<double>;

template <class S>
struct ExtrinsicDataT {
    std::vector<std::vector<S>> b;            // m*m ambient vectors, [i*m+j]
    std::vector<S> h;                         // ambient mean curvature vector
    S h_norm2{};                              // -<H,H> >= 0
    S b_norm2{};                              // -g^{ik}g^{jl}<B_ij,B_kl> >= 0
    std::vector<S> h_frame;                   // n, <H, n_a> against the orthonormal frame
    std::vector<std::vector<S>> normal_frame; // n ambient vectors, <n_a,n_b> = -delta_ab

    const std::vector<S>& b_at(int i, int j, int m) const { return b[static_cast<size_t>(i) * m + j]; }
};
using ExtrinsicData = ExtrinsicDataT<double>;

template <class S>
struct CurvatureDataT {
    int m = 0;
    std::vector<S> riemann; // m^4, [i][j][k][l]
    SquareMat<S> ricci;

    const S& r(int i, int j, int k, int l) const {
        return riemann[((static_cast<size_t>(i) * m + j) * m + k) * m + l];
    }
    S& r(int i, int j, int k, int l) {
        return riemann[((static_cast<size_t>(i) * m + j) * m + k) * m + l];
    }
};
using CurvatureData = CurvatureDataT<double>;

template <class S>
struct PseudoDistanceT {
    S z{};
    std::vector<S> grad;  // m, coordinate partials 2<X,e_i>
    SquareMat<S> hess;    // 2(g_ij + <X,B_ij>)
    S laplacian{};        // 2m + 2<X,H>
};
using PseudoDistance = PseudoDistanceT<double>;

template <class S>
struct TangentNormalSplitT {
    std::vector<S> tangential; // ambient
    std::vector<S> normal;     // ambient
    std::vector<S> coeffs;     // m, components V^i against the tangent frame
};
using TangentNormalSplit = TangentNormalSplitT<double>;

double sym_min_eigenvalue(const std::vector<double>& values, int n);

namespace detail {

template <class S>
std::vector<double> value_location(const PointJet<S>& jet) {
    std::vector<double> loc(jet.base.size());
    for (size_t i = 0; i < loc.size(); ++i) loc[i] = scalar_value(jet.base[i]);
    return loc;
}

} // namespace detail

/// e_i = E_i + sum_a u^a_i E_{m+a}.
template <class S>
std::vector<std::vector<S>> tangent_frame(const PointJet<S>& jet) {
    jet.check_sizes();
    const int m = jet.sig.m, n = jet.sig.n;
    const S zero = from_constant(0.0, jet.value[0]);
    const S one = from_constant(1.0, jet.value[0]);
    std::vector<std::vector<S>> frame(m, std::vector<S>(m + n, zero));
    for (int i = 0; i < m; ++i) {
        frame[i][i] = one;
        for (int a = 0; a < n; ++a) frame[i][m + a] = jet.du(a, i);
    }
    return frame;
}

/// Induced metric, inverse, determinant and Christoffel symbols
/// Gamma^k_ij = -g^{kl} u^a_ij u^a_l. Throws NotSpacelikeError when the
/// smallest eigenvalue of g drops to the tolerance.
template <class S>
MetricDataT<S> induced_metric(const PointJet<S>& jet, const GeoOptions& opts = {}) {
    jet.check_sizes();
    const int m = jet.sig.m, n = jet.sig.n;
    const S zero = from_constant(0.0, jet.value[0]);
    MetricDataT<S> md;
    md.g = SquareMat<S>(m, zero);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            S acc = from_constant(i == j ? 1.0 : 0.0, zero);
            for (int a = 0; a < n; ++a) acc = acc - jet.du(a, i) * jet.du(a, j);
            md.g(i, j) = acc;
        }

    md.lambda_min = sym_min_eigenvalue(value_matrix(md.g), m);
    if (!(md.lambda_min > opts.spacelike_tol))
        throw NotSpacelikeError(md.lambda_min, detail::value_location(jet),
                                "induced metric is not positive definite (lambda_min = " +
                                    std::to_string(md.lambda_min) + ")");

    md.g_inv = invert(md.g, &md.det_g);

    md.christoffel.assign(static_cast<size_t>(m) * m * m, zero);
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) {
                S acc = zero;
                for (int a = 0; a < n; ++a)
                    for (int l = 0; l < m; ++l)
                        acc = acc - md.g_inv(k, l) * jet.d2u(a, i, j) * jet.du(a, l);
                md.gamma(k, i, j) = acc;
                md.gamma(k, j, i) = acc;
            }
    return md;
}

/// The n graph unit normals (sum_i u^a_i E_i + E_{m+a}) / sqrt(1-|Du^a|^2):
/// unit and orthogonal to the tangent space, but not mutually orthogonal.
template <class S>
std::vector<std::vector<S>> graph_unit_normals(const PointJet<S>& jet) {
    const int m = jet.sig.m, n = jet.sig.n;
    const S zero = from_constant(0.0, jet.value[0]);
    const S one = from_constant(1.0, jet.value[0]);
    std::vector<std::vector<S>> normals(n, std::vector<S>(m + n, zero));
    for (int a = 0; a < n; ++a) {
        S du2 = zero;
        for (int i = 0; i < m; ++i) du2 = du2 + jet.du(a, i) * jet.du(a, i);
        if (!(scalar_value(du2) < 1.0))
            throw NotSpacelikeError(1.0 - scalar_value(du2), detail::value_location(jet),
                                    "|Du| >= 1: graph unit normal undefined");
        const S scale = one / sqrt(one - du2);
        for (int i = 0; i < m; ++i) normals[a][i] = jet.du(a, i) * scale;
        normals[a][m + a] = scale;
    }
    return normals;
}

/// Gram-Schmidt orthonormalization of the graph normals under the ambient
/// product; the normal bundle of a spacelike graph is negative definite, so
/// the output satisfies <n_a, n_b> = -delta_ab.
template <class S>
std::vector<std::vector<S>> normal_frame(const PointJet<S>& jet) {
    const int n = jet.sig.n;
    auto frame = graph_unit_normals(jet);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < a; ++b) {
            const S proj = inner(frame[a], frame[b], jet.sig);
            for (size_t c = 0; c < frame[a].size(); ++c)
                frame[a][c] = frame[a][c] + proj * frame[b][c];
        }
        const S norm2 = -inner(frame[a], frame[a], jet.sig);
        if (!(scalar_value(norm2) > 0.0))
            throw NotSpacelikeError(scalar_value(norm2), detail::value_location(jet),
                                    "degenerate normal frame");
        const S scale = from_constant(1.0, norm2) / sqrt(norm2);
        for (auto& c : frame[a]) c = c * scale;
    }
    return frame;
}

/// Ambient-valued second fundamental form, mean curvature vector and the
/// norm squares |B|^2 and |H|^2.
template <class S>
ExtrinsicDataT<S> second_fundamental_form(const PointJet<S>& jet, const MetricDataT<S>& md) {
    const int m = jet.sig.m, n = jet.sig.n;
    const S zero = from_constant(0.0, jet.value[0]);
    ExtrinsicDataT<S> ex;

    const auto frame = tangent_frame(jet);
    // B_ij = d_i d_j X - Gamma^k_ij e_k  (normal by the Gauss formula).
    ex.b.assign(static_cast<size_t>(m) * m, std::vector<S>(m + n, zero));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            auto& bij = ex.b[static_cast<size_t>(i) * m + j];
            for (int a = 0; a < n; ++a) bij[m + a] = jet.d2u(a, i, j);
            for (int k = 0; k < m; ++k) {
                const S gkij = md.gamma(k, i, j);
                for (int c = 0; c < m + n; ++c) bij[c] = bij[c] - gkij * frame[k][c];
            }
        }

    ex.h.assign(m + n, zero);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const auto& bij = ex.b[static_cast<size_t>(i) * m + j];
            for (int c = 0; c < m + n; ++c) ex.h[c] = ex.h[c] + md.g_inv(i, j) * bij[c];
        }

    ex.h_norm2 = -inner(ex.h, ex.h, jet.sig);

    S bn = zero;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l) {
                    const S ip = inner(ex.b[static_cast<size_t>(i) * m + j],
                                       ex.b[static_cast<size_t>(k) * m + l], jet.sig);
                    bn = bn - md.g_inv(i, k) * md.g_inv(j, l) * ip;
                }
    ex.b_norm2 = bn;

    ex.normal_frame = normal_frame(jet);
    ex.h_frame.assign(n, zero);
    for (int a = 0; a < n; ++a) ex.h_frame[a] = inner(ex.h, ex.normal_frame[a], jet.sig);
    return ex;
}

template <class S>
ExtrinsicDataT<S> second_fundamental_form(const PointJet<S>& jet, const GeoOptions& opts = {}) {
    return second_fundamental_form(jet, induced_metric(jet, opts));
}

/// r^a = g^{ij} u^a_ij + a^i u^a_i - b^a; identically zero iff the graph is a
/// translator with vector (a, b) at this point.
template <class S>
std::vector<S> translator_residual(const PointJet<S>& jet, const TranslatorSpec& t,
                                   const MetricDataT<S>& md) {
    const int m = jet.sig.m, n = jet.sig.n;
    if (static_cast<int>(t.a.size()) != m || static_cast<int>(t.b.size()) != n)
        throw InvalidInputError("translator components do not match the signature");
    const S zero = from_constant(0.0, jet.value[0]);
    std::vector<S> r(n, zero);
    for (int a = 0; a < n; ++a) {
        S acc = zero;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) acc = acc + md.g_inv(i, j) * jet.d2u(a, i, j);
        for (int i = 0; i < m; ++i) acc = acc + from_constant(t.a[i], zero) * jet.du(a, i);
        r[a] = acc - from_constant(t.b[a], zero);
    }
    return r;
}

template <class S>
std::vector<S> translator_residual(const PointJet<S>& jet, const TranslatorSpec& t,
                                   const GeoOptions& opts = {}) {
    return translator_residual(jet, t, induced_metric(jet, opts));
}

/// Riemann tensor R_ijkl = -sum_a (h^a_ik h^a_jl - h^a_il h^a_jk) and the
/// Ricci contraction, from frame components against the supplied orthonormal
/// normal frame. The result is frame independent.
template <class S>
CurvatureDataT<S> curvature_from_frame(const PointJet<S>& jet, const MetricDataT<S>& md,
                                       const ExtrinsicDataT<S>& ex,
                                       const std::vector<std::vector<S>>& frame) {
    const int m = jet.sig.m, n = jet.sig.n;
    const S zero = from_constant(0.0, jet.value[0]);

    // h^a_ij = <B_ij, n_a>
    std::vector<S> hcomp(static_cast<size_t>(n) * m * m, zero);
    auto h = [&](int a, int i, int j) -> S& {
        return hcomp[(static_cast<size_t>(a) * m + i) * m + j];
    };
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                h(a, i, j) = inner(ex.b_at(i, j, m), frame[a], jet.sig);

    CurvatureDataT<S> cv;
    cv.m = m;
    cv.riemann.assign(static_cast<size_t>(m) * m * m * m, zero);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l) {
                    S acc = zero;
                    for (int a = 0; a < n; ++a)
                        acc = acc - (h(a, i, k) * h(a, j, l) - h(a, i, l) * h(a, j, k));
                    cv.r(i, j, k, l) = acc;
                }

    // R_ij = -sum_a (g^{kl} h^a_kl h^a_ij - g^{kl} h^a_ki h^a_lj)
    cv.ricci = SquareMat<S>(m, zero);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            S acc = zero;
            for (int a = 0; a < n; ++a)
                for (int k = 0; k < m; ++k)
                    for (int l = 0; l < m; ++l)
                        acc = acc - md.g_inv(k, l) * (h(a, k, l) * h(a, i, j) - h(a, k, i) * h(a, l, j));
            cv.ricci(i, j) = acc;
        }
    return cv;
}

template <class S>
CurvatureDataT<S> curvature(const PointJet<S>& jet, const MetricDataT<S>& md,
                            const ExtrinsicDataT<S>& ex) {
    return curvature_from_frame(jet, md, ex, ex.normal_frame);
}

template <class S>
CurvatureDataT<S> curvature(const PointJet<S>& jet, const GeoOptions& opts = {}) {
    const auto md = induced_metric(jet, opts);
    return curvature(jet, md, second_fundamental_form(jet, md));
}

/// Pseudo-distance z = <X,X> of the ambient position X = (x, u(x)) and its
/// first two covariant derivatives: z_,i = 2<X,e_i>,
/// Hess z_ij = 2(g_ij + <X,B_ij>), Laplacian 2m + 2<X,H>.
template <class S>
PseudoDistanceT<S> pseudo_distance(const PointJet<S>& jet, const MetricDataT<S>& md,
                                   const ExtrinsicDataT<S>& ex) {
    const int m = jet.sig.m, n = jet.sig.n;
    const S zero = from_constant(0.0, jet.value[0]);

    std::vector<S> x(m + n, zero);
    for (int i = 0; i < m; ++i) x[i] = jet.base[i];
    for (int a = 0; a < n; ++a) x[m + a] = jet.value[a];

    PseudoDistanceT<S> pd;
    pd.z = inner(x, x, jet.sig);

    const auto frame = tangent_frame(jet);
    pd.grad.assign(m, zero);
    for (int i = 0; i < m; ++i)
        pd.grad[i] = from_constant(2.0, zero) * inner(x, frame[i], jet.sig);

    pd.hess = SquareMat<S>(m, zero);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            pd.hess(i, j) = from_constant(2.0, zero) *
                            (md.g(i, j) + inner(x, ex.b_at(i, j, m), jet.sig));

    pd.laplacian = from_constant(2.0 * m, zero) +
                   from_constant(2.0, zero) * inner(x, ex.h, jet.sig);
    return pd;
}

template <class S>
PseudoDistanceT<S> pseudo_distance(const PointJet<S>& jet, const GeoOptions& opts = {}) {
    const auto md = induced_metric(jet, opts);
    return pseudo_distance(jet, md, second_fundamental_form(jet, md));
}

/// Scalar Laplace-Beltrami from a field jet: g^{ij}(f_ij - Gamma^k_ij f_k).
template <class S>
S laplace_beltrami(const std::vector<S>& f_grad, const SquareMat<S>& f_hess,
                   const MetricDataT<S>& md) {
    const int m = md.g.n;
    if (static_cast<int>(f_grad.size()) != m || f_hess.n != m)
        throw InvalidInputError("laplace_beltrami: field jet does not match the metric dimension");
    S acc = from_constant(0.0, md.g(0, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            S corrected = f_hess(i, j);
            for (int k = 0; k < m; ++k) corrected = corrected - md.gamma(k, i, j) * f_grad[k];
            acc = acc + md.g_inv(i, j) * corrected;
        }
    return acc;
}

/// Split an ambient vector into its tangential and normal parts at the point:
/// V^i = g^{ij}<v, e_j>, v = V^i e_i + v_normal.
template <class S>
TangentNormalSplitT<S> tangential_normal_split(const std::vector<S>& v, const PointJet<S>& jet,
                                               const MetricDataT<S>& md) {
    const int m = jet.sig.m, n = jet.sig.n;
    if (static_cast<int>(v.size()) != m + n)
        throw InvalidInputError("tangential_normal_split: vector length must equal m+n");
    const S zero = from_constant(0.0, jet.value[0]);
    const auto frame = tangent_frame(jet);

    TangentNormalSplitT<S> sp;
    sp.coeffs.assign(m, zero);
    for (int i = 0; i < m; ++i) {
        S acc = zero;
        for (int j = 0; j < m; ++j) acc = acc + md.g_inv(i, j) * inner(v, frame[j], jet.sig);
        sp.coeffs[i] = acc;
    }
    sp.tangential.assign(m + n, zero);
    for (int i = 0; i < m; ++i)
        for (int c = 0; c < m + n; ++c)
            sp.tangential[c] = sp.tangential[c] + sp.coeffs[i] * frame[i][c];
    sp.normal.assign(m + n, zero);
    for (int c = 0; c < m + n; ++c) sp.normal[c] = v[c] - sp.tangential[c];
    return sp;
}

template <class S>
TangentNormalSplitT<S> tangential_normal_split(const std::vector<S>& v, const PointJet<S>& jet,
                                               const GeoOptions& opts = {}) {
    return tangential_normal_split(v, jet, induced_metric(jet, opts));
}

} // namespace tlab
