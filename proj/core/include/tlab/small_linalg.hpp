#pragma once

// Dense m-by-m helpers for the pointwise tensor kernel, templated on the
// scalar so the same code runs on doubles and on Taylor-jet scalars.

#include <cmath>
#include <cstddef>
#include <vector>

#include "tlab/errors.hpp"

namespace tlab {

inline double scalar_value(double x) { return x; }

// from_constant(c, like): an S with value c and the same jet shape as `like`.
inline double from_constant(double c, double /*like*/) { return c; }

template <class S>
struct SquareMat {
    int n = 0;
    std::vector<S> a; // row-major, n*n

    SquareMat() = default;
    explicit SquareMat(int size, const S& fill = S{}) : n(size), a(static_cast<size_t>(size) * size, fill) {}

    S& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const S& operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

/// Plain values of a scalar matrix (pivoting, eigenvalue checks).
template <class S>
std::vector<double> value_matrix(const SquareMat<S>& m) {
    std::vector<double> out(m.a.size());
    for (size_t i = 0; i < m.a.size(); ++i) out[i] = scalar_value(m.a[i]);
    return out;
}

/// Smallest eigenvalue of a symmetric matrix given as row-major values.
double sym_min_eigenvalue(const std::vector<double>& values, int n);

/// Gauss-Jordan inverse with partial pivoting on scalar values; also returns
/// the determinant. Throws InvalidInputError on a (numerically) singular input.
template <class S>
SquareMat<S> invert(const SquareMat<S>& m, S* det_out = nullptr) {
    const int n = m.n;
    SquareMat<S> a = m;
    SquareMat<S> inv(n);
    for (int i = 0; i < n; ++i) inv(i, i) = from_constant(1.0, m(0, 0));
    S det = from_constant(1.0, m(0, 0));

    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(scalar_value(a(col, col)));
        for (int r = col + 1; r < n; ++r) {
            const double cand = std::abs(scalar_value(a(r, col)));
            if (cand > best) {
                best = cand;
                pivot = r;
            }
        }
        if (best == 0.0) throw InvalidInputError("singular matrix in invert()");
        if (pivot != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(a(pivot, c), a(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
            det = -det;
        }
        const S diag = a(col, col);
        det = det * diag;
        for (int c = 0; c < n; ++c) {
            a(col, c) = a(col, c) / diag;
            inv(col, c) = inv(col, c) / diag;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const S f = a(r, col);
            for (int c = 0; c < n; ++c) {
                a(r, c) = a(r, c) - f * a(col, c);
                inv(r, c) = inv(r, c) - f * inv(col, c);
            }
        }
    }
    if (det_out) *det_out = det;
    return inv;
}

} // namespace tlab
