#pragma once

// Second-order data of the n graph functions at one base point: u, Du, D2u.

#include <cstddef>
#include <vector>

#include "tlab/errors.hpp"
#include "tlab/signature.hpp"

namespace tlab {

template <class S>
struct PointJet {
    SpaceSignature sig;
    std::vector<S> base;  // m
    std::vector<S> value; // n
    std::vector<S> grad;  // n*m, [alpha*m + i]
    std::vector<S> hess;  // n*m*m, [(alpha*m + i)*m + j], symmetric in (i,j)

    PointJet() = default;
    explicit PointJet(const SpaceSignature& s)
        : sig(s),
          base(s.m),
          value(s.n),
          grad(static_cast<size_t>(s.n) * s.m),
          hess(static_cast<size_t>(s.n) * s.m * s.m) {}

    const S& u(int alpha) const { return value[alpha]; }
    S& du(int alpha, int i) { return grad[static_cast<size_t>(alpha) * sig.m + i]; }
    const S& du(int alpha, int i) const { return grad[static_cast<size_t>(alpha) * sig.m + i]; }
    S& d2u(int alpha, int i, int j) {
        return hess[(static_cast<size_t>(alpha) * sig.m + i) * sig.m + j];
    }
    const S& d2u(int alpha, int i, int j) const {
        return hess[(static_cast<size_t>(alpha) * sig.m + i) * sig.m + j];
    }

    void check_sizes() const {
        if (static_cast<int>(base.size()) != sig.m || static_cast<int>(value.size()) != sig.n ||
            grad.size() != static_cast<size_t>(sig.n) * sig.m ||
            hess.size() != static_cast<size_t>(sig.n) * sig.m * sig.m)
            throw InvalidInputError("PointJet: inconsistent sizes");
    }
};

using Jet2 = PointJet<double>;

} // namespace tlab
