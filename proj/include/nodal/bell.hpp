#pragma once

#include <vector>

#include "nodal/polynomial.hpp"

namespace nodal {
namespace bell {

/// Ring Z[X1..Xr] with X_i of weight i, so that P_r and B_{r,k} come out
/// weighted-homogeneous of degree r. r = 0 gives the constant ring.
RingPtr bell_ring(int r);

/// Complete exponential Bell polynomial P_r. P_0 = 1, P_1 = X1,
/// P_2 = X1^2 + X2, and P_r = 0 for negative r. Computed by the recursion
/// P_{r+1} = sum_s C(r,s) X_{r-s+1} P_s and cached up to r = 10.
SparsePolynomial complete_bell(int r);

/// Partial Bell polynomial B_{r,k} (0 <= k <= r), from the multinomial sum
/// over block profiles: it involves only X1..X_{r-k+1} and its coefficients
/// count set partitions of an r-set into k blocks of the given profile.
SparsePolynomial partial_bell(int r, int k);

/// P_r evaluated on the first r entries of values. T needs ring arithmetic
/// (T+T, T*T) plus scaling by Rational; `one` seeds the products so the
/// same code serves Rational, LinearForm-backed polynomials and Chow-class
/// polynomials alike.
template <typename T>
T bell_eval(int r, const std::vector<T>& values, const T& one) {
    if (r < 0) return one * Rational(0);
    if (static_cast<int>(values.size()) < r)
        throw std::invalid_argument("bell_eval: need at least r values");
    SparsePolynomial pr = complete_bell(r);
    T acc = one * Rational(0);
    for (const auto& [e, c] : pr.terms()) {
        T t = one * c;
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t = t * values[i];
        acc = acc + t;
    }
    return acc;
}

}  // namespace bell
}  // namespace nodal
