#pragma once

#include <vector>

#include "nodal/bell.hpp"
#include "nodal/polynomial.hpp"

namespace nodal {
namespace bclasses {

/// The universal class ring: (v, w1, w2) with weights (1, 1, 2), untruncated.
RingPtr vw_ring();

/// Top Chern class of the i-th principal-parts bundle, computed from first
/// principles: the filtration with graded pieces O(D) (x) Sym^j(Omega) makes
/// the top Chern class the product over j = 0..i-1, a+b = j of
/// (v + a t1 + b t2) in the Chern roots t1, t2 of the relative cotangent
/// sheaf; the expansion is then rewritten in w1 = t1 + t2, w2 = t1 t2.
/// Supported for 1 <= i <= 5. This computation is the authority for the
/// x-classes: the two printed renditions of [X4] disagree in one
/// coefficient, and this expansion settles it.
SparsePolynomial principal_parts_top_chern(int i);

/// Canonical x-class (cached oracle output). x_class(2) = v^3 + w1 v^2 + w2 v.
const SparsePolynomial& x_class(int i);

/// The blow-up reduction operator: substitute (v - i e, w1 + e, w2 - e^2)
/// into R, reduce modulo e^3 + w1 e^2 + w2 e, and return the opposite of the
/// remainder's e^2 coefficient. Requires i >= 2.
SparsePolynomial q_operator(const SparsePolynomial& R, int i);

/// The universal classes b_1..b_delta in (v, w1, w2), 1 <= delta <= 8:
/// b_{s+1} = P_s(Q_{b_1,2}, ..., Q_{b_s,2}) x2
///           - s(s-1)(s-2) P_{s-3}(Q_{b_1,3}, ..., Q_{b_{s-3},3}) x3
///           + 3281 * 7! * P_{s-7} x4,
/// with P of negative order zero. No monomial is dropped here; push-forwards
/// decide later what vanishes for a given family.
std::vector<SparsePolynomial> b_classes(int delta);

/// (1/delta!) P_delta(pushed b_1, ..., pushed b_delta) for any linear
/// push-forward functional into a commutative ring T.
template <typename PushForward,
          typename T = std::invoke_result_t<PushForward, const SparsePolynomial&>>
T node_class(int delta, PushForward&& push, const T& one) {
    if (delta < 0 || delta > 8)
        throw std::invalid_argument("node_class: delta must be in 0..8");
    std::vector<T> pushed;
    auto bs = b_classes(delta == 0 ? 1 : delta);
    for (int i = 0; i < delta; ++i) pushed.push_back(push(bs[i]));
    T p = bell::bell_eval(delta, pushed, one);
    return p * (Rational(1) / Rational::factorial(delta));
}

}  // namespace bclasses
}  // namespace nodal
