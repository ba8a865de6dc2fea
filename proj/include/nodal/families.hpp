#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nodal/bclasses.hpp"
#include "nodal/polynomial.hpp"

namespace nodal {

/// A linear form in the four Chern numbers (d, k, s, x) of a polarized
/// surface: d = L^2, k = L.K, s = K^2, x = c2. The a_i coefficients and
/// everything built from them by push-forward live here.
struct LinearForm {
    Rational d, k, s, x;

    LinearForm() = default;
    LinearForm(Rational d_, Rational k_, Rational s_, Rational x_)
        : d(std::move(d_)), k(std::move(k_)), s(std::move(s_)), x(std::move(x_)) {}

    bool is_zero() const { return d.is_zero() && k.is_zero() && s.is_zero() && x.is_zero(); }

    LinearForm& operator+=(const LinearForm& o) {
        d += o.d; k += o.k; s += o.s; x += o.x;
        return *this;
    }
    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator*(const LinearForm& a, const Rational& c) {
        return {a.d * c, a.k * c, a.s * c, a.x * c};
    }
    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        return a.d == b.d && a.k == b.k && a.s == b.s && a.x == b.x;
    }

    SparsePolynomial to_polynomial() const;
    std::string str() const;
};

/// Chern numbers of a concrete polarized surface.
struct SurfaceInvariants {
    long d = 0, k = 0, s = 0, x = 0;

    /// P^2 with L = O(m): (m^2, -3m, 9, 3).
    static SurfaceInvariants p2(long m) { return {m * m, -3 * m, 9, 3}; }
};

namespace families {

/// Ring of the four Chern numbers, each of weight 1.
RingPtr dksx_ring();

/// Fiber integration for the universal divisor of a linear system on a fixed
/// surface: the push-forward of v^alpha w1^beta1 w2^beta2 at delta nodes.
/// Zero whenever the exponents cannot arise from a weighted-homogeneous
/// class of degree delta + 2.
LinearForm fixed_surface_pushforward(int alpha, int beta1, int beta2, int delta);

/// Monomial-wise push-forward of a class in (v, w1, w2) at the given delta.
LinearForm push_to_surface(const SparsePolynomial& cls, int delta);

/// a_1..a_delta: the push-forwards of the universal b-classes, 1 <= delta <= 8.
std::vector<LinearForm> a_coefficients(int delta);

/// The node polynomial N_delta = (1/delta!) P_delta(a_1, ..., a_delta) as an
/// exact polynomial in (d, k, s, x); 0 <= delta <= 8.
SparsePolynomial node_polynomial(int delta);

/// N_delta evaluated at a concrete surface. The result is asserted integral,
/// which any actual polarized surface must produce.
Rational count_on_surface(const SurfaceInvariants& surface, int delta);

// -- Plane curves on a general degree-m threefold in P^4 ------------------

/// Ring (m, q1, q2) of the symbolic degree and the two tautological Chern
/// classes of the Grassmannian Gr(3,5).
RingPtr p4_base_ring();

/// Class of the delta-nodal locus in Gr(3,5), as a polynomial in m, q1, q2;
/// 1 <= delta <= 6 (the Grassmannian is six-dimensional).
SparsePolynomial p4_node_class(int delta);

/// Degree of a (q1, q2)-homogeneous class of total degree 6 via the
/// intersection numbers q1^6 = 5, q1^4 q2 = 3, q1^2 q2^2 = 2, q2^3 = 1.
/// Returns a polynomial in m alone.
SparsePolynomial p4_degree(const SparsePolynomial& cls);

/// Number of 6-nodal plane curves of degree m on a general threefold, as a
/// degree-18 polynomial in m.
SparsePolynomial p4_sixnodal_polynomial();

/// The same count at a concrete degree (5600 at m = 4).
Rational p4_sixnodal_count(long m);

/// Number of 3-nodal plane sections whose span meets three general lines:
/// the delta = 3 class paired with q1^3, as a polynomial in m.
SparsePolynomial p4_threenodal_q1cubed();

/// Number of 2-nodal quartics residual to a fixed line on a general quintic
/// threefold (the family of planes through the line).
Rational planes_through_line_count();

/// Irreducible 6-nodal plane quintics on a general quintic threefold:
/// total 6-nodal count minus the conic+cubic and line+quartic contributions
/// (609 250 smooth conics, 2875 lines).
Rational quintic_irreducible_count();

// -- Validity advisories ---------------------------------------------------

/// Advisory verdicts on printed sufficient conditions for enumerative
/// validity. Never blocks a computation.
struct ValidityReport {
    bool valid = false;
    std::string setting;
    std::vector<std::string> notes;
};

/// L = mA + B with m >= 3 delta (general surface).
ValidityReport validity_generic(long m, int delta);
/// Plane curves of degree d with delta nodes: d >= delta/2 + 1.
ValidityReport validity_plane(long d, int delta);
/// K3 with Picard number 1: k-very-ampleness bullets; L1sq is the square of
/// the positive generator. Prints both readings of the ambiguous "L^2".
ValidityReport validity_k3_rho1(long L1sq, long m, long k);
/// Abelian surface with Picard number 1, same shape.
ValidityReport validity_abelian_rho1(long L1sq, long m, long k);

}  // namespace families
}  // namespace nodal
