#pragma once

#include <map>
#include <string>
#include <vector>

#include "nodal/families.hpp"
#include "nodal/polynomial.hpp"

namespace nodal {

/// A multisingularity: a multiset of local singularity types (A1..A5, D4,
/// D5 are the tabulated ones). aut is the product of factorials of the
/// repetition counts and converts ordered configuration counts to
/// unordered ones.
class MultisingularitySpec {
  public:
    explicit MultisingularitySpec(std::map<std::string, int> counts);

    /// Parses "A1^3", "A1*A2", "D4+2A1" (both separators accepted, counts
    /// as prefix or caret suffix).
    static MultisingularitySpec parse(const std::string& text);

    const std::map<std::string, int>& counts() const { return counts_; }
    int total_points() const;
    /// Sum of the codimensions of the members (A_k and D_k count k).
    int codimension() const;
    Rational aut() const;

    /// Canonical order-insensitive key, e.g. "A1^2*A2".
    std::string key() const;

    /// The flat list of members, repetitions expanded.
    std::vector<std::string> members() const;

  private:
    std::map<std::string, int> counts_;
};

namespace kazarian {

/// Ring (v, alpha1..alpha4) housing the residual classes.
RingPtr residual_ring();

/// The alpha classes of the Legendrian map attached to a family of surfaces,
/// as full (untruncated) series coefficients in (v, w1, w2):
/// alpha = c(O(D) (x) Omega^1) c(T)^{-1} with numerator
/// (1+v)^2 + (1+v) w1 + w2 and denominator 1 - w1 + w2.
std::vector<SparsePolynomial> alpha_classes(int max_index = 4);

/// Deletes every monomial that is the pull-back of a class of degree > 2 on
/// a surface (w1-exponent plus twice w2-exponent exceeding 2).
SparsePolynomial fixed_surface_reduce(const SparsePolynomial& p);

/// The universal residual polynomial R_S in (v, alpha1..alpha4) for the 21
/// tabulated multisingularities of critical-locus codimension at most 4.
/// Unknown keys are rejected as beyond the tabulated codimension.
SparsePolynomial residual_class(const MultisingularitySpec& spec);
std::vector<std::string> residual_table_keys();

/// The linear form a_S: substitute the alpha classes into R_S, multiply by
/// the critical-locus class x2, and push down monomial-wise to the surface.
LinearForm a_linear_form(const MultisingularitySpec& spec);

/// N_S as a polynomial in (d, k, s, x): (1/aut) times the sum over set
/// partitions of the members of products of a_{S_J}.
SparsePolynomial multisingularity_polynomial(const MultisingularitySpec& spec);
Rational multisingularity_count(const MultisingularitySpec& spec, const SurfaceInvariants& surface);

/// Number of tangent hyperplanes with prescribed contact (n = 2: lines and
/// a plane curve; n = 3: planes and a surface), as a polynomial in the
/// hypersurface degree d. Requires codim(spec) = n.
SparsePolynomial contact_polynomial(int n, const MultisingularitySpec& spec);
Rational contact_count(int n, long d, const MultisingularitySpec& spec);

}  // namespace kazarian
}  // namespace nodal
