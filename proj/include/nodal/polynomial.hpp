#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nodal/rational.hpp"

namespace nodal {

/// Thrown when operands of a polynomial operation live in different rings.
struct ring_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An ordered list of variables with positive integer weights, and an
/// optional cap on the weighted degree of stored monomials. Monomials whose
/// weighted degree exceeds the cap are discarded eagerly after every
/// product, which keeps family computations from accumulating classes that
/// can never be consumed.
class WeightedRing {
  public:
    WeightedRing(std::vector<std::string> vars, std::vector<int> weights,
                 std::optional<int> truncation = std::nullopt);

    static std::shared_ptr<const WeightedRing> make(
        std::vector<std::string> vars, std::vector<int> weights,
        std::optional<int> truncation = std::nullopt) {
        return std::make_shared<const WeightedRing>(std::move(vars), std::move(weights), truncation);
    }

    size_t size() const { return vars_.size(); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::vector<int>& weights() const { return weights_; }
    std::optional<int> truncation() const { return truncation_; }

    /// Index of a variable name, or -1 if absent.
    int index_of(const std::string& name) const;

    int weighted_degree(const std::vector<int>& exps) const;

    bool operator==(const WeightedRing& o) const {
        return vars_ == o.vars_ && weights_ == o.weights_ && truncation_ == o.truncation_;
    }

  private:
    std::vector<std::string> vars_;
    std::vector<int> weights_;
    std::optional<int> truncation_;
};

using RingPtr = std::shared_ptr<const WeightedRing>;

using Exponents = std::vector<int>;

/// Canonical term order: weighted degree first, then lexicographic in the
/// ring's declared variable order, both descending. Printing in iteration
/// order is therefore byte-stable.
struct TermOrder {
    const WeightedRing* ring = nullptr;
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = ring->weighted_degree(a);
        int db = ring->weighted_degree(b);
        if (da != db) return da > db;
        return b < a;  // lexicographic, descending
    }
};

/// Sparse multivariate polynomial with exact rational coefficients over a
/// WeightedRing. Canonical form always holds: no zero coefficients, no
/// duplicate monomials, nothing above the ring's truncation. Values are
/// immutable in spirit: every operation returns a fresh polynomial.
class SparsePolynomial {
  public:
    using TermMap = std::map<Exponents, Rational, TermOrder>;

    explicit SparsePolynomial(RingPtr ring);

    static SparsePolynomial zero(RingPtr ring) { return SparsePolynomial(std::move(ring)); }
    static SparsePolynomial constant(RingPtr ring, const Rational& c);
    static SparsePolynomial variable(RingPtr ring, const std::string& name);
    static SparsePolynomial monomial(RingPtr ring, Exponents exps, const Rational& c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const& { return terms_; }
    const TermMap& terms() const&& = delete;  // no iterating a temporary's terms
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    /// Coefficient of the given exponent vector (zero when absent).
    Rational coefficient(const Exponents& exps) const;
    Rational constant_term() const;

    /// Largest weighted degree among stored terms; -1 for the zero polynomial.
    int weighted_degree() const;
    /// True when all terms share one weighted degree (the zero polynomial is
    /// homogeneous of every degree).
    bool is_homogeneous() const;

    int degree_in(const std::string& var) const;

    SparsePolynomial operator-() const;
    SparsePolynomial& operator+=(const SparsePolynomial& o);
    SparsePolynomial& operator-=(const SparsePolynomial& o);

    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
    friend SparsePolynomial operator*(const SparsePolynomial& a, const Rational& c);
    friend SparsePolynomial operator*(const Rational& c, const SparsePolynomial& a) { return a * c; }
    friend SparsePolynomial operator/(const SparsePolynomial& a, const Rational& c) {
        if (c.is_zero()) throw std::domain_error("polynomial division by zero scalar");
        return a * (Rational(1) / c);
    }

    SparsePolynomial pow(unsigned e) const;

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b);
    friend bool operator!=(const SparsePolynomial& a, const SparsePolynomial& b) { return !(a == b); }

    /// Exact evaluation at rational values given per variable name. Every
    /// variable of the ring must be assigned.
    Rational eval(const std::map<std::string, Rational>& values) const;

    /// Rebuilds the polynomial over another ring, matching variables by
    /// name. A variable with a nonzero exponent that is missing from the
    /// target ring is an error.
    SparsePolynomial reindex_to(RingPtr target) const;

    std::string str() const;

    /// Inserts c into the monomial's coefficient, respecting canonical form.
    /// Internal building block for the free operations below.
    void add_term(const Exponents& exps, const Rational& c);

  private:
    RingPtr ring_;
    TermMap terms_;
};

bool same_ring(const SparsePolynomial& a, const SparsePolynomial& b);

/// Composition: replaces each variable of p by its assigned polynomial, all
/// assignments living in one common target ring. Variables without an
/// assignment map to the same-named variable of the target ring; if the
/// target lacks it, the substitution is rejected.
SparsePolynomial substitute(const SparsePolynomial& p,
                            const std::map<std::string, SparsePolynomial>& assignments);

/// Multiplicative inverse as a formal power series, valid modulo terms of
/// weighted degree > max_degree. Requires a nonzero constant term.
SparsePolynomial series_inverse(const SparsePolynomial& p, int max_degree);

/// Euclidean division of p by a modulus that is monic in var (a constant
/// leading coefficient is normalized away; a polynomial one is rejected).
/// Coefficients of both inputs may involve the remaining variables.
/// Returns (quotient, remainder) with deg_var(remainder) < deg_var(modulus).
std::pair<SparsePolynomial, SparsePolynomial> divmod_univariate(
    const SparsePolynomial& p, const std::string& var, const SparsePolynomial& modulus);

/// Coefficient of var^power, as a polynomial in the same ring with the var
/// exponent cleared.
SparsePolynomial coefficient_of(const SparsePolynomial& p, const std::string& var, int power);

/// Sum of the terms of exactly the given weighted degree.
SparsePolynomial weighted_part(const SparsePolynomial& p, int degree);

/// Drops every term whose exponent in var exceeds max_power (nilpotency
/// cutoffs such as h^5 = 0 on a four-dimensional ambient).
SparsePolynomial truncate_var_power(const SparsePolynomial& p, const std::string& var, int max_power);

/// One-line human rendering in the style of the published tables:
/// coefficients juxtaposed with variable names, "3d + 2k + x".
std::string human_str(const SparsePolynomial& p);

}  // namespace nodal
