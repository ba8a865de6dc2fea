#include "nodal/bclasses.hpp"

#include <mutex>

namespace nodal {
namespace bclasses {

RingPtr vw_ring() {
    static RingPtr ring = WeightedRing::make({"v", "w1", "w2"}, {1, 1, 2});
    return ring;
}

namespace {

// Rewrites a polynomial in (v, t1, t2), symmetric in t1 <-> t2, as a
// polynomial in (v, w1, w2) with w1 = t1 + t2 and w2 = t1 t2. Classical
// leading-term elimination for two variables; a non-symmetric input leaves a
// residue and is reported, since it can only come from a bug upstream.
SparsePolynomial symmetrize_t(const SparsePolynomial& p) {
    RingPtr vtt = p.ring();
    RingPtr out_ring = vw_ring();
    SparsePolynomial out(out_ring);
    SparsePolynomial rest = p;

    SparsePolynomial w1_t = SparsePolynomial::variable(vtt, "t1") + SparsePolynomial::variable(vtt, "t2");
    SparsePolynomial w2_t = SparsePolynomial::variable(vtt, "t1") * SparsePolynomial::variable(vtt, "t2");
    int iv = vtt->index_of("v");
    int i1 = vtt->index_of("t1");
    int i2 = vtt->index_of("t2");

    while (!rest.is_zero()) {
        // Pick the term with lexicographically largest (t1, t2) exponent pair.
        const Exponents* lead = nullptr;
        for (const auto& [e, c] : rest.terms()) {
            if (!lead || std::pair(e[i1], e[i2]) > std::pair((*lead)[i1], (*lead)[i2]))
                lead = &e;
        }
        Exponents e = *lead;
        Rational c = rest.coefficient(e);
        int a = e[i1], b = e[i2];
        if (a < b)
            throw std::logic_error("symmetrize: non-symmetric remainder (internal bug)");
        // c * v^k * w1^(a-b) * w2^b has t-leading term exactly c t1^a t2^b.
        SparsePolynomial elim = w1_t.pow(a - b) * w2_t.pow(b) * c;
        Exponents vpow(vtt->size(), 0);
        vpow[iv] = e[iv];
        rest -= elim * SparsePolynomial::monomial(vtt, vpow, Rational(1));

        Exponents f(out_ring->size(), 0);
        f[out_ring->index_of("v")] = e[iv];
        f[out_ring->index_of("w1")] = a - b;
        f[out_ring->index_of("w2")] = b;
        out.add_term(f, c);
    }
    return out;
}

}  // namespace

SparsePolynomial principal_parts_top_chern(int i) {
    if (i < 1 || i > 5)
        throw std::invalid_argument("principal_parts_top_chern: i must be in 1..5");
    RingPtr vtt = WeightedRing::make({"v", "t1", "t2"}, {1, 1, 1});
    SparsePolynomial prod = SparsePolynomial::constant(vtt, Rational(1));
    SparsePolynomial v = SparsePolynomial::variable(vtt, "v");
    SparsePolynomial t1 = SparsePolynomial::variable(vtt, "t1");
    SparsePolynomial t2 = SparsePolynomial::variable(vtt, "t2");
    for (int j = 0; j <= i - 1; ++j)
        for (int a = 0; a <= j; ++a) {
            int b = j - a;
            prod = prod * (v + t1 * Rational(a) + t2 * Rational(b));
        }
    return symmetrize_t(prod);
}

const SparsePolynomial& x_class(int i) {
    static std::mutex mu;
    static std::map<int, SparsePolynomial> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(i);
    if (it == cache.end()) it = cache.emplace(i, principal_parts_top_chern(i)).first;
    return it->second;
}

SparsePolynomial q_operator(const SparsePolynomial& R, int i) {
    if (i < 2) throw std::invalid_argument("q_operator: i must be >= 2");
    static RingPtr vwe = WeightedRing::make({"v", "w1", "w2", "e"}, {1, 1, 2, 1});
    SparsePolynomial v = SparsePolynomial::variable(vwe, "v");
    SparsePolynomial w1 = SparsePolynomial::variable(vwe, "w1");
    SparsePolynomial w2 = SparsePolynomial::variable(vwe, "w2");
    SparsePolynomial e = SparsePolynomial::variable(vwe, "e");

    SparsePolynomial blown = substitute(R, {{"v", v - e * Rational(i)},
                                            {"w1", w1 + e},
                                            {"w2", w2 - e * e}});
    SparsePolynomial modulus = e.pow(3) + w1 * e.pow(2) + w2 * e;
    auto [q, rem] = divmod_univariate(blown, "e", modulus);
    SparsePolynomial coeff = coefficient_of(rem, "e", 2);
    return (-coeff).reindex_to(R.ring());
}

std::vector<SparsePolynomial> b_classes(int delta) {
    if (delta < 1 || delta > 8)
        throw std::invalid_argument("b_classes: the recursion is defined for delta in 1..8");
    RingPtr ring = vw_ring();
    const SparsePolynomial x2 = x_class(2);
    const SparsePolynomial x3 = x_class(3);
    const SparsePolynomial x4 = x_class(4);
    const SparsePolynomial one = SparsePolynomial::constant(ring, Rational(1));

    std::vector<SparsePolynomial> b;
    std::vector<SparsePolynomial> q2, q3;  // Q_{b_i,2}, Q_{b_i,3}
    for (int s = 0; s < delta; ++s) {
        SparsePolynomial next = bell::bell_eval(s, q2, one) * x2;
        if (s >= 3)
            next -= bell::bell_eval(s - 3, q3, one) * x3 *
                    Rational(static_cast<long>(s) * (s - 1) * (s - 2));
        if (s == 7) next += x4 * (Rational(3281) * Rational::factorial(7));
        b.push_back(next);
        q2.push_back(q_operator(next, 2));
        q3.push_back(q_operator(next, 3));
    }
    return b;
}

}  // namespace bclasses
}  // namespace nodal
