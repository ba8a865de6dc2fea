#include "nodal/families.hpp"

#include <sstream>

#include "nodal/bell.hpp"

namespace nodal {

SparsePolynomial LinearForm::to_polynomial() const {
    RingPtr ring = families::dksx_ring();
    SparsePolynomial p(ring);
    p += SparsePolynomial::variable(ring, "d") * d;
    p += SparsePolynomial::variable(ring, "k") * k;
    p += SparsePolynomial::variable(ring, "s") * s;
    p += SparsePolynomial::variable(ring, "x") * x;
    return p;
}

std::string LinearForm::str() const { return human_str(to_polynomial()); }

namespace families {

RingPtr dksx_ring() {
    static RingPtr ring = WeightedRing::make({"d", "k", "s", "x"}, {1, 1, 1, 1});
    return ring;
}

LinearForm fixed_surface_pushforward(int alpha, int beta1, int beta2, int delta) {
    if (alpha < 0 || beta1 < 0 || beta2 < 0 || delta < 0) return {};
    if (alpha + beta1 + 2 * beta2 != delta + 2) return {};  // cannot arise from a degree-(delta+2) class
    if (alpha == delta + 2 && beta1 == 0 && beta2 == 0)
        return {Rational::binomial(delta + 2, 2), 0, 0, 0};
    if (alpha == delta + 1 && beta1 == 1 && beta2 == 0) return {0, Rational(delta + 1), 0, 0};
    if (alpha == delta && beta1 == 2 && beta2 == 0) return {0, 0, 1, 0};
    if (alpha == delta && beta1 == 0 && beta2 == 1) return {0, 0, 0, 1};
    return {};
}

LinearForm push_to_surface(const SparsePolynomial& cls, int delta) {
    RingPtr ring = cls.ring();
    int iv = ring->index_of("v");
    int i1 = ring->index_of("w1");
    int i2 = ring->index_of("w2");
    if (iv < 0 || i1 < 0 || i2 < 0)
        throw std::invalid_argument("push_to_surface: class must live in (v, w1, w2)");
    LinearForm out;
    for (const auto& [e, c] : cls.terms())
        out += fixed_surface_pushforward(e[iv], e[i1], e[i2], delta) * c;
    return out;
}

std::vector<LinearForm> a_coefficients(int delta) {
    auto bs = bclasses::b_classes(delta);
    std::vector<LinearForm> out;
    for (int i = 1; i <= delta; ++i) out.push_back(push_to_surface(bs[i - 1], i));
    return out;
}

SparsePolynomial node_polynomial(int delta) {
    if (delta < 0 || delta > 8)
        throw std::invalid_argument("node_polynomial: delta must be in 0..8");
    RingPtr ring = dksx_ring();
    SparsePolynomial one = SparsePolynomial::constant(ring, Rational(1));
    if (delta == 0) return one;
    std::vector<SparsePolynomial> as;
    for (const auto& a : a_coefficients(delta)) as.push_back(a.to_polynomial());
    SparsePolynomial p = bell::bell_eval(delta, as, one);
    return p / Rational::factorial(delta);
}

Rational count_on_surface(const SurfaceInvariants& surface, int delta) {
    SparsePolynomial n = node_polynomial(delta);
    Rational value = n.eval({{"d", Rational(surface.d)},
                             {"k", Rational(surface.k)},
                             {"s", Rational(surface.s)},
                             {"x", Rational(surface.x)}});
    if (!value.is_integer())
        throw std::domain_error("count_on_surface: non-integer count " + value.str() +
                                " (invariants do not come from a polarized surface)");
    return value;
}

// -- P^4 ---------------------------------------------------------------------

RingPtr p4_base_ring() {
    static RingPtr ring = WeightedRing::make({"m", "q1", "q2"}, {1, 1, 2});
    return ring;
}

namespace {

RingPtr p4_total_ring() {
    static RingPtr ring = WeightedRing::make({"m", "h", "q1", "q2"}, {1, 1, 1, 2});
    return ring;
}

/// Fiber integration over the planes: h^2 -> 1, h^3 -> q1, h^4 -> q1^2 - q2,
/// anything else -> 0. Input lives in (m, h, q1, q2); output in (m, q1, q2).
SparsePolynomial p4_pushforward(const SparsePolynomial& cls) {
    RingPtr total = cls.ring();
    RingPtr base = p4_base_ring();
    int ih = total->index_of("h");
    SparsePolynomial q1 = SparsePolynomial::variable(base, "q1");
    SparsePolynomial q2 = SparsePolynomial::variable(base, "q2");
    SparsePolynomial out(base);
    for (const auto& [e, c] : cls.terms()) {
        int hp = e[ih];
        if (hp < 2 || hp > 4) continue;
        Exponents f(base->size(), 0);
        f[base->index_of("m")] = e[total->index_of("m")];
        f[base->index_of("q1")] = e[total->index_of("q1")];
        f[base->index_of("q2")] = e[total->index_of("q2")];
        SparsePolynomial mono = SparsePolynomial::monomial(base, f, c);
        if (hp == 2)
            out += mono;
        else if (hp == 3)
            out += mono * q1;
        else
            out += mono * (q1 * q1 - q2);
    }
    return out;
}

/// a_i = pi_*(b_i(m h, q1 - 3h, q2 - 2 h q1)) with h^j = 0 for j >= 5.
std::vector<SparsePolynomial> p4_a_classes(int delta) {
    RingPtr total = p4_total_ring();
    SparsePolynomial m = SparsePolynomial::variable(total, "m");
    SparsePolynomial h = SparsePolynomial::variable(total, "h");
    SparsePolynomial q1 = SparsePolynomial::variable(total, "q1");
    SparsePolynomial q2 = SparsePolynomial::variable(total, "q2");
    std::map<std::string, SparsePolynomial> images = {
        {"v", m * h}, {"w1", q1 - h * Rational(3)}, {"w2", q2 - h * q1 * Rational(2) + h * h * Rational(3)}};
    std::vector<SparsePolynomial> out;
    for (const auto& b : bclasses::b_classes(delta)) {
        SparsePolynomial up = truncate_var_power(substitute(b, images), "h", 4);
        out.push_back(p4_pushforward(up));
    }
    return out;
}

}  // namespace

SparsePolynomial p4_node_class(int delta) {
    if (delta < 1 || delta > 6)
        throw std::invalid_argument("p4_node_class: delta must be in 1..6 (dim Gr(3,5) = 6)");
    auto as = p4_a_classes(delta);
    SparsePolynomial one = SparsePolynomial::constant(p4_base_ring(), Rational(1));
    return bell::bell_eval(delta, as, one) / Rational::factorial(delta);
}

SparsePolynomial p4_degree(const SparsePolynomial& cls) {
    RingPtr base = cls.ring();
    int im = base->index_of("m");
    int i1 = base->index_of("q1");
    int i2 = base->index_of("q2");
    if (im < 0 || i1 < 0 || i2 < 0)
        throw std::invalid_argument("p4_degree: class must live in (m, q1, q2)");
    static RingPtr mring = WeightedRing::make({"m"}, {1});
    SparsePolynomial out(mring);
    for (const auto& [e, c] : cls.terms()) {
        if (e[i1] + 2 * e[i2] != 6) continue;
        Rational deg;
        if (e[i1] == 6) deg = 5;
        else if (e[i1] == 4) deg = 3;
        else if (e[i1] == 2) deg = 2;
        else deg = 1;  // q2^3
        out.add_term({e[im]}, c * deg);
    }
    return out;
}

SparsePolynomial p4_sixnodal_polynomial() { return p4_degree(p4_node_class(6)); }

Rational p4_sixnodal_count(long m) {
    return p4_sixnodal_polynomial().eval({{"m", Rational(m)}});
}

SparsePolynomial p4_threenodal_q1cubed() {
    SparsePolynomial cls = p4_node_class(3);
    RingPtr base = p4_base_ring();
    Exponents e(base->size(), 0);
    e[base->index_of("q1")] = 3;
    return p4_degree(cls * SparsePolynomial::monomial(base, e, Rational(1)));
}

Rational planes_through_line_count() {
    // Planes through a fixed line on the quintic: the quintic sections split
    // off the line, whose divisor class is h - q1, leaving the residual
    // quartic family of class 5h - (h - q1) = 4h + q1. The w's restrict
    // unchanged and the base carries the Schubert class [Y_L] = (q1^2-q2)^2.
    // Two nodes on a two-dimensional base.
    RingPtr total = p4_total_ring();
    SparsePolynomial h = SparsePolynomial::variable(total, "h");
    SparsePolynomial q1 = SparsePolynomial::variable(total, "q1");
    SparsePolynomial q2 = SparsePolynomial::variable(total, "q2");
    std::map<std::string, SparsePolynomial> images = {
        {"v", h * Rational(4) + q1},
        {"w1", q1 - h * Rational(3)},
        {"w2", q2 - h * q1 * Rational(2) + h * h * Rational(3)}};

    std::vector<SparsePolynomial> pushed;
    for (const auto& b : bclasses::b_classes(2))
        pushed.push_back(p4_pushforward(truncate_var_power(substitute(b, images), "h", 4)));

    RingPtr base = p4_base_ring();
    SparsePolynomial one = SparsePolynomial::constant(base, Rational(1));
    SparsePolynomial two_nodal = bell::bell_eval(2, pushed, one) / Rational(2);
    SparsePolynomial q1b = SparsePolynomial::variable(base, "q1");
    SparsePolynomial q2b = SparsePolynomial::variable(base, "q2");
    SparsePolynomial schubert = (q1b * q1b - q2b).pow(2);
    SparsePolynomial deg = p4_degree(schubert * two_nodal);
    return deg.eval({{"m", Rational(0)}});  // no m-dependence: v' is degree-free
}

Rational quintic_irreducible_count() {
    return p4_sixnodal_count(5) - Rational(609250) - Rational(2875) * planes_through_line_count();
}

// -- Validity advisories -------------------------------------------------

ValidityReport validity_generic(long m, int delta) {
    ValidityReport rep;
    rep.setting = "generic(m=" + std::to_string(m) + ", delta=" + std::to_string(delta) + ")";
    rep.valid = m >= 3L * delta;
    rep.notes.push_back(std::string("condition m >= 3*delta (L = mA + B, A very ample, B globally generated): ") +
                        (rep.valid ? "holds" : "fails"));
    if (delta == 8)
        rep.notes.push_back(
            "caveat (delta = 8): additionally requires that the analytic type of the ordinary "
            "4-fold point varies (cross-ratio of the four tangents non-constant); not decidable "
            "from these inputs");
    return rep;
}

ValidityReport validity_plane(long d, int delta) {
    ValidityReport rep;
    rep.setting = "plane(d=" + std::to_string(d) + ", delta=" + std::to_string(delta) + ")";
    // d >= delta/2 + 1, checked without rounding: 2d >= delta + 2.
    rep.valid = 2 * d >= delta + 2;
    rep.notes.push_back(std::string("condition d >= delta/2 + 1: ") + (rep.valid ? "holds" : "fails"));
    return rep;
}

namespace {

ValidityReport rho1_report(const std::string& surface, long L1sq, long m, long k, bool weak_at_m1) {
    ValidityReport rep;
    rep.setting = surface + "-rho1(L1^2=" + std::to_string(L1sq) + ", m=" + std::to_string(m) +
                  ", k=" + std::to_string(k) + ")";
    if (m == 1) {
        bool ok = weak_at_m1 ? (4 * (k + 1) <= L1sq) : (4 * k <= L1sq);
        rep.valid = ok;
        rep.notes.push_back(std::string("condition ") + (weak_at_m1 ? "k + 1 <= L^2/4" : "k <= L^2/4") +
                            " with L = L1: " + (ok ? "holds" : "fails"));
    } else {
        // The printed bullet reads "k + 1 < (m-1)/m^2 L^2" and does not say
        // whether L^2 means L1^2 or (m L1)^2; both readings are reported and
        // the stricter one decides the verdict.
        bool strict = static_cast<long long>(m) * m * (k + 1) < (m - 1) * static_cast<long long>(L1sq);
        bool loose = k + 1 < (m - 1) * static_cast<long long>(L1sq);
        rep.valid = strict;
        rep.notes.push_back(std::string("reading L^2 = L1^2:      k + 1 < (m-1)/m^2 * L1^2: ") +
                            (strict ? "holds" : "fails"));
        rep.notes.push_back(std::string("reading L^2 = (m L1)^2:  k + 1 < (m-1) * L1^2:     ") +
                            (loose ? "holds" : "fails"));
        rep.notes.push_back("the source does not disambiguate L^2; the verdict uses the stricter reading");
    }
    return rep;
}

}  // namespace

ValidityReport validity_k3_rho1(long L1sq, long m, long k) {
    return rho1_report("k3", L1sq, m, k, /*weak_at_m1=*/false);
}

ValidityReport validity_abelian_rho1(long L1sq, long m, long k) {
    return rho1_report("abelian", L1sq, m, k, /*weak_at_m1=*/true);
}

}  // namespace families
}  // namespace nodal
