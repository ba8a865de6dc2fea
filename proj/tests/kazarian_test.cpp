#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nodal/bclasses.hpp"
#include "nodal/kazarian.hpp"

using namespace nodal;
using namespace nodal::kazarian;

namespace {

SparsePolynomial vw(const std::string& n) {
    return SparsePolynomial::variable(bclasses::vw_ring(), n);
}

LinearForm lf(long d, long k, long s, long x) {
    return {Rational(d), Rational(k), Rational(s), Rational(x)};
}

SparsePolynomial dpoly(std::initializer_list<long> coeffs_desc) {
    static RingPtr dring = WeightedRing::make({"d"}, {1});
    SparsePolynomial p(dring);
    int deg = static_cast<int>(coeffs_desc.size()) - 1;
    int i = 0;
    for (long c : coeffs_desc) p += SparsePolynomial::monomial(dring, {deg - i++}, Rational(c));
    return p;
}

}  // namespace

TEST_CASE("multisingularity parsing and keys") {
    CHECK(MultisingularitySpec::parse("A1^3").key() == "A1^3");
    CHECK(MultisingularitySpec::parse("A1*A2").key() == "A1*A2");
    CHECK(MultisingularitySpec::parse("A2*A1").key() == "A1*A2");
    CHECK(MultisingularitySpec::parse("D4+2A1").key() == "A1^2*D4");
    CHECK(MultisingularitySpec::parse("2A1 + D4").key() == "A1^2*D4");
    CHECK(MultisingularitySpec::parse("A1^2*A2").total_points() == 3);
    CHECK(MultisingularitySpec::parse("A1*A2").codimension() == 3);
    CHECK(MultisingularitySpec::parse("A1^3").aut() == Rational(6));
    CHECK(MultisingularitySpec::parse("A1^2*A2").aut() == Rational(2));
    CHECK_THROWS(MultisingularitySpec::parse("B2"));
    CHECK_THROWS(MultisingularitySpec::parse("A1^"));
    CHECK_THROWS(MultisingularitySpec::parse("A1**A2"));
}

TEST_CASE("alpha classes") {
    auto alphas = alpha_classes(4);
    REQUIRE(alphas.size() == 4);
    auto v = vw("v"), w1 = vw("w1"), w2 = vw("w2");

    CHECK(alphas[0] == (v + w1) * Rational(2));
    CHECK(alphas[1] == (v + w1) * (v + w1 * Rational(2)));

    // full degree-3 coefficient, before any surface reduction
    SparsePolynomial alpha3_full = v * v * w1 + v * w1 * w1 * Rational(3) - v * w2 * Rational(2) +
                                   w1.pow(3) * Rational(2) - w1 * w2 * Rational(2);
    CHECK(alphas[2] == alpha3_full);
    CHECK(fixed_surface_reduce(alphas[2]) == v * (v * w1 + w1 * w1 * Rational(3) - w2 * Rational(2)));

    CHECK(fixed_surface_reduce(alphas[3]) == v * v * (w1 * w1 - w2));

    CHECK(fixed_surface_reduce(w1.pow(3)).is_zero());
    CHECK(fixed_surface_reduce(w1 * w2).is_zero());
    CHECK(fixed_surface_reduce(v * w1 * w1) == v * w1 * w1);
}

TEST_CASE("residual table sanity") {
    CHECK(residual_table_keys().size() == 21);
    CHECK(residual_class(MultisingularitySpec::parse("A1")) ==
          SparsePolynomial::constant(residual_ring(), Rational(1)));
    CHECK_THROWS(residual_class(MultisingularitySpec::parse("A6")));
    CHECK_THROWS(residual_class(MultisingularitySpec::parse("A1^6")));

    // substituting the alpha classes into R_{A1^2} reproduces Q_{b1,2}
    auto alphas = alpha_classes(4);
    SparsePolynomial r = substitute(residual_class(MultisingularitySpec::parse("A1^2")),
                                    {{"v", vw("v")},
                                     {"a1", alphas[0]},
                                     {"a2", alphas[1]},
                                     {"a3", alphas[2]},
                                     {"a4", alphas[3]}});
    CHECK(r == -(vw("v") * Rational(7)) - vw("w1") * Rational(6));
    CHECK(r == bclasses::q_operator(bclasses::x_class(2), 2));
}

TEST_CASE("the full table of surface linear forms") {
    auto a = [](const char* spec) { return a_linear_form(MultisingularitySpec::parse(spec)); };
    CHECK(a("A1") == lf(3, 2, 0, 1));
    CHECK(a("A2") == lf(12, 12, 2, 2));
    CHECK(a("A1^2") == lf(-42, -39, -6, -7));
    CHECK(a("A3") == lf(50, 64, 17, 5));
    CHECK(a("A1*A2") == lf(-240, -288, -72, -24));
    CHECK(a("A1^3") == lf(1380, 1576, 376, 138));
    CHECK(a("A4") == lf(180, 280, 100, 0));
    CHECK(a("D4") == lf(15, 20, 5, 5));
    CHECK(a("A1*A3") == lf(-1260, -1820, -596, -60));
    CHECK(a("A2^2") == lf(-1260, -1800, -588, -48));
    CHECK(a("A1^2*A2") == lf(9000, 12360, 3864, 456));
    CHECK(a("A1^4") == lf(-72360, -95670, -28842, -3888));
    CHECK(a("A5") == lf(630, 1140, 498, -60));
    CHECK(a("D5") == lf(84, 132, 44, 20));
    CHECK(a("A1*A4") == lf(-5460, -9240, -3740, 200));
    CHECK(a("A1*D4") == lf(-420, -624, -196, -100));
    CHECK(a("A2*A3") == lf(-6300, -10332, -4044, 60));
    CHECK(a("A1^2*A3") == lf(52920, 84180, 31816, 240));
    CHECK(a("A1*A2^2") == lf(53676, 84456, 31716, 72));
    CHECK(a("A1^3*A2") == lf(-505008, -770112, -279792, -5616));
    CHECK(a("A1^5") == lf(5225472, 7725168, 2723400, 84384));
}

TEST_CASE("pure-node forms agree with the recursion pipeline") {
    auto as = families::a_coefficients(5);
    CHECK(a_linear_form(MultisingularitySpec::parse("A1")) == as[0]);
    CHECK(a_linear_form(MultisingularitySpec::parse("A1^2")) == as[1]);
    CHECK(a_linear_form(MultisingularitySpec::parse("A1^3")) == as[2]);
    CHECK(a_linear_form(MultisingularitySpec::parse("A1^4")) == as[3]);
    CHECK(a_linear_form(MultisingularitySpec::parse("A1^5")) == as[4]);
}

TEST_CASE("multisingularity counts") {
    // a singleton spec is just its own linear form
    CHECK(multisingularity_polynomial(MultisingularitySpec::parse("D4")) ==
          a_linear_form(MultisingularitySpec::parse("D4")).to_polynomial());

    // two distinct types: both partitions of a two-element set, aut = 1
    auto a1 = a_linear_form(MultisingularitySpec::parse("A1")).to_polynomial();
    auto a2 = a_linear_form(MultisingularitySpec::parse("A2")).to_polynomial();
    auto a12 = a_linear_form(MultisingularitySpec::parse("A1*A2")).to_polynomial();
    CHECK(multisingularity_polynomial(MultisingularitySpec::parse("A1*A2")) == a12 + a1 * a2);

    // the Bell restructuring: A1^delta matches the node polynomial
    for (int delta = 1; delta <= 5; ++delta) {
        auto spec = MultisingularitySpec(std::map<std::string, int>{{"A1", delta}});
        CHECK(multisingularity_polynomial(spec) == families::node_polynomial(delta));
    }

    // and therefore the same counts on concrete surfaces
    for (long m = 4; m <= 9; ++m)
        for (int delta = 1; delta <= 5; ++delta) {
            auto spec = MultisingularitySpec(std::map<std::string, int>{{"A1", delta}});
            CHECK(multisingularity_count(spec, SurfaceInvariants::p2(m)) ==
                  families::count_on_surface(SurfaceInvariants::p2(m), delta));
        }
}

TEST_CASE("contact counts for plane curves") {
    auto flexes = contact_polynomial(2, MultisingularitySpec::parse("A2"));
    CHECK(flexes == dpoly({3, -6, 0}));  // 3d(d-2)

    auto bitangents = contact_polynomial(2, MultisingularitySpec::parse("A1^2"));
    // (1/2) d (d-3)(d-2)(d+3) = (1/2)(d^4 - 2d^3 - 9d^2 + 18d)
    CHECK(bitangents == dpoly({1, -2, -9, 18, 0}) / Rational(2));

    // smooth plane quartic: 24 flexes, 28 bitangents
    CHECK(contact_count(2, 4, MultisingularitySpec::parse("A2")) == Rational(24));
    CHECK(contact_count(2, 4, MultisingularitySpec::parse("A1^2")) == Rational(28));

    CHECK_THROWS(contact_polynomial(2, MultisingularitySpec::parse("A3")));  // codim 3 != 2
    CHECK_THROWS(contact_polynomial(4, MultisingularitySpec::parse("A4")));
}

TEST_CASE("contact counts for surfaces in three-space") {
    auto tacnodal = contact_polynomial(3, MultisingularitySpec::parse("A3"));
    // 2d(11d-24)(d-2) = 22d^3 - 92d^2 + 96d
    CHECK(tacnodal == dpoly({22, -92, 96, 0}));

    auto node_cusp = contact_polynomial(3, MultisingularitySpec::parse("A1*A2"));
    // 4d(d-3)(d-2)(d^3+3d-16)
    {
        auto d = dpoly({1, 0});
        auto expected = d * (d - dpoly({3})) * (d - dpoly({2})) *
                        (d * d * d + d * Rational(3) - dpoly({16})) * Rational(4);
        CHECK(node_cusp == expected);
    }

    auto tritangent = contact_polynomial(3, MultisingularitySpec::parse("A1^3"));
    {
        auto d = dpoly({1, 0});
        auto inner = dpoly({1, -4, 7, -45, 114, -111, 548, -960});
        auto expected = d * (d - dpoly({2})) * inner / Rational(6);
        CHECK(tritangent == expected);
    }

    // numeric spot checks across degrees
    for (long deg = 4; deg <= 12; ++deg) {
        Rational d(deg);
        CHECK(contact_count(3, deg, MultisingularitySpec::parse("A3")) ==
              Rational(2) * d * (Rational(11) * d - Rational(24)) * (d - Rational(2)));
        CHECK(contact_count(3, deg, MultisingularitySpec::parse("A1^3")) ==
              d * (d - Rational(2)) *
                  (d.pow(7) - Rational(4) * d.pow(6) + Rational(7) * d.pow(5) -
                   Rational(45) * d.pow(4) + Rational(114) * d.pow(3) - Rational(111) * d.pow(2) +
                   Rational(548) * d - Rational(960)) /
                  Rational(6));
    }
}

TEST_CASE("every tabulated contact polynomial is divisible by d") {
    for (const auto& key : residual_table_keys()) {
        auto spec = MultisingularitySpec::parse(key);
        for (int n : {2, 3}) {
            if (spec.codimension() != n) continue;
            auto p = contact_polynomial(n, spec);
            CHECK(coefficient_of(p, "d", 0).is_zero());
        }
    }
}
