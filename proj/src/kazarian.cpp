#include "nodal/kazarian.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>

#include "nodal/bell.hpp"
#include "nodal/partitions.hpp"

namespace nodal {

namespace {

int codim_of_type(const std::string& name) {
    if (name.size() < 2 || (name[0] != 'A' && name[0] != 'D' && name[0] != 'E'))
        throw std::invalid_argument("unknown singularity type '" + name + "'");
    for (size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i])))
            throw std::invalid_argument("unknown singularity type '" + name + "'");
    int k = std::stoi(name.substr(1));
    if (k < 1 || (name[0] == 'D' && k < 4) || (name[0] == 'E' && k < 6))
        throw std::invalid_argument("unknown singularity type '" + name + "'");
    return k;
}

}  // namespace

MultisingularitySpec::MultisingularitySpec(std::map<std::string, int> counts)
    : counts_(std::move(counts)) {
    for (auto it = counts_.begin(); it != counts_.end();) {
        codim_of_type(it->first);
        if (it->second < 0) throw std::invalid_argument("negative multiplicity in multisingularity");
        if (it->second == 0) it = counts_.erase(it); else ++it;
    }
}

MultisingularitySpec MultisingularitySpec::parse(const std::string& text) {
    std::map<std::string, int> counts;
    std::string token;
    auto flush = [&]() {
        if (token.empty()) throw std::invalid_argument("multisingularity: empty factor in '" + text + "'");
        size_t i = 0;
        int repeat = 1;
        if (std::isdigit(static_cast<unsigned char>(token[0]))) {
            size_t j = 0;
            while (j < token.size() && std::isdigit(static_cast<unsigned char>(token[j]))) ++j;
            repeat = std::stoi(token.substr(0, j));
            i = j;
        }
        size_t caret = token.find('^', i);
        std::string name = token.substr(i, caret == std::string::npos ? std::string::npos : caret - i);
        int power = 1;
        if (caret != std::string::npos) {
            if (caret + 1 >= token.size())
                throw std::invalid_argument("multisingularity: dangling '^' in '" + text + "'");
            power = std::stoi(token.substr(caret + 1));
        }
        if (name.empty()) throw std::invalid_argument("multisingularity: missing name in token '" + token + "'");
        codim_of_type(name);
        if (repeat < 1 || power < 1)
            throw std::invalid_argument("multisingularity: non-positive multiplicity in '" + token + "'");
        counts[name] += repeat * power;
        token.clear();
    };
    for (char c : text) {
        if (c == ' ') continue;
        if (c == '*' || c == '+') flush();
        else token += c;
    }
    flush();
    return MultisingularitySpec(std::move(counts));
}

int MultisingularitySpec::total_points() const {
    int n = 0;
    for (const auto& [_, c] : counts_) n += c;
    return n;
}

int MultisingularitySpec::codimension() const {
    int n = 0;
    for (const auto& [name, c] : counts_) n += codim_of_type(name) * c;
    return n;
}

Rational MultisingularitySpec::aut() const {
    Rational a(1);
    for (const auto& [_, c] : counts_) a *= Rational::factorial(c);
    return a;
}

std::string MultisingularitySpec::key() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [name, c] : counts_) {
        if (!first) out << "*";
        first = false;
        out << name;
        if (c > 1) out << "^" << c;
    }
    return out.str();
}

std::vector<std::string> MultisingularitySpec::members() const {
    std::vector<std::string> out;
    for (const auto& [name, c] : counts_)
        for (int i = 0; i < c; ++i) out.push_back(name);
    return out;
}

namespace kazarian {

RingPtr residual_ring() {
    static RingPtr ring = WeightedRing::make({"v", "a1", "a2", "a3", "a4"}, {1, 1, 2, 3, 4});
    return ring;
}

namespace {

/// The 21 residual classes of critical-locus codimension at most 4, keyed
/// canonically.
const std::map<std::string, SparsePolynomial>& residual_table() {
    static std::once_flag once;
    static std::map<std::string, SparsePolynomial> table;
    std::call_once(once, [] {
        RingPtr R = residual_ring();
        auto v = SparsePolynomial::variable(R, "v");
        auto a1 = SparsePolynomial::variable(R, "a1");
        auto a2 = SparsePolynomial::variable(R, "a2");
        auto a3 = SparsePolynomial::variable(R, "a3");
        auto a4 = SparsePolynomial::variable(R, "a4");
        auto one = SparsePolynomial::constant(R, Rational(1));
        auto c = [](long n) { return Rational(n); };

        table.emplace("A1", one);
        table.emplace("A2", a1);
        table.emplace("A1^2", -v - a1 * c(3));
        table.emplace("A3", v * a1 + a2 * c(3));
        table.emplace("A1*A2", (v * a1 + a2 * c(2)) * c(-6));
        table.emplace("A1^3", (v * v + v * a1 * c(19) + a2 * c(30)) * c(2));
        table.emplace("A4", v * v * a1 + v * a2 * c(4) + a1 * a2 * c(3) + a3 * c(6));
        table.emplace("D4", -v * a2 + a1 * a2 - a3 * c(2));
        table.emplace("A1*A3",
                      (v * v * a1 * c(2) + v * a2 * c(5) + a1 * a2 * c(6) + a3 * c(3)) * c(-4));
        table.emplace("A2^2",
                      (v * v * a1 * c(3) + v * a2 * c(8) + a1 * a2 * c(7) + a3 * c(6)) * c(-3));
        table.emplace("A1^2*A2",
                      (v * v * a1 * c(3) + v * a2 * c(7) + a1 * a2 * c(6) + a3 * c(3)) * c(24));
        table.emplace("A1^4",
                      (v.pow(3) + v * v * a1 * c(111) + v * a2 * c(239) + a1 * a2 * c(171) +
                       a3 * c(78)) * c(-6));
        table.emplace("A5", v.pow(3) * a1 - v * v * a2 * c(4) + v * a1 * a2 * c(16) -
                                v * a3 * c(12) + a1 * a3 * c(27) + a4 * c(6));
        table.emplace("D5", (v * v * a2 * c(2) - v * a1 * a2 * c(2) + v * a3 * c(7) -
                             a1 * a3 * c(3) + a4 * c(6)) * c(-2));
        table.emplace("A1*A4", (v.pow(3) * a1 - v * v * a2 * c(4) + v * a1 * a2 * c(14) -
                                v * a3 * c(16) + a1 * a3 * c(21) - a4 * c(6)) * c(-10));
        table.emplace("A1*D4", (v * v * a2 * c(5) - v * a1 * a2 * c(5) + v * a3 * c(16) -
                                a1 * a3 * c(6) + a4 * c(12)) * c(4));
        table.emplace("A2*A3", (v.pow(3) * a1 * c(2) - v * v * a2 * c(10) + v * a1 * a2 * c(28) -
                                v * a3 * c(39) + a1 * a3 * c(39) - a4 * c(18)) * c(-6));
        table.emplace("A1^2*A3", (v.pow(3) * a1 * c(56) - v * v * a2 * c(220) +
                                  v * a1 * a2 * c(684) - v * a3 * c(951) + a1 * a3 * c(891) -
                                  a4 * c(522)) * c(2));
        table.emplace("A1*A2^2", (v.pow(3) * a1 * c(7) - v * v * a2 * c(20) +
                                  v * a1 * a2 * c(74) - v * a3 * c(96) + a1 * a3 * c(95) -
                                  a4 * c(50)) * c(18));
        table.emplace("A1^3*A2", (v.pow(3) * a1 * c(28) - v * v * a2 * c(55) +
                                  v * a1 * a2 * c(250) - v * a3 * c(318) + a1 * a3 * c(300) -
                                  a4 * c(180)) * c(-48));
        table.emplace("A1^5", (v.pow(4) + v.pow(3) * a1 * c(671) - v * v * a2 * c(701) +
                               v * a1 * a2 * c(4863) - v * a3 * c(5844) + a1 * a3 * c(5490) -
                               a4 * c(3420)) * c(24));
    });
    return table;
}

}  // namespace

std::vector<SparsePolynomial> alpha_classes(int max_index) {
    RingPtr vw = bclasses::vw_ring();
    auto v = SparsePolynomial::variable(vw, "v");
    auto w1 = SparsePolynomial::variable(vw, "w1");
    auto w2 = SparsePolynomial::variable(vw, "w2");
    auto one = SparsePolynomial::constant(vw, Rational(1));
    SparsePolynomial numerator = (one + v).pow(2) + (one + v) * w1 + w2;
    SparsePolynomial denominator = one - w1 + w2;
    SparsePolynomial alpha = numerator * series_inverse(denominator, max_index);
    std::vector<SparsePolynomial> out;
    for (int k = 1; k <= max_index; ++k) out.push_back(weighted_part(alpha, k));
    return out;
}

SparsePolynomial fixed_surface_reduce(const SparsePolynomial& p) {
    RingPtr ring = p.ring();
    int i1 = ring->index_of("w1");
    int i2 = ring->index_of("w2");
    if (i1 < 0 || i2 < 0)
        throw std::invalid_argument("fixed_surface_reduce: expected a (v, w1, w2) class");
    SparsePolynomial out(ring);
    for (const auto& [e, c] : p.terms())
        if (e[i1] + 2 * e[i2] <= 2) out.add_term(e, c);
    return out;
}

SparsePolynomial residual_class(const MultisingularitySpec& spec) {
    const auto& table = residual_table();
    auto it = table.find(spec.key());
    if (it == table.end())
        throw std::domain_error("residual_class: '" + spec.key() +
                                "' is beyond the tabulated codimension");
    return it->second;
}

std::vector<std::string> residual_table_keys() {
    std::vector<std::string> keys;
    for (const auto& [k, _] : residual_table()) keys.push_back(k);
    return keys;
}

LinearForm a_linear_form(const MultisingularitySpec& spec) {
    static std::mutex mu;
    static std::map<std::string, LinearForm> cache;
    std::scoped_lock lock(mu);
    auto hit = cache.find(spec.key());
    if (hit != cache.end()) return hit->second;

    SparsePolynomial rs = residual_class(spec);
    RingPtr vw = bclasses::vw_ring();
    auto alphas = alpha_classes(4);
    std::map<std::string, SparsePolynomial> images = {
        {"v", SparsePolynomial::variable(vw, "v")},
        {"a1", alphas[0]},
        {"a2", alphas[1]},
        {"a3", alphas[2]},
        {"a4", alphas[3]}};
    SparsePolynomial cls = substitute(rs, images) * bclasses::x_class(2);
    // Push each monomial at the delta its weighted degree dictates.
    LinearForm out;
    for (const auto& [e, c] : cls.terms()) {
        int delta = vw->weighted_degree(e) - 2;
        out += families::fixed_surface_pushforward(e[0], e[1], e[2], delta) * c;
    }
    cache.emplace(spec.key(), out);
    return out;
}

SparsePolynomial multisingularity_polynomial(const MultisingularitySpec& spec) {
    auto members = spec.members();
    int r = spec.total_points();
    if (r == 0) return SparsePolynomial::constant(families::dksx_ring(), Rational(1));
    RingPtr ring = families::dksx_ring();
    SparsePolynomial total(ring);
    for (const auto& part : partitions::all_partitions(r)) {
        SparsePolynomial prod = SparsePolynomial::constant(ring, Rational(1));
        for (const auto& block : part.blocks()) {
            std::map<std::string, int> sub;
            for (int idx : block) ++sub[members[idx - 1]];
            prod = prod * a_linear_form(MultisingularitySpec(std::move(sub))).to_polynomial();
        }
        total += prod;
    }
    return total / spec.aut();
}

Rational multisingularity_count(const MultisingularitySpec& spec,
                                const SurfaceInvariants& surface) {
    return multisingularity_polynomial(spec).eval({{"d", Rational(surface.d)},
                                                   {"k", Rational(surface.k)},
                                                   {"s", Rational(surface.s)},
                                                   {"x", Rational(surface.x)}});
}

namespace {

/// Hyperplane-contact model for a smooth degree-d hypersurface in P^n: the
/// critical locus is the hypersurface itself under the Gauss-map
/// identification, classes are polynomials in (d, h) with h^j = 0 for
/// j >= n, and the degree functional is d times the h^(n-1) coefficient.
struct ContactModel {
    int n;
    RingPtr ring;  // (d, h)
    SparsePolynomial v;
    std::vector<SparsePolynomial> alpha;  // alpha_1..alpha_4

    explicit ContactModel(int n_)
        : n(n_), ring(WeightedRing::make({"d", "h"}, {1, 1})), v(SparsePolynomial::zero(ring)) {
        auto d = SparsePolynomial::variable(ring, "d");
        auto h = SparsePolynomial::variable(ring, "h");
        auto one = SparsePolynomial::constant(ring, Rational(1));
        v = d * h;

        // c(T_{F/Y})|_X = (1+h)^{n+1}/(1+dh): the incidence divisor is cut
        // out in (1,1), and the Gauss map pulls the dual hyperplane class
        // back to (d-1)h. Every series here lives in the span of d^a h^b
        // with a <= b <= n-1, so weighted degree 2(n-1) bounds all of it.
        SparsePolynomial cT = (one + h).pow(n + 1) * series_inverse(one + d * h, 2 * (n - 1));
        cT = truncate_var_power(cT, "h", n - 1);

        // c(Omega (x) O(D)) = sum_j c_j(Omega) (1+v)^{rank-j}, rank = n-1.
        int rank = n - 1;
        SparsePolynomial twisted(ring);
        for (int j = 0; j <= rank; ++j) {
            SparsePolynomial cj = weighted_h_part(cT, j);
            if (j % 2 == 1) cj = -cj;  // c_j(Omega) = (-1)^j c_j(T)
            twisted += cj * (one + v).pow(rank - j);
        }
        SparsePolynomial a = twisted * series_inverse(cT, 2 * (n - 1));
        a = truncate_var_power(a, "h", n - 1);
        for (int k = 1; k <= 4; ++k) alpha.push_back(weighted_h_part(a, k));
    }

    SparsePolynomial weighted_h_part(const SparsePolynomial& p, int hdeg) const {
        int ih = ring->index_of("h");
        SparsePolynomial out(ring);
        for (const auto& [e, c] : p.terms())
            if (e[ih] == hdeg) out.add_term(e, c);
        return out;
    }

    SparsePolynomial residual_on_model(const MultisingularitySpec& spec) const {
        std::map<std::string, SparsePolynomial> images = {
            {"v", v}, {"a1", alpha[0]}, {"a2", alpha[1]}, {"a3", alpha[2]}, {"a4", alpha[3]}};
        return truncate_var_power(substitute(residual_class(spec), images), "h", n - 1);
    }

    /// The composite pull-push f^* f_*: h^a -> d (d-1)^n h^(a+1), derived
    /// from the projection formula for the Gauss map and validated against
    /// the closed contact formulas before any other use.
    SparsePolynomial pull_push(const SparsePolynomial& p) const {
        auto d = SparsePolynomial::variable(ring, "d");
        auto h = SparsePolynomial::variable(ring, "h");
        auto one = SparsePolynomial::constant(ring, Rational(1));
        SparsePolynomial op = d * (d - one).pow(n) * h;
        return truncate_var_power(op * p, "h", n - 1);
    }

    /// Degree of a class: d times the h^(n-1) coefficient, as a polynomial
    /// in d alone.
    SparsePolynomial integrate(const SparsePolynomial& p) const {
        static RingPtr dring = WeightedRing::make({"d"}, {1});
        SparsePolynomial coeff = coefficient_of(p, "h", n - 1);
        auto d = SparsePolynomial::variable(ring, "d");
        return (coeff * d).reindex_to(dring);
    }
};

}  // namespace

SparsePolynomial contact_polynomial(int n, const MultisingularitySpec& spec) {
    if (n != 2 && n != 3)
        throw std::invalid_argument("contact_polynomial: supported ambient dimensions are 2 and 3");
    if (spec.codimension() != n)
        throw std::domain_error("contact_polynomial: spec codimension " +
                                std::to_string(spec.codimension()) + " != n = " + std::to_string(n) +
                                " (the contact locus is not finite)");
    ContactModel model(n);
    auto membersv = spec.members();
    int r = spec.total_points();

    SparsePolynomial total(model.ring);
    for (const auto& part : partitions::all_partitions(r)) {
        SparsePolynomial prod = SparsePolynomial::constant(model.ring, Rational(1));
        for (const auto& block : part.blocks()) {
            std::map<std::string, int> sub;
            for (int idx : block) ++sub[membersv[idx - 1]];
            SparsePolynomial rs = model.residual_on_model(MultisingularitySpec(std::move(sub)));
            // The block holding the first point stays bare; every other
            // factor crosses the fiber product through the pull-push.
            if (block.front() == 1)
                prod = truncate_var_power(prod * rs, "h", n - 1);
            else
                prod = truncate_var_power(prod * model.pull_push(rs), "h", n - 1);
        }
        total += prod;
    }
    return model.integrate(total) / spec.aut();
}

Rational contact_count(int n, long d, const MultisingularitySpec& spec) {
    return contact_polynomial(n, spec).eval({{"d", Rational(d)}});
}

}  // namespace kazarian
}  // namespace nodal
