#include "nodal/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nodal {

WeightedRing::WeightedRing(std::vector<std::string> vars, std::vector<int> weights,
                           std::optional<int> truncation)
    : vars_(std::move(vars)), weights_(std::move(weights)), truncation_(truncation) {
    if (vars_.size() != weights_.size())
        throw std::invalid_argument("WeightedRing: variable/weight count mismatch");
    std::set<std::string> seen;
    for (const auto& v : vars_)
        if (!seen.insert(v).second)
            throw std::invalid_argument("WeightedRing: duplicate variable '" + v + "'");
    for (int w : weights_)
        if (w < 1) throw std::invalid_argument("WeightedRing: weights must be >= 1");
    if (truncation_ && *truncation_ < 0)
        throw std::invalid_argument("WeightedRing: negative truncation");
}

int WeightedRing::index_of(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

int WeightedRing::weighted_degree(const std::vector<int>& exps) const {
    int d = 0;
    for (size_t i = 0; i < exps.size(); ++i) d += exps[i] * weights_[i];
    return d;
}

SparsePolynomial::SparsePolynomial(RingPtr ring)
    : ring_(std::move(ring)), terms_(TermOrder{ring_.get()}) {
    if (!ring_) throw std::invalid_argument("SparsePolynomial: null ring");
}

SparsePolynomial SparsePolynomial::constant(RingPtr ring, const Rational& c) {
    SparsePolynomial p(std::move(ring));
    p.add_term(Exponents(p.ring_->size(), 0), c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(RingPtr ring, const std::string& name) {
    SparsePolynomial p(std::move(ring));
    int idx = p.ring_->index_of(name);
    if (idx < 0) throw std::invalid_argument("no variable '" + name + "' in ring");
    Exponents e(p.ring_->size(), 0);
    e[idx] = 1;
    p.add_term(e, Rational(1));
    return p;
}

SparsePolynomial SparsePolynomial::monomial(RingPtr ring, Exponents exps, const Rational& c) {
    SparsePolynomial p(std::move(ring));
    if (exps.size() != p.ring_->size())
        throw std::invalid_argument("monomial: exponent vector length mismatch");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("monomial: negative exponent");
    p.add_term(exps, c);
    return p;
}

void SparsePolynomial::add_term(const Exponents& exps, const Rational& c) {
    if (c.is_zero()) return;
    if (ring_->truncation() && ring_->weighted_degree(exps) > *ring_->truncation()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational SparsePolynomial::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational SparsePolynomial::constant_term() const {
    return coefficient(Exponents(ring_->size(), 0));
}

int SparsePolynomial::weighted_degree() const {
    if (terms_.empty()) return -1;
    return ring_->weighted_degree(terms_.begin()->first);  // iteration is degree-descending
}

bool SparsePolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = weighted_degree();
    return ring_->weighted_degree(terms_.rbegin()->first) == d;
}

int SparsePolynomial::degree_in(const std::string& var) const {
    int idx = ring_->index_of(var);
    if (idx < 0) throw std::invalid_argument("no variable '" + var + "' in ring");
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

SparsePolynomial SparsePolynomial::operator-() const {
    SparsePolynomial r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

bool same_ring(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.ring() == b.ring() || *a.ring() == *b.ring();
}

static void require_same_ring(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (!same_ring(a, b)) throw ring_mismatch("polynomial operands live in different rings");
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
    require_same_ring(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
    require_same_ring(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    require_same_ring(a, b);
    SparsePolynomial r(a.ring_);
    const size_t n = a.ring_->size();
    Exponents e(n, 0);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

SparsePolynomial operator*(const SparsePolynomial& a, const Rational& c) {
    SparsePolynomial r(a.ring_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : a.terms_) r.terms_.emplace(e, k * c);
    return r;
}

SparsePolynomial SparsePolynomial::pow(unsigned e) const {
    SparsePolynomial acc = SparsePolynomial::constant(ring_, Rational(1));
    SparsePolynomial base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return acc;
}

bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (!same_ring(a, b)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

Rational SparsePolynomial::eval(const std::map<std::string, Rational>& values) const {
    std::vector<Rational> vals;
    vals.reserve(ring_->size());
    for (const auto& v : ring_->variables()) {
        auto it = values.find(v);
        if (it == values.end())
            throw std::invalid_argument("eval: no value for variable '" + v + "'");
        vals.push_back(it->second);
    }
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t *= vals[i].pow(static_cast<unsigned long>(e[i]));
        acc += t;
    }
    return acc;
}

SparsePolynomial SparsePolynomial::reindex_to(RingPtr target) const {
    SparsePolynomial r(target);
    std::vector<int> map(ring_->size(), -1);
    for (size_t i = 0; i < ring_->size(); ++i)
        map[i] = target->index_of(ring_->variables()[i]);
    Exponents e(target->size(), 0);
    for (const auto& [src, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        for (size_t i = 0; i < src.size(); ++i) {
            if (src[i] == 0) continue;
            if (map[i] < 0)
                throw std::invalid_argument("reindex: variable '" + ring_->variables()[i] +
                                            "' absent from target ring");
            e[map[i]] = src[i];
        }
        r.add_term(e, c);
    }
    return r;
}

std::string SparsePolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c.abs();
        if (first) {
            if (c.is_negative()) out << "-";
            first = false;
        } else {
            out << (c.is_negative() ? " - " : " + ");
        }
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->variables()[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out << a.str();
        } else if (a.is_one()) {
            out << mono;
        } else {
            out << a.str() << "*" << mono;
        }
    }
    return out.str();
}

SparsePolynomial substitute(const SparsePolynomial& p,
                            const std::map<std::string, SparsePolynomial>& assignments) {
    RingPtr target;
    for (const auto& [name, img] : assignments) {
        if (!target) {
            target = img.ring();
        } else if (!(target == img.ring() || *target == *img.ring())) {
            throw ring_mismatch("substitute: assignment images live in different rings");
        }
    }
    if (!target) target = p.ring();

    // Image of each source variable, built lazily; unassigned variables fall
    // back to the same-named variable of the target ring.
    const auto& vars = p.ring()->variables();
    std::vector<std::optional<SparsePolynomial>> image(vars.size());
    auto image_of = [&](size_t i) -> const SparsePolynomial& {
        if (!image[i]) {
            auto it = assignments.find(vars[i]);
            if (it != assignments.end()) {
                image[i] = it->second;
            } else if (target->index_of(vars[i]) >= 0) {
                image[i] = SparsePolynomial::variable(target, vars[i]);
            } else {
                throw std::invalid_argument("substitute: variable '" + vars[i] +
                                            "' is unassigned and absent from the target ring");
            }
        }
        return *image[i];
    };

    // Power cache per variable to avoid re-expanding shared factors.
    std::vector<std::vector<SparsePolynomial>> powers(vars.size());
    auto power_of = [&](size_t i, int e) -> const SparsePolynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(SparsePolynomial::constant(target, Rational(1)));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * image_of(i));
        return cache[e];
    };

    SparsePolynomial acc(target);
    for (const auto& [e, c] : p.terms()) {
        SparsePolynomial t = SparsePolynomial::constant(target, c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * power_of(i, e[i]);
        acc += t;
    }
    return acc;
}

SparsePolynomial series_inverse(const SparsePolynomial& p, int max_degree) {
    Rational c0 = p.constant_term();
    if (c0.is_zero())
        throw std::domain_error("series_inverse: zero constant term is not invertible");
    if (max_degree < 0) throw std::invalid_argument("series_inverse: negative max_degree");

    // Work in a truncated clone of the ring so intermediate products stay small.
    int cap = max_degree;
    if (p.ring()->truncation()) cap = std::min(cap, *p.ring()->truncation());
    auto work = WeightedRing::make(p.ring()->variables(), p.ring()->weights(), cap);

    SparsePolynomial q = (p * (Rational(1) / c0)).reindex_to(work);
    q -= SparsePolynomial::constant(work, Rational(1));  // strictly positive degree
    SparsePolynomial acc = SparsePolynomial::constant(work, Rational(1));
    SparsePolynomial pk = SparsePolynomial::constant(work, Rational(1));
    for (int k = 1; k <= cap; ++k) {
        pk = pk * (-q);
        if (pk.is_zero()) break;
        acc += pk;
    }
    return (acc * (Rational(1) / c0)).reindex_to(p.ring());
}

std::pair<SparsePolynomial, SparsePolynomial> divmod_univariate(
    const SparsePolynomial& p, const std::string& var, const SparsePolynomial& modulus) {
    require_same_ring(p, modulus);
    int dm = modulus.degree_in(var);
    if (dm < 0) throw std::domain_error("divmod: zero modulus");
    SparsePolynomial lead = coefficient_of(modulus, var, dm);
    Rational lc = lead.constant_term();
    if (lead.term_count() != 1 || lc.is_zero() || lead != SparsePolynomial::constant(p.ring(), lc))
        throw std::domain_error("divmod: modulus is not monic in '" + var +
                                "' (leading coefficient must be a nonzero constant)");
    SparsePolynomial monic = modulus / lc;

    int vi = p.ring()->index_of(var);
    SparsePolynomial q(p.ring());
    SparsePolynomial r = p;
    for (int d = r.degree_in(var); d >= dm; d = r.degree_in(var)) {
        SparsePolynomial head = coefficient_of(r, var, d);
        // head * var^(d-dm)
        Exponents shift(p.ring()->size(), 0);
        shift[vi] = d - dm;
        SparsePolynomial t = head * SparsePolynomial::monomial(p.ring(), shift, Rational(1));
        q += t;
        r -= t * monic;
    }
    return {q / lc, r};
}

SparsePolynomial coefficient_of(const SparsePolynomial& p, const std::string& var, int power) {
    int vi = p.ring()->index_of(var);
    if (vi < 0) throw std::invalid_argument("no variable '" + var + "' in ring");
    if (power < 0) throw std::invalid_argument("coefficient_of: negative power");
    SparsePolynomial r(p.ring());
    for (const auto& [e, c] : p.terms()) {
        if (e[vi] != power) continue;
        Exponents f = e;
        f[vi] = 0;
        r.add_term(f, c);
    }
    return r;
}

SparsePolynomial weighted_part(const SparsePolynomial& p, int degree) {
    SparsePolynomial r(p.ring());
    for (const auto& [e, c] : p.terms())
        if (p.ring()->weighted_degree(e) == degree) r.add_term(e, c);
    return r;
}

std::string human_str(const SparsePolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational a = c.abs();
        if (first) {
            if (c.is_negative()) out << "-";
            first = false;
        } else {
            out << (c.is_negative() ? " - " : " + ");
        }
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            mono += p.ring()->variables()[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out << a.str();
        else if (a.is_one())
            out << mono;
        else
            out << a.str() << mono;
    }
    return out.str();
}

SparsePolynomial truncate_var_power(const SparsePolynomial& p, const std::string& var,
                                    int max_power) {
    int vi = p.ring()->index_of(var);
    if (vi < 0) throw std::invalid_argument("no variable '" + var + "' in ring");
    SparsePolynomial r(p.ring());
    for (const auto& [e, c] : p.terms())
        if (e[vi] <= max_power) r.add_term(e, c);
    return r;
}

}  // namespace nodal
