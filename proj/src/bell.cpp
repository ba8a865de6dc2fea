#include "nodal/bell.hpp"

#include <mutex>
#include <unordered_map>

namespace nodal {
namespace bell {

RingPtr bell_ring(int r) {
    if (r < 0) r = 0;
    std::vector<std::string> vars;
    std::vector<int> weights;
    for (int i = 1; i <= r; ++i) {
        vars.push_back("X" + std::to_string(i));
        weights.push_back(i);
    }
    return WeightedRing::make(std::move(vars), std::move(weights));
}

SparsePolynomial complete_bell(int r) {
    if (r < 0) return SparsePolynomial::zero(bell_ring(0));

    static std::mutex mu;
    static std::vector<SparsePolynomial> cache;  // cache[s] = P_s over bell_ring(s)
    std::scoped_lock lock(mu);
    if (cache.empty()) cache.push_back(SparsePolynomial::constant(bell_ring(0), Rational(1)));
    while (static_cast<int>(cache.size()) <= r) {
        int s = static_cast<int>(cache.size());  // building P_s from P_0..P_{s-1}
        RingPtr ring = bell_ring(s);
        SparsePolynomial p(ring);
        for (int j = 0; j < s; ++j) {
            SparsePolynomial xv = SparsePolynomial::variable(ring, "X" + std::to_string(s - j));
            p += cache[j].reindex_to(ring) * xv * Rational::binomial(s - 1, j);
        }
        cache.push_back(p);
    }
    return cache[r];
}

SparsePolynomial partial_bell(int r, int k) {
    if (k < 0 || k > r) throw std::invalid_argument("partial_bell: need 0 <= k <= r");
    RingPtr ring = bell_ring(r);
    SparsePolynomial out(ring);
    if (r == 0) return SparsePolynomial::constant(ring, Rational(1));

    // Enumerate profiles (i_1, ..., i_{r-k+1}) with sum i_j = k and
    // sum j*i_j = r; each contributes the partition-count coefficient.
    const int maxpart = r - k + 1;
    std::vector<int> profile(maxpart + 1, 0);
    Rational rfact = Rational::factorial(r);
    auto emit = [&]() {
        Rational denom(1);
        for (int j = 1; j <= maxpart; ++j) {
            denom *= Rational::factorial(profile[j]);
            denom *= Rational::factorial(j).pow(profile[j]);
        }
        Exponents e(ring->size(), 0);
        for (int j = 1; j <= maxpart; ++j) e[j - 1] = profile[j];
        out.add_term(e, rfact / denom);
    };
    // Depth-first over part sizes.
    auto rec = [&](auto&& self, int j, int blocks_left, int weight_left) -> void {
        if (j > maxpart) {
            if (blocks_left == 0 && weight_left == 0) emit();
            return;
        }
        for (int c = 0; c <= blocks_left && c * j <= weight_left; ++c) {
            profile[j] = c;
            self(self, j + 1, blocks_left - c, weight_left - c * j);
        }
        profile[j] = 0;
    };
    rec(rec, 1, k, r);
    return out;
}

}  // namespace bell
}  // namespace nodal
