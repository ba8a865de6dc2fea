#include "nodal/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace nodal {

SetPartition::SetPartition(int r, std::vector<std::vector<int>> blocks)
    : r_(r), blocks_(std::move(blocks)) {
    std::vector<bool> seen(r + 1, false);
    int total = 0;
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > r || seen[x])
                throw std::invalid_argument("SetPartition: blocks must partition 1..r");
            seen[x] = true;
            ++total;
        }
    }
    if (total != r) throw std::invalid_argument("SetPartition: blocks must cover 1..r");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::vector<int> SetPartition::profile() const {
    std::vector<int> s(r_ + 1, 0);
    for (const auto& b : blocks_) ++s[b.size()];
    return s;
}

std::string SetPartition::str() const {
    std::string out;
    for (const auto& b : blocks_) {
        if (!out.empty()) out += "|";
        for (int x : b) out += std::to_string(x);
    }
    return out;
}

namespace partitions {

std::vector<SetPartition> all_partitions(int r) {
    if (r < 1) throw std::invalid_argument("all_partitions: r must be >= 1");
    if (r > 10) throw std::invalid_argument("all_partitions: r > 10 exceeds the resource guard");
    std::vector<SetPartition> out;
    // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
    std::vector<int> a(r, 0);
    auto rec = [&](auto&& self, int i, int maxv) -> void {
        if (i == r) {
            int k = maxv + 1;
            std::vector<std::vector<int>> blocks(k);
            for (int j = 0; j < r; ++j) blocks[a[j]].push_back(j + 1);
            out.emplace_back(r, std::move(blocks));
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            a[i] = v;
            self(self, i + 1, std::max(maxv, v));
        }
    };
    a[0] = 0;
    rec(rec, 1, 0);
    return out;
}

bool refines(const SetPartition& p1, const SetPartition& p2) {
    if (p1.ground_size() != p2.ground_size())
        throw std::invalid_argument("refines: ground sets differ");
    std::vector<int> owner(p1.ground_size() + 1, -1);
    for (size_t j = 0; j < p2.blocks().size(); ++j)
        for (int x : p2.blocks()[j]) owner[x] = static_cast<int>(j);
    for (const auto& b : p1.blocks()) {
        int o = owner[b.front()];
        for (int x : b)
            if (owner[x] != o) return false;
    }
    return true;
}

Rational m_coefficient(const SetPartition& p) {
    Rational m(1);
    for (const auto& b : p.blocks()) {
        Rational f = Rational::factorial(b.size() - 1);
        if (b.size() % 2 == 0) f = -f;  // (-1)^{i-1}
        m *= f;
    }
    return m;
}

bool verify_moebius_recursion(int r) {
    if (r > 8) throw std::invalid_argument("verify_moebius_recursion: r > 8 exceeds the guard");
    auto parts = all_partitions(r);
    for (const auto& w : parts) {
        if (w.block_count() == r) continue;  // 0^ is the base case m = 1
        Rational sum(0);
        for (const auto& w2 : parts)
            if (refines(w2, w)) sum += m_coefficient(w2);
        if (!sum.is_zero()) return false;
    }
    Rational top = Rational::factorial(r - 1);
    if (r % 2 == 0) top = -top;
    SetPartition one(r, {[&] {
        std::vector<int> all(r);
        std::iota(all.begin(), all.end(), 1);
        return all;
    }()});
    return m_coefficient(one) == top;
}

long profile_count(int r, const std::vector<int>& profile) {
    long weight = 0;
    for (size_t i = 0; i < profile.size(); ++i) {
        if (profile[i] < 0) throw std::invalid_argument("profile_count: negative multiplicity");
        weight += static_cast<long>(i) * profile[i];
    }
    if (weight != r) throw std::invalid_argument("profile_count: profile does not sum to r");
    std::vector<int> padded(profile);
    padded.resize(r + 1, 0);
    long count = 0;
    for (const auto& p : all_partitions(r))
        if (p.profile() == padded) ++count;
    return count;
}

}  // namespace partitions
}  // namespace nodal
