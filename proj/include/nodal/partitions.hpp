#pragma once

#include <string>
#include <vector>

#include "nodal/rational.hpp"

namespace nodal {

/// A set partition of {1, ..., r}, blocks sorted by least element and each
/// block sorted ascending (canonical storage).
class SetPartition {
  public:
    SetPartition(int r, std::vector<std::vector<int>> blocks);

    int ground_size() const { return r_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }

    /// Number of blocks of size i, for i = 1..r (index 0 unused).
    std::vector<int> profile() const;

    /// "1|23|456"-style rendering.
    std::string str() const;

    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.r_ == b.r_ && a.blocks_ == b.blocks_;
    }

  private:
    int r_;
    std::vector<std::vector<int>> blocks_;
};

namespace partitions {

/// All Bell(r)-many set partitions of {1..r}, enumerated by restricted
/// growth strings (deterministic order). Guarded at r <= 10.
std::vector<SetPartition> all_partitions(int r);

/// True iff every block of p1 is contained in some block of p2.
bool refines(const SetPartition& p1, const SetPartition& p2);

/// Inclusion-exclusion coefficient m_w = prod_i ((-1)^{i-1}(i-1)!)^{s_i(w)},
/// the Moebius value mu(0^, w) of the partition lattice.
Rational m_coefficient(const SetPartition& p);

/// Checks, for every non-minimal partition w of an r-set, that the m
/// coefficients of the closed interval [0^, w] sum to zero, and that the
/// single-block value is (-1)^{r-1}(r-1)!.
bool verify_moebius_recursion(int r);

/// Number of partitions of {1..r} with the given block profile (s_i blocks
/// of size i), counted by brute enumeration. Equals the corresponding Bell
/// coefficient.
long profile_count(int r, const std::vector<int>& profile);

}  // namespace partitions
}  // namespace nodal
