#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "jetgroups/rational.hpp"

namespace jetgroups {

// Ordered block-size profile (i_1,...,i_l); every part is >= 1.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p);

    int sum() const;
    int length() const { return static_cast<int>(parts.size()); }

    friend bool operator==(const Composition&, const Composition&) = default;
};

// An anti-lexicographically ordered set partition of {1,...,n}. Blocks are
// stored as bitmasks (bit e-1 encodes element e) in ascending order of
// their maximum, which for disjoint sets coincides with ascending numeric
// mask order. Elements within a block read off in ascending order.
class Partition {
public:
    // Canonicalizes and validates: blocks nonempty, pairwise disjoint,
    // union {1..n}.
    static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
    static Partition from_masks(int n, std::vector<std::uint16_t> masks);

    int n() const { return n_; }
    int length() const { return static_cast<int>(masks_.size()); }
    const std::vector<std::uint16_t>& block_masks() const { return masks_; }
    std::vector<int> block(int r) const;  // 0-based block index, ascending elements
    int block_size(int r) const;
    Composition sizes() const;

    // "2|13" for n <= 9, comma form "2|1,13" beyond.
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) { return a.str() < b.str(); }

private:
    int n_ = 0;
    std::vector<std::uint16_t> masks_;
};

// All of P_n (1 <= n <= 12), canonical, sorted by serialized string.
std::vector<Partition> enumerate_partitions(int n);

// Streaming enumeration in generation order (not sorted); avoids
// materializing P_n for exhaustive scans.
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);

// All partitions in P_n whose block-size profile equals c; sum(c) must be n.
std::vector<Partition> partitions_with_sizes(int n, const Composition& c);

// The count N_{(i_1,...,i_l)} as a product of binomials; equals
// |partitions_with_sizes| for the same profile.
Integer count_with_sizes(const Composition& c);

// The l+1 partitions of {1,...,n+1} obtained by shifting every element up
// by one and adjoining 1: as a new front block (index 0 in the result
// list), or into block m (index m).
std::vector<Partition> derived_partitions(const Partition& p);

// Inverse of derivation: remove element 1, shift down, re-canonicalize.
Partition parent_partition(const Partition& p);

// All 2^(n-1) compositions of n, in a fixed deterministic order.
std::vector<Composition> compositions_of(int n);
void for_each_composition(int n, const std::function<void(const Composition&)>& fn);

} // namespace jetgroups
