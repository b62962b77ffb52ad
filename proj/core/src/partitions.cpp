#include "jetgroups/partitions.hpp"

#include <algorithm>
#include <bit>

#include "jetgroups/errors.hpp"
#include "jetgroups/numbers.hpp"

namespace jetgroups {

namespace {

constexpr int kMaxElements = 16;     // mask width
constexpr int kEnumerationBound = 12;  // Bell(12) ~ 4.2M keeps exhaustion desk-scale

std::vector<int> mask_elements(std::uint16_t mask) {
    std::vector<int> out;
    for (int e = 1; e <= kMaxElements; ++e)
        if (mask & (1u << (e - 1))) out.push_back(e);
    return out;
}

} // namespace

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int v : parts)
        if (v < 1) throw InputError("composition: parts must be positive");
}

int Composition::sum() const {
    int s = 0;
    for (int v : parts) s += v;
    return s;
}

Partition Partition::from_masks(int n, std::vector<std::uint16_t> masks) {
    if (n < 1 || n > kMaxElements) throw InputError("partition: n out of range");
    std::uint16_t seen = 0;
    for (std::uint16_t m : masks) {
        if (m == 0) throw InputError("partition: empty block");
        if (m & seen) throw InputError("partition: blocks overlap");
        seen |= m;
    }
    const std::uint16_t full = static_cast<std::uint16_t>((1u << n) - 1);
    if (seen != full) throw InputError("partition: blocks do not cover {1..n}");
    // Ascending block-maximum order; disjointness makes this plain numeric order.
    std::sort(masks.begin(), masks.end());
    Partition p;
    p.n_ = n;
    p.masks_ = std::move(masks);
    return p;
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<std::uint16_t> masks;
    masks.reserve(blocks.size());
    for (const auto& b : blocks) {
        std::uint16_t m = 0;
        for (int e : b) {
            if (e < 1 || e > n) throw InputError("partition: element out of range");
            m = static_cast<std::uint16_t>(m | (1u << (e - 1)));
        }
        if (static_cast<int>(b.size()) != std::popcount(static_cast<unsigned>(m)))
            throw InputError("partition: repeated element in a block");
        masks.push_back(m);
    }
    return from_masks(n, std::move(masks));
}

std::vector<int> Partition::block(int r) const { return mask_elements(masks_.at(r)); }

int Partition::block_size(int r) const {
    return std::popcount(static_cast<unsigned>(masks_.at(r)));
}

Composition Partition::sizes() const {
    std::vector<int> s;
    s.reserve(masks_.size());
    for (std::uint16_t m : masks_) s.push_back(std::popcount(static_cast<unsigned>(m)));
    return Composition(std::move(s));
}

std::string Partition::str() const {
    std::string out;
    const bool commas = n_ > 9;
    for (std::size_t r = 0; r < masks_.size(); ++r) {
        if (r) out += '|';
        bool first = true;
        for (int e : mask_elements(masks_[r])) {
            if (!first && commas) out += ',';
            out += std::to_string(e);
            first = false;
        }
    }
    return out;
}

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
    if (n < 1 || n > kEnumerationBound) throw InputError("partitions: n out of range");
    // Restricted-growth assignment: element e joins block a[e] with
    // a[e] <= 1 + max(a[1..e-1]); every unordered partition appears once.
    std::vector<std::uint16_t> masks;
    auto recurse = [&](auto&& self, int e) -> void {
        if (e > n) {
            fn(Partition::from_masks(n, masks));
            return;
        }
        const std::uint16_t bit = static_cast<std::uint16_t>(1u << (e - 1));
        for (std::size_t b = 0; b < masks.size(); ++b) {
            masks[b] = static_cast<std::uint16_t>(masks[b] | bit);
            self(self, e + 1);
            masks[b] = static_cast<std::uint16_t>(masks[b] & ~bit);
        }
        masks.push_back(bit);
        self(self, e + 1);
        masks.pop_back();
    };
    recurse(recurse, 1);
}

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return a.str() < b.str(); });
    return out;
}

std::vector<Partition> partitions_with_sizes(int n, const Composition& c) {
    if (c.sum() != n) throw InputError("partitions_with_sizes: sizes do not sum to n");
    if (n < 1 || n > kEnumerationBound) throw InputError("partitions_with_sizes: n out of range");
    // Build right to left: the last block must contain the largest
    // remaining element, the rest of it is a free choice.
    std::vector<Partition> out;
    std::vector<std::uint16_t> blocks(c.parts.size());
    const std::uint16_t full = static_cast<std::uint16_t>((1u << n) - 1);

    auto choose = [&](auto&& self, int r, std::uint16_t avail) -> void {
        if (r < 0) {
            out.push_back(Partition::from_masks(n, blocks));
            return;
        }
        const int top = kMaxElements - std::countl_zero(static_cast<std::uint16_t>(avail));
        const std::uint16_t top_bit = static_cast<std::uint16_t>(1u << (top - 1));
        const std::uint16_t rest = static_cast<std::uint16_t>(avail & ~top_bit);
        const int want = c.parts[static_cast<std::size_t>(r)] - 1;
        // all size-`want` subsets of `rest`
        auto subsets = [&](auto&& sub, std::uint16_t pool, int need, std::uint16_t acc) -> void {
            if (need == 0) {
                blocks[static_cast<std::size_t>(r)] = static_cast<std::uint16_t>(acc | top_bit);
                self(self, r - 1, static_cast<std::uint16_t>(avail & ~blocks[static_cast<std::size_t>(r)]));
                return;
            }
            if (std::popcount(static_cast<unsigned>(pool)) < need) return;
            const std::uint16_t low = static_cast<std::uint16_t>(pool & (~pool + 1));
            sub(sub, static_cast<std::uint16_t>(pool & ~low), need - 1, static_cast<std::uint16_t>(acc | low));
            sub(sub, static_cast<std::uint16_t>(pool & ~low), need, acc);
        };
        subsets(subsets, rest, want, 0);
    };
    choose(choose, static_cast<int>(c.parts.size()) - 1, full);

    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return a.str() < b.str(); });
    return out;
}

Integer count_with_sizes(const Composition& c) {
    if (c.parts.empty()) throw InputError("count_with_sizes: empty composition");
    Integer n = 1;
    int prefix = c.parts[0];
    for (std::size_t r = 1; r < c.parts.size(); ++r) {
        prefix += c.parts[r];
        n *= binomial(prefix - 1, c.parts[r] - 1);
    }
    return n;
}

std::vector<Partition> derived_partitions(const Partition& p) {
    if (p.n() + 1 > kMaxElements) throw InputError("derived_partitions: n too large");
    std::vector<std::uint16_t> shifted;
    shifted.reserve(p.block_masks().size());
    for (std::uint16_t m : p.block_masks()) shifted.push_back(static_cast<std::uint16_t>(m << 1));

    std::vector<Partition> out;
    out.reserve(shifted.size() + 1);
    {
        std::vector<std::uint16_t> front = shifted;
        front.insert(front.begin(), 1);
        out.push_back(Partition::from_masks(p.n() + 1, std::move(front)));
    }
    for (std::size_t m = 0; m < shifted.size(); ++m) {
        std::vector<std::uint16_t> alt = shifted;
        alt[m] = static_cast<std::uint16_t>(alt[m] | 1u);
        out.push_back(Partition::from_masks(p.n() + 1, std::move(alt)));
    }
    return out;
}

Partition parent_partition(const Partition& p) {
    if (p.n() < 2) throw InputError("parent_partition: needs n >= 2");
    std::vector<std::uint16_t> masks;
    for (std::uint16_t m : p.block_masks()) {
        const std::uint16_t stripped = static_cast<std::uint16_t>(m & ~1u);
        if (stripped) masks.push_back(static_cast<std::uint16_t>(stripped >> 1));
    }
    return Partition::from_masks(p.n() - 1, std::move(masks));
}

void for_each_composition(int n, const std::function<void(const Composition&)>& fn) {
    if (n < 1) throw InputError("compositions: n must be positive");
    if (n > 30) throw InputError("compositions: n too large");
    const unsigned long cuts = 1ul << (n - 1);
    std::vector<int> parts;
    for (unsigned long s = 0; s < cuts; ++s) {
        parts.clear();
        int run = 1;
        for (int pos = 0; pos < n - 1; ++pos) {
            if (s & (1ul << pos)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        fn(Composition(parts));
    }
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    for_each_composition(n, [&](const Composition& c) { out.push_back(c); });
    return out;
}

} // namespace jetgroups
