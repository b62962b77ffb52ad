#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jetgroups/jet.hpp"

namespace jetgroups {

// Nonempty subset of {1,...,k} as a bitmask: bit e-1 encodes element e.
using MultiIndex = std::uint32_t;

std::string multi_index_str(MultiIndex m);           // ascending digits, "13"
MultiIndex parse_multi_index(const std::string& s, int k);

// Bijection of {1,...,k} stored as the image array (sigma(1),...,sigma(k)).
class Permutation {
public:
    explicit Permutation(std::vector<int> image);
    static Permutation identity(int k);

    int k() const { return static_cast<int>(image_.size()); }
    int apply(int e) const { return image_.at(static_cast<std::size_t>(e) - 1); }
    MultiIndex apply(MultiIndex m) const;
    friend Permutation compose(const Permutation& s, const Permutation& t);  // s after t
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> image_;
};

// Trivialized element of the k-th order tangent group: a group part and
// one algebra component per nonempty multi-index, stored densely.
class TangentElement {
public:
    TangentElement(AlgebraPtr algebra, int k, Side side, GroupPoint g,
                   std::vector<AlgebraElement> components);  // index m-1 holds x_m

    static TangentElement identity(const AlgebraPtr& algebra, int k, Side side);
    static TangentElement pure(const AlgebraPtr& algebra, int k, Side side, MultiIndex m,
                               const AlgebraElement& x);

    const AlgebraPtr& algebra() const { return algebra_; }
    int k() const { return k_; }
    Side side() const { return side_; }
    const GroupPoint& group() const { return g_; }
    MultiIndex full_mask() const { return (MultiIndex{1} << k_) - 1; }
    const AlgebraElement& component(MultiIndex m) const {
        return components_.at(static_cast<std::size_t>(m) - 1);
    }
    const std::vector<AlgebraElement>& components() const { return components_; }

    friend bool operator==(const TangentElement& a, const TangentElement& b);
    friend bool operator!=(const TangentElement& a, const TangentElement& b) { return !(a == b); }

private:
    AlgebraPtr algebra_;
    int k_ = 0;
    Side side_ = Side::right;
    GroupPoint g_;
    std::vector<AlgebraElement> components_;
};

// Per-index partition sums over P(alpha), transported from P_{|alpha|}
// through the unique increasing bijection {1..n} -> alpha.
TangentElement tangent_multiply(const TangentElement& a, const TangentElement& b);
TangentElement tangent_inverse(const TangentElement& a);

// sigma . (g, (x_alpha)) = (g, (x_alpha at slot sigma(alpha))).
TangentElement permute(const Permutation& sigma, const TangentElement& a);

// True iff components depend only on |alpha|.
bool is_symmetric(const TangentElement& a);

// The fixed-point embedding J^kG -> (T^kG)^{S_k} and its inverse.
TangentElement embed_jet(const JetElement& j);
JetElement project_jet(const TangentElement& a);

// Decomposition into pure elements, multi-indices in descending bitmask
// order (123, 23, 13, 3, 12, 2, 1 for k = 3); a non-identity group part
// is emitted as one trailing factor (g, 0). The fold-back product is
// checked before returning.
std::vector<TangentElement> factor_pure(const TangentElement& a);

} // namespace jetgroups
