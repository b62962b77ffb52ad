#pragma once

#include <vector>

#include "jetgroups/algebra.hpp"

namespace jetgroups {

enum class Side { right, left };

// The two equivalent evaluations of the partition sums: enumerate ordered
// partitions directly, or enumerate compositions and weight each chain by
// the count N_{(i_1,...,i_l)}. Compositions are the fast path and work for
// any order; the partition path is bounded by the enumeration limit.
enum class SumStrategy { compositions, partitions };

// A trivialized k-jet (g, x_1, ..., x_k) in G x g^k.
class JetElement {
public:
    JetElement(AlgebraPtr algebra, int k, Side side, GroupPoint g,
               std::vector<AlgebraElement> x);

    static JetElement identity(const AlgebraPtr& algebra, int k, Side side);
    static JetElement fiber(const AlgebraPtr& algebra, Side side,
                            std::vector<AlgebraElement> x);
    // Single nonzero component x_i.
    static JetElement pure(const AlgebraPtr& algebra, int k, Side side, int i,
                           const AlgebraElement& x);

    const AlgebraPtr& algebra() const { return algebra_; }
    int k() const { return k_; }
    Side side() const { return side_; }
    const GroupPoint& group() const { return g_; }
    // x_n for 1 <= n <= k
    const AlgebraElement& component(int n) const { return x_.at(static_cast<std::size_t>(n) - 1); }
    const std::vector<AlgebraElement>& components() const { return x_; }

    friend bool operator==(const JetElement& a, const JetElement& b);
    friend bool operator!=(const JetElement& a, const JetElement& b) { return !(a == b); }

private:
    AlgebraPtr algebra_;
    int k_ = 0;
    Side side_ = Side::right;
    GroupPoint g_;
    std::vector<AlgebraElement> x_;
};

// Group multiplication in the chosen trivialization. Right side:
//   z_n = x_n + sum over ordered partitions of {1..n} of
//         ad_{x_{i_{l-1}}} ... ad_{x_{i_1}} Ad_g y_{i_l},
// left side the mirrored sum with sign (-1)^(l-1) and Ad_{h^-1}.
JetElement jet_multiply(const JetElement& a, const JetElement& b,
                        SumStrategy strategy = SumStrategy::compositions);

// Group inverse; right side:
//   w_n = sum (-1)^l Ad_{g^-1} ad_{x_{i_1}} ... ad_{x_{i_{l-1}}} x_{i_l}.
JetElement jet_inverse(const JetElement& a,
                       SumStrategy strategy = SumStrategy::compositions);

// Product of two pure fiber elements (e, x_i)(e, y_j). For i < j the
// closed form places ((ni+j-1)!/(n!(i!)^n(j-1)!)) ad_x^n y at slot ni+j;
// other index orders fall back to jet_multiply.
JetElement pure_product(const AlgebraPtr& algebra, int k, int i, const AlgebraElement& x,
                        int j, const AlgebraElement& y);

} // namespace jetgroups
