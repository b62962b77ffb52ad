#include "jetgroups/jet.hpp"

#include <utility>

#include "jetgroups/errors.hpp"
#include "jetgroups/numbers.hpp"
#include "jetgroups/partitions.hpp"

namespace jetgroups {

JetElement::JetElement(AlgebraPtr algebra, int k, Side side, GroupPoint g,
                       std::vector<AlgebraElement> x)
    : algebra_(std::move(algebra)), k_(k), side_(side), g_(std::move(g)), x_(std::move(x)) {
    if (k_ < 1) throw InputError("jet: order must be at least 1");
    if (x_.size() != static_cast<std::size_t>(k_))
        throw InputError("jet: expected k algebra components");
    for (const auto& c : x_)
        if (c.algebra() != algebra_)
            throw InputError("jet: components must live in the given algebra");
    if (algebra_->leibniz() && !g_.is_identity())
        throw InputError("jet: Leibniz algebras only carry fiber elements (g = identity)");
}

JetElement JetElement::identity(const AlgebraPtr& algebra, int k, Side side) {
    return JetElement(algebra, k, side, GroupPoint::identity(),
                      std::vector<AlgebraElement>(static_cast<std::size_t>(k),
                                                  AlgebraElement::zero(algebra)));
}

JetElement JetElement::fiber(const AlgebraPtr& algebra, Side side,
                             std::vector<AlgebraElement> x) {
    const int k = static_cast<int>(x.size());
    return JetElement(algebra, k, side, GroupPoint::identity(), std::move(x));
}

JetElement JetElement::pure(const AlgebraPtr& algebra, int k, Side side, int i,
                            const AlgebraElement& x) {
    if (i < 1 || i > k) throw InputError("jet: pure index out of range");
    std::vector<AlgebraElement> comps(static_cast<std::size_t>(k), AlgebraElement::zero(algebra));
    comps[static_cast<std::size_t>(i) - 1] = x;
    return JetElement(algebra, k, side, GroupPoint::identity(), std::move(comps));
}

bool operator==(const JetElement& a, const JetElement& b) {
    return a.algebra_ == b.algebra_ && a.k_ == b.k_ && a.side_ == b.side_ && a.g_ == b.g_ &&
           a.x_ == b.x_;
}

namespace {

void require_compatible(const JetElement& a, const JetElement& b) {
    if (a.algebra() != b.algebra()) throw InputError("jet: operands in different algebras");
    if (a.k() != b.k()) throw InputError("jet: operands of different order");
    if (a.side() != b.side()) throw InputError("jet: operands in different trivializations");
}

// One chain term of the right multiplication:
//   ad_{x_{i_{l-1}}} ... ad_{x_{i_1}} Ad_g y_{i_l}.
AlgebraElement mul_chain_right(const std::vector<int>& parts, const JetElement& a,
                               const GroupPoint& g, const JetElement& b) {
    const int l = static_cast<int>(parts.size());
    AlgebraElement t = adjoint(g, b.component(parts[static_cast<std::size_t>(l) - 1]));
    for (int r = 0; r < l - 1; ++r) t = bracket(a.component(parts[static_cast<std::size_t>(r)]), t);
    return t;
}

// Right inverse chain, applied exactly as printed (ad_{x_{i_1}} outermost):
//   Ad_{g^-1} ad_{x_{i_1}} ... ad_{x_{i_{l-1}}} x_{i_l}.
AlgebraElement inv_chain_right(const std::vector<int>& parts, const JetElement& a,
                               const GroupPoint& ginv) {
    const int l = static_cast<int>(parts.size());
    AlgebraElement t = a.component(parts[static_cast<std::size_t>(l) - 1]);
    for (int r = l - 2; r >= 0; --r) t = bracket(a.component(parts[static_cast<std::size_t>(r)]), t);
    return adjoint(ginv, t);
}

// Left multiplication chain: ad_{y_{i_{l-1}}} ... ad_{y_{i_1}} Ad_{h^-1} x_{i_l}.
AlgebraElement mul_chain_left(const std::vector<int>& parts, const JetElement& b,
                              const GroupPoint& hinv, const JetElement& a) {
    const int l = static_cast<int>(parts.size());
    AlgebraElement t = adjoint(hinv, a.component(parts[static_cast<std::size_t>(l) - 1]));
    for (int r = 0; r < l - 1; ++r) t = bracket(b.component(parts[static_cast<std::size_t>(r)]), t);
    return t;
}

// Left inverse chain: Ad_g ad_{x_{i_1}} ... ad_{x_{i_{l-1}}} x_{i_l}.
AlgebraElement inv_chain_left(const std::vector<int>& parts, const JetElement& a,
                              const GroupPoint& g) {
    const int l = static_cast<int>(parts.size());
    AlgebraElement t = a.component(parts[static_cast<std::size_t>(l) - 1]);
    for (int r = l - 2; r >= 0; --r) t = bracket(a.component(parts[static_cast<std::size_t>(r)]), t);
    return adjoint(g, t);
}

template <typename Chain>
AlgebraElement partition_sum(int n, SumStrategy strategy, const AlgebraPtr& algebra,
                             Chain&& chain) {
    AlgebraElement acc = AlgebraElement::zero(algebra);
    if (strategy == SumStrategy::compositions) {
        for_each_composition(n, [&](const Composition& c) {
            const Rational weight(count_with_sizes(c));
            acc += weight * chain(c.parts, static_cast<int>(c.parts.size()));
        });
    } else {
        for_each_partition(n, [&](const Partition& p) {
            acc += chain(p.sizes().parts, p.length());
        });
    }
    return acc;
}

} // namespace

JetElement jet_multiply(const JetElement& a, const JetElement& b, SumStrategy strategy) {
    require_compatible(a, b);
    const GroupPoint g = compose(a.group(), b.group());
    std::vector<AlgebraElement> z;
    z.reserve(static_cast<std::size_t>(a.k()));
    if (a.side() == Side::right) {
        for (int n = 1; n <= a.k(); ++n) {
            AlgebraElement zn = a.component(n);
            zn += partition_sum(n, strategy, a.algebra(), [&](const std::vector<int>& parts, int) {
                return mul_chain_right(parts, a, a.group(), b);
            });
            z.push_back(std::move(zn));
        }
    } else {
        const GroupPoint hinv = b.group().inverse();
        for (int n = 1; n <= a.k(); ++n) {
            AlgebraElement zn = b.component(n);
            zn += partition_sum(n, strategy, a.algebra(), [&](const std::vector<int>& parts, int l) {
                const AlgebraElement t = mul_chain_left(parts, b, hinv, a);
                return (l % 2 == 1) ? t : -t;  // sign (-1)^(l-1)
            });
            z.push_back(std::move(zn));
        }
    }
    return JetElement(a.algebra(), a.k(), a.side(), g, std::move(z));
}

JetElement jet_inverse(const JetElement& a, SumStrategy strategy) {
    const GroupPoint ginv = a.group().inverse();
    std::vector<AlgebraElement> w;
    w.reserve(static_cast<std::size_t>(a.k()));
    if (a.side() == Side::right) {
        for (int n = 1; n <= a.k(); ++n) {
            w.push_back(partition_sum(n, strategy, a.algebra(),
                                      [&](const std::vector<int>& parts, int l) {
                                          const AlgebraElement t = inv_chain_right(parts, a, ginv);
                                          return (l % 2 == 0) ? t : -t;  // sign (-1)^l
                                      }));
        }
    } else {
        for (int n = 1; n <= a.k(); ++n) {
            w.push_back(-partition_sum(n, strategy, a.algebra(),
                                       [&](const std::vector<int>& parts, int) {
                                           return inv_chain_left(parts, a, a.group());
                                       }));
        }
    }
    return JetElement(a.algebra(), a.k(), a.side(), ginv, std::move(w));
}

JetElement pure_product(const AlgebraPtr& algebra, int k, int i, const AlgebraElement& x,
                        int j, const AlgebraElement& y) {
    if (i < 1 || i > k || j < 1 || j > k) throw InputError("pure_product: index out of range");
    if (!(i < j)) {
        return jet_multiply(JetElement::pure(algebra, k, Side::right, i, x),
                            JetElement::pure(algebra, k, Side::right, j, y));
    }
    std::vector<AlgebraElement> comps(static_cast<std::size_t>(k), AlgebraElement::zero(algebra));
    comps[static_cast<std::size_t>(i) - 1] = x;
    AlgebraElement ad_power = y;  // ad_x^n y
    for (int n = 0; n * i + j <= k; ++n) {
        if (n > 0) ad_power = bracket(x, ad_power);
        // (ni+j-1)! / (n! (i!)^n (j-1)!)
        Integer denom = factorial(n) * factorial(j - 1);
        Integer ipow = 1;
        const Integer ifact = factorial(i);
        for (int t = 0; t < n; ++t) ipow *= ifact;
        denom *= ipow;
        const Rational coeff(factorial(n * i + j - 1), denom);
        comps[static_cast<std::size_t>(n * i + j) - 1] += coeff * ad_power;
    }
    return JetElement(algebra, k, Side::right, GroupPoint::identity(), std::move(comps));
}

} // namespace jetgroups
