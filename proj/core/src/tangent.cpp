#include "jetgroups/tangent.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <utility>

#include "jetgroups/errors.hpp"
#include "jetgroups/partitions.hpp"

namespace jetgroups {

namespace {

constexpr int kMaxTangentOrder = 12;  // partition enumeration bound

int popcount(MultiIndex m) { return std::popcount(m); }

// Elements of alpha in ascending order; phi[t] is the image of t+1 under
// the unique increasing bijection {1..n} -> alpha.
std::vector<int> increasing_bijection(MultiIndex alpha, int k) {
    std::vector<int> phi;
    for (int e = 1; e <= k; ++e)
        if (alpha & (MultiIndex{1} << (e - 1))) phi.push_back(e);
    return phi;
}

// Transports a block mask over {1..n} through phi to a mask over alpha.
MultiIndex transport(std::uint16_t block, const std::vector<int>& phi) {
    MultiIndex m = 0;
    for (std::size_t t = 0; t < phi.size(); ++t)
        if (block & (1u << t)) m |= MultiIndex{1} << (phi[t] - 1);
    return m;
}

} // namespace

std::string multi_index_str(MultiIndex m) {
    std::string s;
    for (int e = 1; e <= 32; ++e)
        if (m & (MultiIndex{1} << (e - 1))) s += std::to_string(e);
    return s;
}

MultiIndex parse_multi_index(const std::string& s, int k) {
    if (s.empty()) throw InputError("multi-index: empty");
    MultiIndex m = 0;
    int last = 0;
    for (char ch : s) {
        if (ch < '1' || ch > '9') throw InputError("multi-index: bad character in \"" + s + "\"");
        const int e = ch - '0';
        if (e <= last) throw InputError("multi-index: digits must ascend in \"" + s + "\"");
        if (e > k) throw InputError("multi-index: element exceeds k in \"" + s + "\"");
        m |= MultiIndex{1} << (e - 1);
        last = e;
    }
    return m;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int k = static_cast<int>(image_.size());
    if (k < 1) throw InputError("permutation: empty image");
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (int v : image_) {
        if (v < 1 || v > k || seen[static_cast<std::size_t>(v) - 1])
            throw InputError("permutation: image is not a bijection");
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
}

Permutation Permutation::identity(int k) {
    std::vector<int> image(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) image[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(image));
}

MultiIndex Permutation::apply(MultiIndex m) const {
    MultiIndex out = 0;
    for (int e = 1; e <= k(); ++e)
        if (m & (MultiIndex{1} << (e - 1))) out |= MultiIndex{1} << (apply(e) - 1);
    return out;
}

Permutation compose(const Permutation& s, const Permutation& t) {
    if (s.k() != t.k()) throw InputError("permutation: sizes differ");
    std::vector<int> image(static_cast<std::size_t>(s.k()));
    for (int e = 1; e <= s.k(); ++e) image[static_cast<std::size_t>(e) - 1] = s.apply(t.apply(e));
    return Permutation(std::move(image));
}

TangentElement::TangentElement(AlgebraPtr algebra, int k, Side side, GroupPoint g,
                               std::vector<AlgebraElement> components)
    : algebra_(std::move(algebra)), k_(k), side_(side), g_(std::move(g)),
      components_(std::move(components)) {
    if (k_ < 1 || k_ > kMaxTangentOrder) throw InputError("tangent: order out of range");
    if (components_.size() != (std::size_t{1} << k_) - 1)
        throw InputError("tangent: expected 2^k - 1 components");
    for (const auto& c : components_)
        if (c.algebra() != algebra_)
            throw InputError("tangent: components must live in the given algebra");
    if (algebra_->leibniz() && !g_.is_identity())
        throw InputError("tangent: Leibniz algebras only carry fiber elements (g = identity)");
}

TangentElement TangentElement::identity(const AlgebraPtr& algebra, int k, Side side) {
    return TangentElement(algebra, k, side, GroupPoint::identity(),
                          std::vector<AlgebraElement>((std::size_t{1} << k) - 1,
                                                      AlgebraElement::zero(algebra)));
}

TangentElement TangentElement::pure(const AlgebraPtr& algebra, int k, Side side, MultiIndex m,
                                    const AlgebraElement& x) {
    if (m < 1 || m > (MultiIndex{1} << k) - 1) throw InputError("tangent: multi-index out of range");
    std::vector<AlgebraElement> comps((std::size_t{1} << k) - 1, AlgebraElement::zero(algebra));
    comps[static_cast<std::size_t>(m) - 1] = x;
    return TangentElement(algebra, k, side, GroupPoint::identity(), std::move(comps));
}

bool operator==(const TangentElement& a, const TangentElement& b) {
    return a.algebra_ == b.algebra_ && a.k_ == b.k_ && a.side_ == b.side_ && a.g_ == b.g_ &&
           a.components_ == b.components_;
}

namespace {

void require_compatible(const TangentElement& a, const TangentElement& b) {
    if (a.algebra() != b.algebra()) throw InputError("tangent: operands in different algebras");
    if (a.k() != b.k()) throw InputError("tangent: operands of different order");
    if (a.side() != b.side()) throw InputError("tangent: operands in different trivializations");
}

const std::vector<Partition>& partitions_of(int n) {
    static std::mutex mutex;
    static std::vector<std::vector<Partition>> cache(kMaxTangentOrder + 1);
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[static_cast<std::size_t>(n)];
    if (slot.empty()) slot = enumerate_partitions(n);
    return slot;
}

} // namespace

TangentElement tangent_multiply(const TangentElement& a, const TangentElement& b) {
    require_compatible(a, b);
    const GroupPoint g = compose(a.group(), b.group());
    const GroupPoint hinv =
        a.side() == Side::left ? b.group().inverse() : GroupPoint::identity();
    std::vector<AlgebraElement> z;
    z.reserve(a.components().size());
    for (MultiIndex alpha = 1; alpha <= a.full_mask(); ++alpha) {
        const auto phi = increasing_bijection(alpha, a.k());
        AlgebraElement acc =
            a.side() == Side::right ? a.component(alpha) : b.component(alpha);
        for (const Partition& p : partitions_of(popcount(alpha))) {
            const int l = p.length();
            if (a.side() == Side::right) {
                // ad_{x_{lambda_{l-1}}} ... ad_{x_{lambda_1}} Ad_g y_{lambda_l}
                AlgebraElement t =
                    adjoint(a.group(), b.component(transport(p.block_masks()[static_cast<std::size_t>(l) - 1], phi)));
                for (int r = 0; r < l - 1; ++r)
                    t = bracket(a.component(transport(p.block_masks()[static_cast<std::size_t>(r)], phi)), t);
                acc += t;
            } else {
                // (-1)^(l-1) ad_{y_{lambda_{l-1}}} ... ad_{y_{lambda_1}} Ad_{h^-1} x_{lambda_l}
                AlgebraElement t =
                    adjoint(hinv, a.component(transport(p.block_masks()[static_cast<std::size_t>(l) - 1], phi)));
                for (int r = 0; r < l - 1; ++r)
                    t = bracket(b.component(transport(p.block_masks()[static_cast<std::size_t>(r)], phi)), t);
                acc += (l % 2 == 1) ? t : -t;
            }
        }
        z.push_back(std::move(acc));
    }
    return TangentElement(a.algebra(), a.k(), a.side(), g, std::move(z));
}

TangentElement tangent_inverse(const TangentElement& a) {
    const GroupPoint ginv = a.group().inverse();
    std::vector<AlgebraElement> w;
    w.reserve(a.components().size());
    for (MultiIndex alpha = 1; alpha <= a.full_mask(); ++alpha) {
        const auto phi = increasing_bijection(alpha, a.k());
        AlgebraElement acc = AlgebraElement::zero(a.algebra());
        for (const Partition& p : partitions_of(popcount(alpha))) {
            const int l = p.length();
            // ad_{x_{lambda_1}} ... ad_{x_{lambda_{l-1}}} x_{lambda_l}
            AlgebraElement t =
                a.component(transport(p.block_masks()[static_cast<std::size_t>(l) - 1], phi));
            for (int r = l - 2; r >= 0; --r)
                t = bracket(a.component(transport(p.block_masks()[static_cast<std::size_t>(r)], phi)), t);
            if (a.side() == Side::right) {
                t = adjoint(ginv, t);
                acc += (l % 2 == 0) ? t : -t;  // (-1)^l
            } else {
                acc -= adjoint(a.group(), t);
            }
        }
        w.push_back(std::move(acc));
    }
    return TangentElement(a.algebra(), a.k(), a.side(), ginv, std::move(w));
}

TangentElement permute(const Permutation& sigma, const TangentElement& a) {
    if (sigma.k() != a.k()) throw InputError("permute: permutation size does not match order");
    std::vector<AlgebraElement> comps(a.components().size(), AlgebraElement::zero(a.algebra()));
    for (MultiIndex alpha = 1; alpha <= a.full_mask(); ++alpha)
        comps[static_cast<std::size_t>(sigma.apply(alpha)) - 1] = a.component(alpha);
    return TangentElement(a.algebra(), a.k(), a.side(), a.group(), std::move(comps));
}

bool is_symmetric(const TangentElement& a) {
    for (int n = 1; n <= a.k(); ++n) {
        const MultiIndex prefix = (MultiIndex{1} << n) - 1;
        const AlgebraElement& ref = a.component(prefix);
        for (MultiIndex alpha = 1; alpha <= a.full_mask(); ++alpha)
            if (popcount(alpha) == n && a.component(alpha) != ref) return false;
    }
    return true;
}

TangentElement embed_jet(const JetElement& j) {
    if (j.k() > kMaxTangentOrder) throw InputError("embed_jet: order too large for T^kG");
    std::vector<AlgebraElement> comps;
    comps.reserve((std::size_t{1} << j.k()) - 1);
    for (MultiIndex alpha = 1; alpha <= (MultiIndex{1} << j.k()) - 1; ++alpha)
        comps.push_back(j.component(popcount(alpha)));
    return TangentElement(j.algebra(), j.k(), j.side(), j.group(), std::move(comps));
}

JetElement project_jet(const TangentElement& a) {
    if (!is_symmetric(a)) throw InputError("project_jet: element is not S_k-symmetric");
    std::vector<AlgebraElement> x;
    x.reserve(static_cast<std::size_t>(a.k()));
    for (int n = 1; n <= a.k(); ++n) x.push_back(a.component((MultiIndex{1} << n) - 1));
    return JetElement(a.algebra(), a.k(), a.side(), a.group(), std::move(x));
}

std::vector<TangentElement> factor_pure(const TangentElement& a) {
    if (a.side() != Side::right) throw InputError("factor_pure: right trivialization only");
    std::vector<TangentElement> factors;
    for (MultiIndex m = a.full_mask(); m >= 1; --m)
        factors.push_back(TangentElement::pure(a.algebra(), a.k(), a.side(), m, a.component(m)));
    if (!a.group().is_identity()) {
        // (g, comps) = (e, comps) * (g, 0): the trailing factor carries g.
        factors.push_back(TangentElement(a.algebra(), a.k(), a.side(), a.group(),
                                         std::vector<AlgebraElement>(a.components().size(),
                                                                     AlgebraElement::zero(a.algebra()))));
    }
    TangentElement fold = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) fold = tangent_multiply(fold, factors[i]);
    if (fold != a) throw std::logic_error("factor_pure: fold-back check failed");
    return factors;
}

} // namespace jetgroups
