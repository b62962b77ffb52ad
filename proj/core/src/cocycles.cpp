#include "jetgroups/cocycles.hpp"

#include <utility>

#include "jetgroups/errors.hpp"
#include "jetgroups/numbers.hpp"
#include "jetgroups/partitions.hpp"
#include "jetgroups/random.hpp"

namespace jetgroups {

JetAlgebraElement::JetAlgebraElement(AlgebraPtr algebra, AlgebraElement xi,
                                     std::vector<AlgebraElement> x)
    : algebra_(std::move(algebra)), xi_(std::move(xi)), x_(std::move(x)) {
    if (x_.empty()) throw InputError("jet algebra element: order must be at least 1");
    if (xi_.algebra() != algebra_) throw InputError("jet algebra element: xi in a different algebra");
    for (const auto& c : x_)
        if (c.algebra() != algebra_)
            throw InputError("jet algebra element: components in a different algebra");
}

JetAlgebraElement JetAlgebraElement::zero(const AlgebraPtr& algebra, int k) {
    if (k < 1) throw InputError("jet algebra element: order must be at least 1");
    return JetAlgebraElement(algebra, AlgebraElement::zero(algebra),
                             std::vector<AlgebraElement>(static_cast<std::size_t>(k),
                                                         AlgebraElement::zero(algebra)));
}

bool operator==(const JetAlgebraElement& a, const JetAlgebraElement& b) {
    return a.algebra_ == b.algebra_ && a.xi_ == b.xi_ && a.x_ == b.x_;
}

AlgebraElement group_cocycle(int k, const JetElement& a, const JetElement& b) {
    if (k < 2) throw InputError("group cocycle: k must be at least 2");
    if (a.side() != Side::right || b.side() != Side::right)
        throw InputError("group cocycle: right trivialization only");
    if (a.algebra() != b.algebra()) throw InputError("group cocycle: operands in different algebras");
    if (a.k() != k - 1 || b.k() != k - 1)
        throw InputError("group cocycle: operands must have order k-1");
    // Multiplication sum over compositions of k of length >= 2; every part
    // then stays below k, so only the order-(k-1) data enters.
    AlgebraElement acc = AlgebraElement::zero(a.algebra());
    for_each_composition(k, [&](const Composition& c) {
        const int l = c.length();
        if (l < 2) return;
        AlgebraElement t = adjoint(a.group(), b.component(c.parts[static_cast<std::size_t>(l) - 1]));
        for (int r = 0; r < l - 1; ++r) t = bracket(a.component(c.parts[static_cast<std::size_t>(r)]), t);
        acc += Rational(count_with_sizes(c)) * t;
    });
    return acc;
}

AlgebraElement algebra_cocycle(int k, const JetAlgebraElement& a, const JetAlgebraElement& b) {
    if (k < 2) throw InputError("algebra cocycle: k must be at least 2");
    if (a.algebra() != b.algebra())
        throw InputError("algebra cocycle: operands in different algebras");
    if (a.k() != k - 1 || b.k() != k - 1)
        throw InputError("algebra cocycle: operands must have order k-1");
    AlgebraElement acc = AlgebraElement::zero(a.algebra());
    for (int i = 1; i <= k - 1; ++i)
        acc += Rational(binomial(k, i)) * bracket(a.component(i), b.component(k - i));
    return acc;
}

JetAlgebraElement jet_algebra_bracket(const JetAlgebraElement& a, const JetAlgebraElement& b) {
    if (a.algebra() != b.algebra()) throw InputError("jet algebra bracket: different algebras");
    if (a.k() != b.k()) throw InputError("jet algebra bracket: different orders");
    auto comp = [&](const JetAlgebraElement& e, int n) -> const AlgebraElement& {
        return n == 0 ? e.xi() : e.component(n);
    };
    std::vector<AlgebraElement> out;
    out.reserve(static_cast<std::size_t>(a.k()));
    const AlgebraElement xi = bracket(a.xi(), b.xi());
    for (int n = 1; n <= a.k(); ++n) {
        AlgebraElement zn = AlgebraElement::zero(a.algebra());
        for (int i = 0; i <= n; ++i)
            zn += Rational(binomial(n, i)) * bracket(comp(a, i), comp(b, n - i));
        out.push_back(std::move(zn));
    }
    return JetAlgebraElement(a.algebra(), xi, std::move(out));
}

namespace {

// c_k applied to fiber lifts of scaled coordinates; the group direction
// contributes nothing to the bilinear part (it enters only through
// Ad_g y, paired with y).
AlgebraElement cocycle_on_scaled_fibers(int k, const JetAlgebraElement& a,
                                        const JetAlgebraElement& b, const Rational& s) {
    std::vector<AlgebraElement> xs, ys;
    xs.reserve(static_cast<std::size_t>(k) - 1);
    ys.reserve(static_cast<std::size_t>(k) - 1);
    for (int n = 1; n <= k - 1; ++n) {
        xs.push_back(s * a.component(n));
        ys.push_back(b.component(n));
    }
    return group_cocycle(k, JetElement::fiber(a.algebra(), Side::right, std::move(xs)),
                         JetElement::fiber(b.algebra(), Side::right, std::move(ys)));
}

// The s-linear coefficient of s -> c_k(s*A, B), via an exact Vandermonde
// solve on the sample points s = 1..k-1 (the polynomial has degree <= k-1
// and no constant term).
AlgebraElement mixed_derivative(int k, const JetAlgebraElement& a, const JetAlgebraElement& b) {
    const int d = k - 1;
    if (d == 1) return cocycle_on_scaled_fibers(k, a, b, Rational(1));
    RationalMatrix vandermonde(d, d);
    for (int s = 1; s <= d; ++s) {
        Rational power(1);
        for (int e = 1; e <= d; ++e) {
            power *= Rational(static_cast<long>(s));
            vandermonde.at(s - 1, e - 1) = power;
        }
    }
    const RationalMatrix inv = mat_inverse(vandermonde);
    AlgebraElement acc = AlgebraElement::zero(a.algebra());
    for (int s = 1; s <= d; ++s) {
        const Rational weight = inv.at(0, s - 1);
        if (weight.is_zero()) continue;
        acc += weight * cocycle_on_scaled_fibers(k, a, b, Rational(static_cast<long>(s)));
    }
    return acc;
}

} // namespace

AlgebraElement polarized_group_cocycle(int k, const JetAlgebraElement& a,
                                       const JetAlgebraElement& b) {
    if (k < 2) throw InputError("polarized cocycle: k must be at least 2");
    if (a.k() != k - 1 || b.k() != k - 1)
        throw InputError("polarized cocycle: operands must have order k-1");
    return mixed_derivative(k, a, b) - mixed_derivative(k, b, a);
}

Report verify_group_cocycle(const AlgebraPtr& algebra, int k, int trials, std::uint64_t seed) {
    if (k < 2) throw InputError("verify_group_cocycle: k must be at least 2");
    Lcg rng(seed);
    for (int t = 0; t < trials; ++t) {
        const JetElement a = random_jet(algebra, k - 1, Side::right, rng);
        const JetElement b = random_jet(algebra, k - 1, Side::right, rng);
        const JetElement c = random_jet(algebra, k - 1, Side::right, rng);

        // normalized cocycle
        const JetElement e = JetElement::identity(algebra, k - 1, Side::right);
        if (!group_cocycle(k, a, e).is_zero() || !group_cocycle(k, e, b).is_zero())
            return Report::fail("c_k is not normalized (trial " + std::to_string(t) + ")");

        // Ad_{g_a} c(b,c) - c(ab,c) + c(a,bc) - c(a,b) = 0
        const AlgebraElement residual = adjoint(a.group(), group_cocycle(k, b, c)) -
                                        group_cocycle(k, jet_multiply(a, b), c) +
                                        group_cocycle(k, a, jet_multiply(b, c)) -
                                        group_cocycle(k, a, b);
        if (!residual.is_zero())
            return Report::fail("2-cocycle identity fails at trial " + std::to_string(t) +
                                ", residual " + residual.str());

        // reconstruction from arbitrary lifts: z_k = x_k + Ad_g y_k + c_k
        const AlgebraElement xk = random_element(algebra, rng);
        const AlgebraElement yk = random_element(algebra, rng);
        std::vector<AlgebraElement> xs(a.components()), ys(b.components());
        xs.push_back(xk);
        ys.push_back(yk);
        const JetElement lift_a(algebra, k, Side::right, a.group(), std::move(xs));
        const JetElement lift_b(algebra, k, Side::right, b.group(), std::move(ys));
        const JetElement prod = jet_multiply(lift_a, lift_b);
        const JetElement quotient = jet_multiply(a, b);
        for (int n = 1; n <= k - 1; ++n)
            if (prod.component(n) != quotient.component(n))
                return Report::fail("lift product disagrees with quotient product at trial " +
                                    std::to_string(t));
        const AlgebraElement expected =
            xk + adjoint(a.group(), yk) + group_cocycle(k, a, b);
        if (prod.component(k) != expected)
            return Report::fail("z_k != x_k + Ad_g y_k + c_k at trial " + std::to_string(t));
    }
    return Report::ok();
}

Report verify_algebra_cocycle(const AlgebraPtr& algebra, int k, int trials, std::uint64_t seed) {
    if (k < 2) throw InputError("verify_algebra_cocycle: k must be at least 2");
    if (algebra->leibniz())
        throw InputError("verify_algebra_cocycle: needs a Lie algebra");
    Lcg rng(seed);
    for (int t = 0; t < trials; ++t) {
        const JetAlgebraElement a = random_jet_algebra(algebra, k - 1, rng);
        const JetAlgebraElement b = random_jet_algebra(algebra, k - 1, rng);
        const JetAlgebraElement c = random_jet_algebra(algebra, k - 1, rng);

        // sigma([a,b],c) - [xi_a, sigma(b,c)] + cyclic = 0
        auto term = [&](const JetAlgebraElement& u, const JetAlgebraElement& v,
                        const JetAlgebraElement& w) {
            return algebra_cocycle(k, jet_algebra_bracket(u, v), w) -
                   bracket(u.xi(), algebra_cocycle(k, v, w));
        };
        const AlgebraElement residual = term(a, b, c) + term(b, c, a) + term(c, a, b);
        if (!residual.is_zero())
            return Report::fail("sigma_k 2-cocycle identity fails at trial " + std::to_string(t) +
                                ", residual " + residual.str());

        // sigma_k is the antisymmetrized bilinear part of c_k
        if (polarized_group_cocycle(k, a, b) != algebra_cocycle(k, a, b))
            return Report::fail("sigma_k differs from the polarized part of c_k at trial " +
                                std::to_string(t));
    }
    return Report::ok();
}

} // namespace jetgroups
