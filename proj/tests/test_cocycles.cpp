#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jetgroups/cocycles.hpp"
#include "jetgroups/errors.hpp"
#include "jetgroups/matrix.hpp"
#include "jetgroups/numbers.hpp"
#include "jetgroups/random.hpp"

using namespace jetgroups;

namespace {

// The s*t coefficient of the n-th component of the fiber product
// m(s*X, t*Y), extracted exactly: the product is linear in t and the
// chain of length l scales as s^(l-1), so sample s = 1..n-1 and solve.
AlgebraElement fiber_bilinear_part(int n, const std::vector<AlgebraElement>& xs,
                                   const std::vector<AlgebraElement>& ys,
                                   const AlgebraPtr& algebra) {
    auto znt = [&](const Rational& s) {
        std::vector<AlgebraElement> sx;
        for (const auto& x : xs) sx.push_back(s * x);
        const JetElement prod = jet_multiply(JetElement::fiber(algebra, Side::right, sx),
                                             JetElement::fiber(algebra, Side::right, ys));
        // strip the affine part: subtract s*x_n and y_n
        return prod.component(n) - s * xs[static_cast<std::size_t>(n) - 1] -
               ys[static_cast<std::size_t>(n) - 1];
    };
    const int d = n - 1;
    if (d == 0) return AlgebraElement::zero(algebra);
    if (d == 1) return znt(Rational(1));
    RationalMatrix vm(d, d);
    for (int s = 1; s <= d; ++s) {
        Rational p(1);
        for (int e = 1; e <= d; ++e) {
            p *= Rational(static_cast<long>(s));
            vm.at(s - 1, e - 1) = p;
        }
    }
    const RationalMatrix inv = mat_inverse(vm);
    AlgebraElement acc = AlgebraElement::zero(algebra);
    for (int s = 1; s <= d; ++s) acc += inv.at(0, s - 1) * znt(Rational(static_cast<long>(s)));
    return acc;
}

} // namespace

TEST_CASE("c_2((g,x),(h,y)) = ad_x Ad_g y") {
    const AlgebraPtr a = AlgebraSpec::builtin("sl2");
    Lcg rng(211);
    for (int t = 0; t < 20; ++t) {
        const JetElement x = random_jet(a, 1, Side::right, rng);
        const JetElement y = random_jet(a, 1, Side::right, rng);
        CHECK(group_cocycle(2, x, y) ==
              bracket(x.component(1), adjoint(x.group(), y.component(1))));
    }
}

TEST_CASE("c_k is normalized") {
    const AlgebraPtr a = AlgebraSpec::builtin("so3");
    Lcg rng(223);
    for (int k = 2; k <= 5; ++k) {
        const JetElement e = JetElement::identity(a, k - 1, Side::right);
        const JetElement x = random_jet(a, k - 1, Side::right, rng);
        CHECK(group_cocycle(k, x, e).is_zero());
        CHECK(group_cocycle(k, e, x).is_zero());
    }
}

TEST_CASE("c_3 on the fiber: 2[x1,y2] + [x2,y1] + [x1,[x1,y1]]") {
    const AlgebraPtr a = AlgebraSpec::builtin("sl2");
    Lcg rng(227);
    for (int t = 0; t < 20; ++t) {
        const JetElement x = random_jet(a, 2, Side::right, rng, false);
        const JetElement y = random_jet(a, 2, Side::right, rng, false);
        const AlgebraElement expected =
            Rational(2) * bracket(x.component(1), y.component(2)) +
            bracket(x.component(2), y.component(1)) +
            bracket(x.component(1), bracket(x.component(1), y.component(1)));
        CHECK(group_cocycle(3, x, y) == expected);
    }
}

TEST_CASE("sigma_k closed forms") {
    const AlgebraPtr a = AlgebraSpec::builtin("sl2");
    Lcg rng(229);
    for (int t = 0; t < 20; ++t) {
        const JetAlgebraElement x1 = random_jet_algebra(a, 1, rng);
        const JetAlgebraElement y1 = random_jet_algebra(a, 1, rng);
        CHECK(algebra_cocycle(2, x1, y1) ==
              Rational(2) * bracket(x1.component(1), y1.component(1)));

        const JetAlgebraElement x2 = random_jet_algebra(a, 2, rng);
        const JetAlgebraElement y2 = random_jet_algebra(a, 2, rng);
        CHECK(algebra_cocycle(3, x2, y2) ==
              Rational(3) * bracket(x2.component(1), y2.component(2)) +
                  Rational(3) * bracket(x2.component(2), y2.component(1)));
    }

    // antisymmetry of each pairing makes sigma_k(A, A) vanish
    for (int k = 2; k <= 5; ++k) {
        const JetAlgebraElement x = random_jet_algebra(a, k - 1, rng);
        CHECK(algebra_cocycle(k, x, x).is_zero());
    }
}

TEST_CASE("binomial symmetry identity behind sigma_k") {
    for (int k = 2; k <= 12; ++k)
        for (int i = 1; i <= k - 1; ++i)
            CHECK(binomial(k - 1, i) + binomial(k - 1, k - i) == binomial(k, i));
}

TEST_CASE("polynomial-model bracket") {
    const AlgebraPtr ab = AlgebraSpec::builtin("abelian(3)");
    Lcg rng(233);
    const JetAlgebraElement za = random_jet_algebra(ab, 3, rng);
    const JetAlgebraElement zb = random_jet_algebra(ab, 3, rng);
    CHECK(jet_algebra_bracket(za, zb) == JetAlgebraElement::zero(ab, 3));

    const AlgebraPtr a = AlgebraSpec::builtin("sl2");
    for (int t = 0; t < 10; ++t) {
        const JetAlgebraElement x = random_jet_algebra(a, 3, rng);
        const JetAlgebraElement y = random_jet_algebra(a, 3, rng);
        const JetAlgebraElement z = jet_algebra_bracket(x, y);
        CHECK(z.xi() == bracket(x.xi(), y.xi()));
        CHECK(z.component(1) == bracket(x.xi(), y.component(1)) +
                                    bracket(x.component(1), y.xi()));
        // Jacobi
        const JetAlgebraElement w = random_jet_algebra(a, 3, rng);
        auto add = [](const JetAlgebraElement& u, const JetAlgebraElement& v) {
            std::vector<AlgebraElement> comps;
            for (int n = 1; n <= u.k(); ++n) comps.push_back(u.component(n) + v.component(n));
            return JetAlgebraElement(u.algebra(), u.xi() + v.xi(), comps);
        };
        const JetAlgebraElement jac =
            add(add(jet_algebra_bracket(x, jet_algebra_bracket(y, w)),
                    jet_algebra_bracket(y, jet_algebra_bracket(w, x))),
                jet_algebra_bracket(w, jet_algebra_bracket(x, y)));
        CHECK(jac == JetAlgebraElement::zero(a, 3));
    }
}

TEST_CASE("bracket components match the polarized fiber product") {
    // component n of the polynomial-model bracket with xi = eta = 0 equals
    // the antisymmetrized s*t coefficient of the fiber multiplication
    const AlgebraPtr a = AlgebraSpec::builtin("so3");
    Lcg rng(239);
    const int k = 4;
    for (int t = 0; t < 5; ++t) {
        std::vector<AlgebraElement> xs, ys;
        for (int n = 0; n < k; ++n) {
            xs.push_back(random_element(a, rng));
            ys.push_back(random_element(a, rng));
        }
        const JetAlgebraElement xa(a, AlgebraElement::zero(a), xs);
        const JetAlgebraElement ya(a, AlgebraElement::zero(a), ys);
        const JetAlgebraElement br = jet_algebra_bracket(xa, ya);
        for (int n = 1; n <= k; ++n) {
            const AlgebraElement part = fiber_bilinear_part(n, xs, ys, a) -
                                        fiber_bilinear_part(n, ys, xs, a);
            CHECK(br.component(n) == part);
        }
    }
}

TEST_CASE("verification reports") {
    const AlgebraPtr ab = AlgebraSpec::builtin("abelian(2)");
    CHECK(verify_group_cocycle(ab, 3, 10, 5).passed);  // c_k vanishes identically

    const AlgebraPtr a = AlgebraSpec::builtin("sl2");
    CHECK(verify_group_cocycle(a, 3, 50, 5).passed);
    for (int k = 2; k <= 5; ++k) CHECK(verify_algebra_cocycle(a, k, 50, 11).passed);

    CHECK_THROWS_AS(verify_group_cocycle(a, 1, 10, 5), InputError);
    CHECK_THROWS_AS(verify_algebra_cocycle(AlgebraSpec::builtin("leibniz2"), 2, 10, 5),
                    InputError);
}

TEST_CASE("a perturbed cocycle violates the identity") {
    // c~(A,B) := c_3(A,B) + [x_1, y_1] breaks the 2-cocycle identity
    const AlgebraPtr a = AlgebraSpec::builtin("sl2");
    Lcg rng(241);
    auto mutated = [&](const JetElement& x, const JetElement& y) {
        return group_cocycle(3, x, y) + bracket(x.component(1), y.component(1));
    };
    bool violated = false;
    for (int t = 0; t < 20 && !violated; ++t) {
        const JetElement x = random_jet(a, 2, Side::right, rng);
        const JetElement y = random_jet(a, 2, Side::right, rng);
        const JetElement z = random_jet(a, 2, Side::right, rng);
        const AlgebraElement residual = adjoint(x.group(), mutated(y, z)) -
                                        mutated(jet_multiply(x, y), z) +
                                        mutated(x, jet_multiply(y, z)) - mutated(x, y);
        violated = violated || !residual.is_zero();
    }
    CHECK(violated);
}

TEST_CASE("polarization reproduces sigma_2 and sigma_k") {
    const AlgebraPtr a = AlgebraSpec::builtin("heis3");
    Lcg rng(251);
    for (int k = 2; k <= 5; ++k)
        for (int t = 0; t < 10; ++t) {
            const JetAlgebraElement x = random_jet_algebra(a, k - 1, rng);
            const JetAlgebraElement y = random_jet_algebra(a, k - 1, rng);
            CHECK(polarized_group_cocycle(k, x, y) == algebra_cocycle(k, x, y));
        }
}

TEST_CASE("cocycle input validation") {
    const AlgebraPtr a = AlgebraSpec::builtin("sl2");
    Lcg rng(257);
    const JetElement right = random_jet(a, 2, Side::right, rng);
    const JetElement left = random_jet(a, 2, Side::left, rng);
    CHECK_THROWS_AS(group_cocycle(3, right, left), InputError);
    CHECK_THROWS_AS(group_cocycle(4, right, right), InputError);  // order mismatch
    CHECK_THROWS_AS(group_cocycle(1, right, right), InputError);
    const JetAlgebraElement xa = random_jet_algebra(a, 2, rng);
    CHECK_THROWS_AS(algebra_cocycle(5, xa, xa), InputError);
}
