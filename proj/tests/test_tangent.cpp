#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>

#include "jetgroups/errors.hpp"
#include "jetgroups/random.hpp"
#include "jetgroups/tangent.hpp"

using namespace jetgroups;

namespace {

MultiIndex mi(const char* s, int k) { return parse_multi_index(s, k); }

} // namespace

TEST_CASE("multi-index strings") {
    CHECK(multi_index_str(mi("13", 3)) == "13");
    CHECK(multi_index_str(mi("123", 3)) == "123");
    CHECK_THROWS_AS(parse_multi_index("31", 3), InputError);
    CHECK_THROWS_AS(parse_multi_index("14", 3), InputError);
    CHECK_THROWS_AS(parse_multi_index("", 3), InputError);
}

TEST_CASE("T^3 multiplication matches the expanded formulas") {
    for (const char* name : {"sl2", "heis3", "leibniz2"}) {
        const AlgebraPtr alg = AlgebraSpec::builtin(name);
        Lcg rng(151);
        for (int t = 0; t < 10; ++t) {
            const TangentElement a = random_tangent(alg, 3, Side::right, rng, false);
            const TangentElement b = random_tangent(alg, 3, Side::right, rng, false);
            const TangentElement z = tangent_multiply(a, b);
            auto at = [&](const TangentElement& e, const char* key) {
                return e.component(mi(key, 3));
            };
            CHECK(at(z, "1") == at(a, "1") + at(b, "1"));
            CHECK(at(z, "2") == at(a, "2") + at(b, "2"));
            CHECK(at(z, "3") == at(a, "3") + at(b, "3"));
            CHECK(at(z, "12") == at(a, "12") + at(b, "12") + bracket(at(a, "1"), at(b, "2")));
            CHECK(at(z, "13") == at(a, "13") + at(b, "13") + bracket(at(a, "1"), at(b, "3")));
            CHECK(at(z, "23") == at(a, "23") + at(b, "23") + bracket(at(a, "2"), at(b, "3")));
            CHECK(at(z, "123") == at(a, "123") + at(b, "123") + bracket(at(a, "1"), at(b, "23")) +
                                      bracket(at(a, "2"), at(b, "13")) +
                                      bracket(at(a, "12"), at(b, "3")) +
                                      bracket(at(a, "2"), bracket(at(a, "1"), at(b, "3"))));
        }
    }
}

TEST_CASE("frozen heis3 tangent product at k = 2") {
    const AlgebraPtr h = AlgebraSpec::builtin("heis3");
    const AlgebraElement e1 = AlgebraElement::basis(h, 0);
    const AlgebraElement e2 = AlgebraElement::basis(h, 1);
    const AlgebraElement e3 = AlgebraElement::basis(h, 2);
    const AlgebraElement zero = AlgebraElement::zero(h);
    // a = (e1 at {1}), b = (e2 at {2}): z_12 = [e1, e2] = e3
    const TangentElement a = TangentElement::pure(h, 2, Side::right, mi("1", 2), e1);
    const TangentElement b = TangentElement::pure(h, 2, Side::right, mi("2", 2), e2);
    const TangentElement z = tangent_multiply(a, b);
    CHECK(z.component(mi("1", 2)) == e1);
    CHECK(z.component(mi("2", 2)) == e2);
    CHECK(z.component(mi("12", 2)) == e3);
    // reversed order: neither operand supplies the {1} and {2} slots the chain needs
    CHECK(tangent_multiply(b, a).component(mi("12", 2)) == zero);
}

TEST_CASE("identity and inverse") {
    const AlgebraPtr alg = AlgebraSpec::builtin("heis3");
    Lcg rng(157);

    // k = 1: (e, x)^-1 = (e, -x)
    const AlgebraElement x = random_element(alg, rng);
    const TangentElement t1 = TangentElement::pure(alg, 1, Side::right, 1, x);
    CHECK(tangent_inverse(t1).component(1) == -x);

    // k = 2 fiber: w_12 = -x_12 + [x_1, x_2]
    for (int t = 0; t < 10; ++t) {
        const TangentElement a = random_tangent(alg, 2, Side::right, rng, false);
        const TangentElement w = tangent_inverse(a);
        CHECK(w.component(mi("1", 2)) == -a.component(mi("1", 2)));
        CHECK(w.component(mi("12", 2)) ==
              -a.component(mi("12", 2)) +
                  bracket(a.component(mi("1", 2)), a.component(mi("2", 2))));
    }

    // multiply-back with group parts, k = 3
    for (int t = 0; t < 10; ++t) {
        const TangentElement a = random_tangent(alg, 3, Side::right, rng);
        const TangentElement e = TangentElement::identity(alg, 3, Side::right);
        CHECK(tangent_multiply(a, tangent_inverse(a)) == e);
        CHECK(tangent_multiply(tangent_inverse(a), a) == e);
        CHECK(tangent_multiply(a, e) == a);
        CHECK(tangent_multiply(e, a) == a);
    }
}

TEST_CASE("group axioms on random elements, k <= 4") {
    Lcg rng(163);
    for (const char* name : {"sl2", "leibniz2"}) {
        const AlgebraPtr alg = AlgebraSpec::builtin(name);
        for (int k = 1; k <= 4; ++k)
            for (int t = 0; t < 10; ++t) {
                const TangentElement a = random_tangent(alg, k, Side::right, rng);
                const TangentElement b = random_tangent(alg, k, Side::right, rng);
                const TangentElement c = random_tangent(alg, k, Side::right, rng);
                CHECK(tangent_multiply(tangent_multiply(a, b), c) ==
                      tangent_multiply(a, tangent_multiply(b, c)));
            }
    }
}

TEST_CASE("left trivialization first-order law") {
    const AlgebraPtr alg = AlgebraSpec::builtin("sl2");
    Lcg rng(167);
    for (int t = 0; t < 10; ++t) {
        const TangentElement a = random_tangent(alg, 1, Side::left, rng);
        const TangentElement b = random_tangent(alg, 1, Side::left, rng);
        const TangentElement z = tangent_multiply(a, b);
        CHECK(z.component(1) ==
              b.component(1) + adjoint(b.group().inverse(), a.component(1)));
        const TangentElement w = tangent_inverse(a);
        CHECK(w.component(1) == -adjoint(a.group(), a.component(1)));
        CHECK(tangent_multiply(a, w) == TangentElement::identity(alg, 1, Side::left));
    }
}

TEST_CASE("per-index formula transports the full-index formula") {
    // z_alpha computed inside T^kG equals the top component of the product
    // in T^nG built from the components living inside alpha.
    const AlgebraPtr alg = AlgebraSpec::builtin("sl2");
    Lcg rng(173);
    const int k = 4;
    for (int t = 0; t < 5; ++t) {
        const TangentElement a = random_tangent(alg, k, Side::right, rng);
        const TangentElement b = random_tangent(alg, k, Side::right, rng);
        const TangentElement z = tangent_multiply(a, b);
        for (MultiIndex alpha = 1; alpha <= a.full_mask(); ++alpha) {
            const int n = std::popcount(alpha);
            std::vector<int> phi;
            for (int e = 1; e <= k; ++e)
                if (alpha & (MultiIndex{1} << (e - 1))) phi.push_back(e);
            auto restrict_to = [&](const TangentElement& src) {
                std::vector<AlgebraElement> comps;
                for (MultiIndex s = 1; s < (MultiIndex{1} << n); ++s) {
                    MultiIndex image = 0;
                    for (int bit = 0; bit < n; ++bit)
                        if (s & (MultiIndex{1} << bit))
                            image |= MultiIndex{1} << (phi[static_cast<std::size_t>(bit)] - 1);
                    comps.push_back(src.component(image));
                }
                return TangentElement(alg, n, Side::right, src.group(), std::move(comps));
            };
            const TangentElement za = tangent_multiply(restrict_to(a), restrict_to(b));
            CHECK(za.component((MultiIndex{1} << n) - 1) == z.component(alpha));
        }
    }
}

TEST_CASE("permutation action") {
    const AlgebraPtr alg = AlgebraSpec::builtin("heis3");
    Lcg rng(179);

    const TangentElement a2 = random_tangent(alg, 2, Side::right, rng);
    CHECK(permute(Permutation::identity(2), a2) == a2);
    const Permutation swap12({2, 1});
    const TangentElement swapped = permute(swap12, a2);
    CHECK(swapped.component(mi("1", 2)) == a2.component(mi("2", 2)));
    CHECK(swapped.component(mi("2", 2)) == a2.component(mi("1", 2)));
    CHECK(swapped.component(mi("12", 2)) == a2.component(mi("12", 2)));

    // left action: (sigma tau) . a = sigma . (tau . a), exhaustively for k = 3
    const TangentElement a3 = random_tangent(alg, 3, Side::right, rng);
    std::vector<Permutation> s3;
    std::vector<int> image{1, 2, 3};
    do {
        s3.push_back(Permutation(image));
    } while (std::next_permutation(image.begin(), image.end()));
    for (const auto& s : s3)
        for (const auto& t : s3)
            CHECK(permute(compose(s, t), a3) == permute(s, permute(t, a3)));

    CHECK_THROWS_AS(permute(swap12, a3), InputError);
    CHECK_THROWS_AS(Permutation({1, 1, 3}), InputError);
}

TEST_CASE("symmetry detection") {
    const AlgebraPtr alg = AlgebraSpec::builtin("sl2");
    Lcg rng(181);

    const JetElement j = random_jet(alg, 3, Side::right, rng);
    CHECK(is_symmetric(embed_jet(j)));

    const AlgebraElement x = random_element(alg, rng);
    const AlgebraElement y = random_element(alg, rng);
    REQUIRE(x != y);
    std::vector<AlgebraElement> comps{x, y, AlgebraElement::zero(alg)};
    const TangentElement asym(alg, 2, Side::right, GroupPoint::identity(), comps);
    CHECK_FALSE(is_symmetric(asym));

    // symmetric iff fixed by every sigma in S_3, exhaustively
    std::vector<Permutation> s3;
    std::vector<int> image{1, 2, 3};
    do {
        s3.push_back(Permutation(image));
    } while (std::next_permutation(image.begin(), image.end()));
    for (int t = 0; t < 10; ++t) {
        const TangentElement a = t % 2 == 0
                                     ? embed_jet(random_jet(alg, 3, Side::right, rng))
                                     : random_tangent(alg, 3, Side::right, rng);
        bool fixed = true;
        for (const auto& s : s3) fixed = fixed && permute(s, a) == a;
        CHECK(fixed == is_symmetric(a));
    }
}

TEST_CASE("embedding J^kG as the fixed-point subgroup") {
    const AlgebraPtr alg = AlgebraSpec::builtin("sl2");
    Lcg rng(191);
    CHECK(embed_jet(JetElement::identity(alg, 3, Side::right)) ==
          TangentElement::identity(alg, 3, Side::right));

    for (int t = 0; t < 10; ++t) {
        const JetElement a = random_jet(alg, 3, Side::right, rng);
        const JetElement b = random_jet(alg, 3, Side::right, rng);
        CHECK(project_jet(embed_jet(a)) == a);
        CHECK(tangent_multiply(embed_jet(a), embed_jet(b)) == embed_jet(jet_multiply(a, b)));
        CHECK(tangent_inverse(embed_jet(a)) == embed_jet(jet_inverse(a)));
    }

    const TangentElement asym = random_tangent(alg, 3, Side::right, rng);
    if (!is_symmetric(asym)) CHECK_THROWS_AS(project_jet(asym), InputError);
}

TEST_CASE("pure factorization order and fold-back") {
    const AlgebraPtr alg = AlgebraSpec::builtin("heis3");
    Lcg rng(193);

    // k = 3 order: 123, 23, 13, 3, 12, 2, 1
    const TangentElement a = random_tangent(alg, 3, Side::right, rng, false);
    const auto factors = factor_pure(a);
    REQUIRE(factors.size() == 7);
    const char* expected[] = {"123", "23", "13", "3", "12", "2", "1"};
    for (std::size_t i = 0; i < 7; ++i) {
        const MultiIndex m = mi(expected[i], 3);
        CHECK(factors[i].component(m) == a.component(m));
        for (MultiIndex other = 1; other <= a.full_mask(); ++other)
            if (other != m) CHECK(factors[i].component(other).is_zero());
    }

    // k = 1: a single factor
    CHECK(factor_pure(random_tangent(alg, 1, Side::right, rng, false)).size() == 1);

    // k = 4: 15 factors whose ordered product reproduces the element
    const TangentElement b = random_tangent(alg, 4, Side::right, rng, false);
    const auto bf = factor_pure(b);
    REQUIRE(bf.size() == 15);
    TangentElement fold = bf[0];
    for (std::size_t i = 1; i < bf.size(); ++i) fold = tangent_multiply(fold, bf[i]);
    CHECK(fold == b);

    // a group part contributes one trailing factor
    const TangentElement c = random_tangent(alg, 2, Side::right, rng, true);
    if (!c.group().is_identity()) {
        const auto cf = factor_pure(c);
        REQUIRE(cf.size() == 4);
        CHECK(cf.back().group() == c.group());
        for (MultiIndex m = 1; m <= c.full_mask(); ++m)
            CHECK(cf.back().component(m).is_zero());
    }

    const TangentElement left = random_tangent(alg, 2, Side::left, rng, false);
    CHECK_THROWS_AS(factor_pure(left), InputError);
}

TEST_CASE("tangent operand validation") {
    const AlgebraPtr a = AlgebraSpec::builtin("sl2");
    const AlgebraPtr b = AlgebraSpec::builtin("so3");
    Lcg rng(197);
    const TangentElement x = random_tangent(a, 2, Side::right, rng);
    CHECK_THROWS_AS(tangent_multiply(x, random_tangent(a, 3, Side::right, rng)), InputError);
    CHECK_THROWS_AS(tangent_multiply(x, random_tangent(a, 2, Side::left, rng)), InputError);
    CHECK_THROWS_AS(tangent_multiply(x, random_tangent(b, 2, Side::right, rng)), InputError);
    CHECK_THROWS_AS(TangentElement(a, 2, Side::right, GroupPoint::identity(),
                                   {AlgebraElement::zero(a)}),
                    InputError);
}
