#include "jetgroups/random.hpp"

#include <string>

#include "jetgroups/errors.hpp"

namespace jetgroups {

AlgebraElement random_element(const AlgebraPtr& algebra, Lcg& rng) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(algebra->dim()));
    for (auto& c : coeffs) c = rng.coefficient();
    return AlgebraElement(algebra, std::move(coeffs));
}

namespace {

RationalMatrix random_invertible(int n, Lcg& rng) {
    for (;;) {
        RationalMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = rng.range(-3, 3);
        try {
            mat_inverse(m);
            return m;
        } catch (const SingularMatrixError&) {
            // redraw
        }
    }
}

RationalMatrix random_unipotent_upper(int n, Lcg& rng) {
    RationalMatrix m = RationalMatrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m.at(i, j) = rng.coefficient();
    return m;
}

RationalMatrix random_rotation(Lcg& rng) {
    for (;;) {
        const int w = rng.range(-3, 3), x = rng.range(-3, 3), y = rng.range(-3, 3),
                  z = rng.range(-3, 3);
        const long n2 = static_cast<long>(w) * w + static_cast<long>(x) * x +
                        static_cast<long>(y) * y + static_cast<long>(z) * z;
        if (n2 == 0) continue;
        RationalMatrix r(3, 3);
        r.at(0, 0) = Rational(static_cast<long>(w) * w + x * x - y * y - z * z, n2);
        r.at(0, 1) = Rational(2L * (x * y - w * z), n2);
        r.at(0, 2) = Rational(2L * (x * z + w * y), n2);
        r.at(1, 0) = Rational(2L * (x * y + w * z), n2);
        r.at(1, 1) = Rational(static_cast<long>(w) * w - x * x + y * y - z * z, n2);
        r.at(1, 2) = Rational(2L * (y * z - w * x), n2);
        r.at(2, 0) = Rational(2L * (x * z - w * y), n2);
        r.at(2, 1) = Rational(2L * (y * z + w * x), n2);
        r.at(2, 2) = Rational(static_cast<long>(w) * w - x * x - y * y + z * z, n2);
        return r;
    }
}

} // namespace

GroupPoint random_group_point(const AlgebraPtr& algebra, Lcg& rng) {
    const std::string& name = algebra->name();
    auto non_identity = [&](auto draw) {
        for (;;) {
            const RationalMatrix m = draw();
            if (!m.is_identity()) return m;
        }
    };
    if (name == "sl2")
        return GroupPoint::matrix(algebra, non_identity([&] { return random_invertible(2, rng); }));
    if (name == "so3")
        return GroupPoint::matrix(algebra, non_identity([&] { return random_rotation(rng); }));
    if (name == "heis3")
        return GroupPoint::matrix(algebra,
                                  non_identity([&] { return random_unipotent_upper(3, rng); }));
    if (name.rfind("nilpotent_upper(", 0) == 0 && algebra->kind() == AlgebraKind::matrix)
        return GroupPoint::matrix(algebra, non_identity([&] {
                                      return random_unipotent_upper(algebra->basis()[0].rows(), rng);
                                  }));
    if (name.rfind("abelian(", 0) == 0)
        return GroupPoint::automorphism(algebra, non_identity([&] {
                                            return random_invertible(algebra->dim(), rng);
                                        }));
    return GroupPoint::identity();
}

JetElement random_jet(const AlgebraPtr& algebra, int k, Side side, Lcg& rng, bool with_group) {
    std::vector<AlgebraElement> x;
    x.reserve(static_cast<std::size_t>(k));
    for (int n = 0; n < k; ++n) x.push_back(random_element(algebra, rng));
    GroupPoint g = GroupPoint::identity();
    if (with_group && !algebra->leibniz()) g = random_group_point(algebra, rng);
    return JetElement(algebra, k, side, std::move(g), std::move(x));
}

TangentElement random_tangent(const AlgebraPtr& algebra, int k, Side side, Lcg& rng,
                              bool with_group) {
    std::vector<AlgebraElement> comps;
    comps.reserve((std::size_t{1} << k) - 1);
    for (std::size_t i = 0; i < (std::size_t{1} << k) - 1; ++i)
        comps.push_back(random_element(algebra, rng));
    GroupPoint g = GroupPoint::identity();
    if (with_group && !algebra->leibniz()) g = random_group_point(algebra, rng);
    return TangentElement(algebra, k, side, std::move(g), std::move(comps));
}

JetAlgebraElement random_jet_algebra(const AlgebraPtr& algebra, int k, Lcg& rng) {
    std::vector<AlgebraElement> x;
    x.reserve(static_cast<std::size_t>(k));
    for (int n = 0; n < k; ++n) x.push_back(random_element(algebra, rng));
    return JetAlgebraElement(algebra, random_element(algebra, rng), std::move(x));
}

} // namespace jetgroups
