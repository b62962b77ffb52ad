#pragma once

#include <cstdint>

#include "jetgroups/cocycles.hpp"
#include "jetgroups/jet.hpp"
#include "jetgroups/tangent.hpp"

namespace jetgroups {

// Deterministic 64-bit linear congruential generator so that seeded runs
// replicate across implementations:
//   state <- 6364136223846793005 * state + 1442695040888963407  (mod 2^64),
// each draw reads the top 31 bits. Coefficients are sampled as p/q with
// |p| <= 9 and 1 <= q <= 4.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = 6364136223846793005ull * state_ + 1442695040888963407ull;
        return state_ >> 33;
    }

    // Uniform-ish integer in [lo, hi] (modulo reduction, documented above).
    int range(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational coefficient() {
        const int p = range(-9, 9);
        const int q = range(1, 4);
        return Rational(static_cast<long>(p), static_cast<long>(q));
    }

private:
    std::uint64_t state_;
};

AlgebraElement random_element(const AlgebraPtr& algebra, Lcg& rng);

// A non-identity rational group point when the algebra has a documented
// sampler (builtins), the identity otherwise. Samplers: sl2 draws an
// invertible integer 2x2 matrix; so3 a rotation from a rational
// quaternion; heis3 / nilpotent_upper(n) a unipotent upper-triangular
// matrix; abelian(n) an invertible automorphism matrix.
GroupPoint random_group_point(const AlgebraPtr& algebra, Lcg& rng);

JetElement random_jet(const AlgebraPtr& algebra, int k, Side side, Lcg& rng,
                      bool with_group = true);
TangentElement random_tangent(const AlgebraPtr& algebra, int k, Side side, Lcg& rng,
                              bool with_group = true);
JetAlgebraElement random_jet_algebra(const AlgebraPtr& algebra, int k, Lcg& rng);

} // namespace jetgroups
