#pragma once

#include <cstdint>
#include <vector>

#include "jetgroups/jet.hpp"
#include "jetgroups/report.hpp"

namespace jetgroups {

// Element (xi, x_1, ..., x_k) of the Lie algebra of J^kG, with xi the
// G-direction and x_n the fiber directions; the coordinates follow the
// curve convention x(t) = xi + sum t^n/n! x_n.
class JetAlgebraElement {
public:
    JetAlgebraElement(AlgebraPtr algebra, AlgebraElement xi, std::vector<AlgebraElement> x);

    static JetAlgebraElement zero(const AlgebraPtr& algebra, int k);

    const AlgebraPtr& algebra() const { return algebra_; }
    int k() const { return static_cast<int>(x_.size()); }
    const AlgebraElement& xi() const { return xi_; }
    const AlgebraElement& component(int n) const { return x_.at(static_cast<std::size_t>(n) - 1); }
    const std::vector<AlgebraElement>& components() const { return x_; }

    friend bool operator==(const JetAlgebraElement& a, const JetAlgebraElement& b);
    friend bool operator!=(const JetAlgebraElement& a, const JetAlgebraElement& b) { return !(a == b); }

private:
    AlgebraPtr algebra_;
    AlgebraElement xi_;
    std::vector<AlgebraElement> x_;
};

// The group 2-cocycle of the abelian extension g -> J^kG -> J^{k-1}G:
// the multiplication sum over ordered partitions of {1..k} minus the
// single-block term, evaluated on order-(k-1) right-trivialized jets.
AlgebraElement group_cocycle(int k, const JetElement& a, const JetElement& b);

// sigma_k((xi,x),(eta,y)) = sum_{i=1..k-1} binom(k,i) [x_i, y_{k-i}].
AlgebraElement algebra_cocycle(int k, const JetAlgebraElement& a, const JetAlgebraElement& b);

// Bracket of J^k g in the x(t) = xi + sum t^n/n! x_n coordinates:
// component n = sum_{i=0..n} binom(n,i) [x_i, y_{n-i}] with x_0 = xi.
JetAlgebraElement jet_algebra_bracket(const JetAlgebraElement& a, const JetAlgebraElement& b);

// The antisymmetrized bilinear part of c_k at the identity, extracted by
// exact scalar polarization (c_k is polynomial, so the s-linear
// coefficient of c_k(s*A, B) comes from a Vandermonde solve).
AlgebraElement polarized_group_cocycle(int k, const JetAlgebraElement& a,
                                       const JetAlgebraElement& b);

// Randomized exact verification of the normalized abelian-extension
// 2-cocycle identity for c_k with action Ad_g, plus the reconstruction
// z_k = x_k + Ad_g y_k + c_k against the J^k product of lifts.
Report verify_group_cocycle(const AlgebraPtr& algebra, int k, int trials, std::uint64_t seed);

// Randomized exact verification that sigma_k is a Lie-algebra 2-cocycle
// for the polynomial-model bracket with action rho(xi, x)v = [xi, v], and
// that it equals the polarized antisymmetrized bilinear part of c_k.
Report verify_algebra_cocycle(const AlgebraPtr& algebra, int k, int trials, std::uint64_t seed);

} // namespace jetgroups
