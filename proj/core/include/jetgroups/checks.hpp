#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "jetgroups/algebra.hpp"

namespace jetgroups {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct CheckOptions {
    int trials = 50;          // randomized identity checks
    int triples = 100;        // group-axiom triples per order
    std::uint64_t seed = 1;
    int max_jet_order = 5;
    int max_tangent_order = 4;
    int max_oracle_order = 6;
    int max_cocycle_order = 5;
};

// Partition combinatorics: Bell counts, the product-of-binomials count
// formula against exhaustive enumeration, the derivation bijection, and
// canonical-form verification. Exact and deterministic.
std::vector<CheckResult> check_partitions();

// Associativity / identity / inverse for J^kG and T^kG on random
// elements, plus agreement of the two summation strategies.
std::vector<CheckResult> check_group_axioms(const AlgebraPtr& algebra, const CheckOptions& opts);

// Partition formulas against the truncated-Taylor curve model (matrix
// algebras only): multiply, inverse, trivialization round trips, and
// left/right conversion consistency.
std::vector<CheckResult> check_oracle(const AlgebraPtr& algebra, const CheckOptions& opts);

// Group and Lie-algebra cocycle identities and their consistency with the
// multiplication law.
std::vector<CheckResult> check_cocycles(const AlgebraPtr& algebra, const CheckOptions& opts);

// Frozen expression checks: the J_4 fiber product, the triple pure
// product, the T^3 component formulas, and the exp-curve components.
std::vector<CheckResult> check_golden(const CheckOptions& opts);

// Pure-element closed form and the T^k pure factorization.
std::vector<CheckResult> check_pure(const AlgebraPtr& algebra, const CheckOptions& opts);

// The S_k fixed-point subgroup and the jet embedding homomorphism.
std::vector<CheckResult> check_fixed_point(const AlgebraPtr& algebra, const CheckOptions& opts);

// Affineness of the fiber multiplication in its second argument.
std::vector<CheckResult> check_affine(const AlgebraPtr& algebra, const CheckOptions& opts);

// The default battery over the builtin algebras.
std::vector<CheckResult> check_all(const CheckOptions& opts);

bool all_passed(const std::vector<CheckResult>& results);
void print_results(std::ostream& os, const std::vector<CheckResult>& results);

} // namespace jetgroups
