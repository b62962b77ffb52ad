#pragma once

#include "jetgroups/rational.hpp"

namespace jetgroups {

// Binomial coefficient; 0 when k < 0 or k > n. n must be nonnegative.
Integer binomial(int n, int k);

// n! for n >= 0.
Integer factorial(int n);

// Bell number B_n via B_{m+1} = sum_k binom(m,k) B_k. The bound keeps
// exhaustive consumers desk-scale; exceeding it is an input error.
Integer bell_number(int n, int bound = 12);

} // namespace jetgroups
