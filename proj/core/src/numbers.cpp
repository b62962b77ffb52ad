#include "jetgroups/numbers.hpp"

#include <vector>

#include "jetgroups/errors.hpp"

namespace jetgroups {

Integer binomial(int n, int k) {
    if (n < 0) throw InputError("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(int n) {
    if (n < 0) throw InputError("factorial: n must be nonnegative");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer bell_number(int n, int bound) {
    if (n < 0) throw InputError("bell_number: n must be nonnegative");
    if (n > bound) throw InputError("bell_number: n exceeds the configured bound");
    std::vector<Integer> bell(static_cast<std::size_t>(n) + 1);
    bell[0] = 1;
    for (int m = 0; m < n; ++m) {
        Integer next = 0;
        for (int j = 0; j <= m; ++j) next += binomial(m, j) * bell[j];
        bell[m + 1] = next;
    }
    return bell[n];
}

} // namespace jetgroups
