#pragma once

// Independent evaluation of rho_l from the defining triple sum
//   -rho_l = sum_{k>=0} sum_{i>k} sum_{j>k+1} (chi(a_i, a_j) + r_i r_j (1+k-j) l)
// and of the right-hand side rho_0 + (l/2)(sum i r_i)^2 - (l/2) sum_k (sum_{i>=k} r_i)^2.

#include <vector>

#include "higgs/partitions.hpp"

namespace higgs::testing {

inline long rhoTripleSum(long l, const std::vector<ChernClass>& a, int genus) {
    const long s = static_cast<long>(a.size());
    long sum = 0;
    for (long k = 0; k < s; ++k)
        for (long i = k + 1; i <= s; ++i)
            for (long j = k + 2; j <= s; ++j)
                sum += chi(a[i - 1], a[j - 1], genus) + a[i - 1].r * a[j - 1].r * (1 + k - j) * l;
    return -sum;
}

/// Twice the corrected right-hand side (kept integral).
inline long twiceRhoFromRho0(long l, const std::vector<ChernClass>& a, int genus) {
    const long s = static_cast<long>(a.size());
    long r = 0;
    for (long i = 1; i <= s; ++i) r += i * a[i - 1].r;
    long pairing = 0;
    for (long k = 1; k <= s; ++k) {
        long tail = 0;
        for (long i = k; i <= s; ++i) tail += a[i - 1].r;
        pairing += tail * tail;
    }
    return 2 * rho0(a, genus) + l * r * r - l * pairing;
}

}  // namespace higgs::testing
