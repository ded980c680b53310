#pragma once

// Test-side oracles, kept independent of the library's enumeration paths.

#include <cstdint>
#include <vector>

namespace oracles {

// Partition counts p(0..nmax) via the pentagonal-number recurrence.
inline std::vector<long long> partition_counts(unsigned nmax) {
    std::vector<long long> p(nmax + 1, 0);
    p[0] = 1;
    for (unsigned n = 1; n <= nmax; ++n) {
        long long s = 0;
        for (long long k = 1;; ++k) {
            const long long g1 = k * (3 * k - 1) / 2;
            const long long g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            const long long sign = (k % 2) ? 1 : -1;
            if (g1 <= n) s += sign * p[n - g1];
            if (g2 <= n) s += sign * p[n - g2];
        }
        p[n] = s;
    }
    return p;
}

// Number of ordered pairs of partitions with total size n.
inline long long ordered_pair_count(const std::vector<long long>& p, unsigned n) {
    long long s = 0;
    for (unsigned k = 0; k <= n; ++k) s += p[k] * p[n - k];
    return s;
}

// Labels of W(D_n): unordered pairs once, equal pairs twice.
inline long long label_count(const std::vector<long long>& p, unsigned n) {
    const long long pairs = ordered_pair_count(p, n);
    const long long equal = (n % 2 == 0) ? p[n / 2] : 0;
    return (pairs - equal) / 2 + 2 * equal;
}

}  // namespace oracles
