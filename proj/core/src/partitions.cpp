#include "qseries/partitions.hpp"

#include <algorithm>

namespace qseries {

int chi5(long n) {
    switch (n % 5) {
        case 1:
        case 4:
            return 1;
        case 2:
        case 3:
            return -1;
        default:
            return 0;
    }
}

namespace {

// Sums the weight over partitions of `remaining` whose parts are <= max_part,
// given the product of chi5 over parts chosen so far and their count parity.
long enumerate_rec(long remaining, long max_part, int weight, bool dagger) {
    if (remaining == 0) return weight;
    long total = 0;
    for (long part = std::min(remaining, max_part); part >= 1; --part) {
        int w = weight * chi5(part);
        if (dagger) w = -w;
        total += enumerate_rec(remaining - part, part, w, dagger);
    }
    return total;
}

} // namespace

mpz_class enumerate_signed_sum(long n, PartitionWeight variant, long cap) {
    if (n < 0) throw Error("negative partition index");
    if (n > cap)
        throw CapExceeded("enumeration of n = " + std::to_string(n) +
                          " exceeds cap " + std::to_string(cap));
    return mpz_class(enumerate_rec(n, n == 0 ? 1 : n, 1, variant == PartitionWeight::Dagger));
}

std::vector<mpz_class> dp_signed_sums(long n_max, PartitionWeight variant) {
    if (n_max < 0) throw Error("negative partition index");
    // dp[n] after processing parts 1..a = signed sum over partitions of n
    // with all parts <= a. Appending copies of part a contributes a factor
    // w(a) per copy, w(a) = chi5(a) (negated per part in the dagger variant).
    std::vector<mpz_class> dp(static_cast<std::size_t>(n_max) + 1);
    dp[0] = 1;
    for (long a = 1; a <= n_max; ++a) {
        int w = chi5(a);
        if (variant == PartitionWeight::Dagger) w = -w;
        if (w == 0) continue;
        for (long n = a; n <= n_max; ++n) {
            if (w > 0)
                dp[n] += dp[n - a];
            else
                dp[n] -= dp[n - a];
        }
    }
    return dp;
}

} // namespace qseries
