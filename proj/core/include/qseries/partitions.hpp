#pragma once

#include <gmpxx.h>

#include <vector>

#include "qseries/errors.hpp"

namespace qseries {

// Weighting of a partition (a_1,...,a_k):
//   Plain   product of chi5 over the parts,
//   Dagger  the same product times (-1)^k.
enum class PartitionWeight { Plain, Dagger };

// Legendre symbol mod 5: +1 on residues 1,4; -1 on 2,3; 0 on multiples of 5.
int chi5(long n);

// Signed sum over every partition of n, by exhaustive recursive enumeration.
// Partitions containing a part divisible by 5 are visited too (they add 0);
// this is the oracle of record, so nothing is pruned. Throws CapExceeded for
// n beyond the cap — p(40) = 37338 partitions is the intended ceiling.
mpz_class enumerate_signed_sum(long n, PartitionWeight variant, long cap = 40);

// The same sums for all n = 0..n_max at once, via the bounded-largest-part
// dynamic program. Shares no code with series convolution or enumeration.
std::vector<mpz_class> dp_signed_sums(long n_max, PartitionWeight variant);

} // namespace qseries
