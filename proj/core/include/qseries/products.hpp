#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

// One infinite q-Pochhammer factor (z; q^modulus) with z = sign-dependent:
//   sign = +1 encodes ( q^offset; q^modulus), factors (1 - q^{offset+j*modulus}),
//   sign = -1 encodes (-q^offset; q^modulus), factors (1 + q^{offset+j*modulus}).
// offset = 0 is allowed: (q^0;q^b) collapses to 0, (-q^0;q^b) carries a factor 2.
struct PochhammerFactor {
    int sign;      // +1 or -1
    long offset;   // >= 0
    long modulus;  // >= 1
};

// A finite multiset of Pochhammer factors; empty means the constant series 1.
struct ProductSpec {
    std::vector<PochhammerFactor> factors;
};

// Expands one factor exactly through q^order.
TruncatedSeries expand_pochhammer(const PochhammerFactor& fac, long order);

// Product of all factors in the spec, exact through q^order.
TruncatedSeries expand_product(const ProductSpec& spec, long order);

// Bilateral theta sum  sum_{m in Z} sigma^m q^{a m^2 + b m}  with
// sigma = -1 when negate_sign, truncated at `order`. Requires a >= 1 so only
// finitely many m contribute; the m-range is widened so no exponent in range
// is missed.
TruncatedSeries theta_jtp(long a, long b, bool negate_sign, long order);

// Series for one of the named objects of this engine:
//   X, Y          quintuple-residue products with mixed signs, modulus 5
//   R             (q,q^4;q^5)/(q^2,q^3;q^5), a unit series
//   Rcal          R(q^10)
//   Phi           phi_50^2 / phi_100
//   phi, phi_m    Euler products (q^m;q^m)
//   u_0..u_5      sum_m (-1)^m q^{5m^2+km}
//   udag_0..udag_5  the unsigned variant
//   U_0..U_5      sum_m (-1)^m q^{50m^2+10km}
//   alpha..delta  aliases for U_1..U_4
// Results are memoized per (name, order); throws UnknownName otherwise.
TruncatedSeries named(std::string_view name, long order);

// The ProductSpec behind a product-valued name (X, Y, phi_m); used by the
// expression layer and by tests. Throws UnknownName for sum-valued names.
ProductSpec named_product_spec(std::string_view name);

} // namespace qseries
