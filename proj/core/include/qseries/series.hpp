#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qseries/errors.hpp"

namespace qseries {

// A formal power series in q over the integers, truncated at a known order:
// coefficients for q^0 .. q^order are exact, everything above is unknown.
// Coefficients are arbitrary-precision (GMP); no floating point anywhere.
//
// Values are immutable once built. Every operation returns a fresh series
// whose order is the largest one its inputs can guarantee exactly.
class TruncatedSeries {
public:
    // Zero series exact through q^order.
    explicit TruncatedSeries(long order) : coeffs_(check_order(order) + 1) {}

    // Takes ownership of a dense coefficient vector; order = size - 1.
    explicit TruncatedSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw Error("series needs at least the constant coefficient");
    }

    static TruncatedSeries zero(long order) { return TruncatedSeries(order); }

    static TruncatedSeries one(long order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    // c * q^exp, truncated at `order`. exp may exceed order (all-zero result).
    static TruncatedSeries monomial(const mpz_class& c, long exp, long order);

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }

    // Exact coefficient of q^n; throws OutOfRange beyond the truncation order.
    const mpz_class& coeff(long n) const {
        if (n < 0 || n > order())
            throw OutOfRange("coefficient index " + std::to_string(n) +
                             " outside exact range 0.." + std::to_string(order()));
        return coeffs_[static_cast<std::size_t>(n)];
    }

    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    // Exact equality of truncations: same order, identical coefficients.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    static long check_order(long order) {
        if (order < 0) throw Error("negative truncation order");
        return order;
    }

    std::vector<mpz_class> coeffs_;

    friend TruncatedSeries operator+(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries operator-(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries operator-(const TruncatedSeries&);
    friend TruncatedSeries operator*(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries operator*(const mpz_class&, const TruncatedSeries&);
    friend TruncatedSeries invert(const TruncatedSeries&);
    friend TruncatedSeries pow(const TruncatedSeries&, long);
    friend TruncatedSeries substitute_power(const TruncatedSeries&, long);
    friend TruncatedSeries negate_variable(const TruncatedSeries&);
    friend TruncatedSeries dissect(const TruncatedSeries&, long, long);
    friend TruncatedSeries dissect_compact(const TruncatedSeries&, long, long);
    friend TruncatedSeries shift(const TruncatedSeries&, long);
    friend TruncatedSeries truncate(const TruncatedSeries&, long);
};

// Coefficient-wise sum/difference at the shared exact order.
TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator-(const TruncatedSeries& f);

// Cauchy product truncated at min(f.order, g.order). Zero coefficients are
// skipped, so products of sparse theta-style series cost far less than the
// dense O(N^2) bound.
TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator*(const mpz_class& c, const TruncatedSeries& f);
inline TruncatedSeries operator*(const TruncatedSeries& f, const mpz_class& c) { return c * f; }
inline TruncatedSeries operator*(long c, const TruncatedSeries& f) { return mpz_class(c) * f; }

// Reciprocal of a unit series (constant term +1 or -1), exact to f.order.
// Throws NonUnitConstantTerm otherwise.
TruncatedSeries invert(const TruncatedSeries& f);

// f^k by binary exponentiation; k = 0 gives 1, negative k routes through
// invert and therefore requires a unit constant term.
TruncatedSeries pow(const TruncatedSeries& f, long k);

// f(q^m); the result is exact through m * f.order.
TruncatedSeries substitute_power(const TruncatedSeries& f, long m);

// f(-q): coefficient of q^n picks up a factor (-1)^n.
TruncatedSeries negate_variable(const TruncatedSeries& f);

// Type-r component of the m-dissection, in the convention that keeps the
// variable q^m and strips the q^r prefactor: sum_j a_{mj+r} q^{mj}.
// Result order is the largest mj with mj + r <= f.order.
TruncatedSeries dissect(const TruncatedSeries& f, long m, long r);

// The same component reindexed to a compact vector: sum_j a_{mj+r} q^j.
TruncatedSeries dissect_compact(const TruncatedSeries& f, long m, long r);

// q^k * f, exact through f.order + k.
TruncatedSeries shift(const TruncatedSeries& f, long k);

// Restriction to a smaller exact order (order must not exceed f.order).
TruncatedSeries truncate(const TruncatedSeries& f, long order);

// True when the two truncations agree on every exponent 0..order.
bool agree_to(const TruncatedSeries& f, const TruncatedSeries& g, long order);

// Human-readable form "1 - q + 2*q^3 + ... + O(q^{order+1})".
std::string to_string(const TruncatedSeries& f, std::size_t max_terms = 12);
std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f);

} // namespace qseries
