#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

struct Mismatch {
    long exponent = 0;
    mpz_class lhs;
    mpz_class rhs;
};

struct IdentityReport {
    std::string id;
    long order = 0;
    bool pass = false;
    std::optional<Mismatch> first_mismatch;
    double millis = 0.0;
};

// One verifiable equation: a builder that expands both sides to a requested
// order, plus bookkeeping. Ids are stable strings; instances of the same
// display share a label.
struct IdentityCase {
    std::string id;
    std::string label;
    std::string description;
    long default_order = 1000;
    std::function<std::pair<TruncatedSeries, TruncatedSeries>(long)> build;
    // Asserts that both sides are the literal zero series, coefficient by
    // coefficient, not merely equal.
    bool require_zero = false;
};

// Every registered identity, in registration order. Built once, immutable.
const std::vector<IdentityCase>& registry();

// Cases whose id matches a shell-style glob ('*' and '?').
std::vector<const IdentityCase*> match_identities(const std::string& glob);

// Expands both sides at `order` exactly and compares coefficient by
// coefficient; reports the first mismatch if any.
IdentityReport verify(const IdentityCase& c, long order);

// Same, by id; throws UnknownIdentity.
IdentityReport verify(const std::string& id, long order);

// Runs every registered identity at max(order, its default), optionally on
// several worker threads. Reports come back sorted by id regardless of the
// execution schedule. threads = 0 picks default_thread_count().
std::vector<IdentityReport> verify_all(long order, int threads = 0);

// Same for a glob-selected subset.
std::vector<IdentityReport> verify_matching(const std::string& glob, long order,
                                            int threads = 0);

enum class Theorem {
    CoefficientVanishing,  // 1/X vanishes at exponents = 2 (mod 10), 1/Y at 6
    ComponentSymmetry      // 1/Y equals 1/X at 0 (mod 10) and negates at 8
};

// Scans the coefficients of 1/X and 1/Y directly up to exponent n_max;
// mismatch exponents are reported in the original q-scale.
IdentityReport theorem_scan(Theorem which, long n_max);

enum class Factorization { X2, Y6, X0Y0, X8Y8 };

// One scaled dissection component [phi_10^9 / (S * phi_50^5)]_[r] for
// S in {X, Y}, together with a power-of-Rcal multiple of it. Components use
// the stripped convention: variable q^10, the q^r prefactor removed.
struct ComponentSeries {
    char series;  // 'X' or 'Y'
    long residue;
    TruncatedSeries component;
    TruncatedSeries rcal_multiplied;  // component * Rcal^rcal_power
    long rcal_power;
};

// Builds the component from the actual dissection of the expanded quotient,
// exact through q^order.
ComponentSeries scaled_component(char series, long residue, long rcal_power, long order);

// Verifies one component factorization chain: the dissected left side, the
// intermediate displays, and the final factorized form, all at `order`.
// The returned report aggregates the chain (first failure wins).
IdentityReport component_factorization_check(Factorization which, long order);

// Worker count for parallel verification: QS_THREADS when set (min 1),
// otherwise the hardware concurrency.
int default_thread_count();

} // namespace qseries
