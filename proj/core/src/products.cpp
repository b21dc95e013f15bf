#include "qseries/products.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <utility>

namespace qseries {

namespace {

// Multiplies f in place by (1 - s*q^k), s = +/-1, truncating at f's order.
void mul_binomial_inplace(std::vector<mpz_class>& c, long k, int s) {
    const long n = static_cast<long>(c.size()) - 1;
    for (long i = n; i >= k; --i) {
        if (mpz_sgn(c[i - k].get_mpz_t()) == 0) continue;
        if (s > 0)
            c[i] -= c[i - k];
        else
            c[i] += c[i - k];
    }
}

long isqrt_floor(long x) {
    if (x < 0) throw Error("isqrt of negative value");
    if (x == 0) return 0;
    long r = static_cast<long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

} // namespace

TruncatedSeries expand_pochhammer(const PochhammerFactor& fac, long order) {
    if (fac.modulus < 1) throw Error("Pochhammer modulus must be >= 1");
    if (fac.offset < 0) throw Error("Pochhammer offset must be >= 0");
    if (fac.sign != 1 && fac.sign != -1) throw Error("Pochhammer sign must be +1 or -1");

    std::vector<mpz_class> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    if (fac.offset == 0) {
        // Leading factor (1 -+ q^0) is 0 or 2 and the remaining factors
        // start at the modulus.
        if (fac.sign > 0) return TruncatedSeries::zero(order);
        c[0] = 2;
        for (long k = fac.modulus; k <= order; k += fac.modulus)
            mul_binomial_inplace(c, k, fac.sign);
        return TruncatedSeries(std::move(c));
    }
    for (long k = fac.offset; k <= order; k += fac.modulus)
        mul_binomial_inplace(c, k, fac.sign);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries expand_product(const ProductSpec& spec, long order) {
    std::vector<mpz_class> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    for (const PochhammerFactor& fac : spec.factors) {
        if (fac.modulus < 1) throw Error("Pochhammer modulus must be >= 1");
        if (fac.offset < 0) throw Error("Pochhammer offset must be >= 0");
        if (fac.offset == 0) {
            if (fac.sign > 0) return TruncatedSeries::zero(order);
            for (auto& x : c) x *= 2;
            for (long k = fac.modulus; k <= order; k += fac.modulus)
                mul_binomial_inplace(c, k, fac.sign);
            continue;
        }
        for (long k = fac.offset; k <= order; k += fac.modulus)
            mul_binomial_inplace(c, k, fac.sign);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries theta_jtp(long a, long b, bool negate_sign, long order) {
    if (a < 1) throw Error("theta_jtp needs a >= 1");
    std::vector<mpz_class> c(static_cast<std::size_t>(order) + 1);
    const long root = isqrt_floor(b * b + 4 * a * order);
    const long bound = 1 + (std::labs(b) + root) / (2 * a);
    for (long m = -bound; m <= bound; ++m) {
        const long e = a * m * m + b * m;
        if (e < 0 || e > order) continue;
        if (negate_sign && (m & 1))
            c[e] -= 1;
        else
            c[e] += 1;
    }
    return TruncatedSeries(std::move(c));
}

ProductSpec named_product_spec(std::string_view name) {
    if (name == "X")
        return {{{+1, 1, 5}, {-1, 2, 5}, {-1, 3, 5}, {+1, 4, 5}}};
    if (name == "Y")
        return {{{-1, 1, 5}, {+1, 2, 5}, {+1, 3, 5}, {-1, 4, 5}}};
    if (name == "phi") return {{{+1, 1, 1}}};
    if (name.substr(0, 4) == "phi_") {
        const std::string suffix(name.substr(4));
        if (!suffix.empty() && suffix.size() <= 8 &&
            suffix.find_first_not_of("0123456789") == std::string::npos) {
            const long m = std::stol(suffix);
            if (m >= 1) return {{{+1, m, m}}};
        }
    }
    throw UnknownName("no product spec for '" + std::string(name) + "'");
}

namespace {

long parse_index(std::string_view name, std::string_view prefix, long max) {
    const std::string suffix(name.substr(prefix.size()));
    if (suffix.empty() || suffix.size() > 8 ||
        suffix.find_first_not_of("0123456789") != std::string::npos)
        throw UnknownName("unknown series name '" + std::string(name) + "'");
    const long k = std::stol(suffix);
    if (k > max)
        throw UnknownName("index out of range in '" + std::string(name) + "'");
    return k;
}

TruncatedSeries build_named(std::string_view name, long order) {
    if (name == "X" || name == "Y" || name == "phi" || name.substr(0, 4) == "phi_")
        return expand_product(named_product_spec(name), order);
    if (name == "R")
        return expand_product({{{+1, 1, 5}, {+1, 4, 5}}}, order) *
               invert(expand_product({{{+1, 2, 5}, {+1, 3, 5}}}, order));
    if (name == "Rcal")
        return expand_product({{{+1, 10, 50}, {+1, 40, 50}}}, order) *
               invert(expand_product({{{+1, 20, 50}, {+1, 30, 50}}}, order));
    if (name == "Phi")
        return expand_product({{{+1, 50, 50}, {+1, 50, 50}}}, order) *
               invert(expand_product({{{+1, 100, 100}}}, order));
    if (name == "alpha") return theta_jtp(50, 10, true, order);
    if (name == "beta") return theta_jtp(50, 20, true, order);
    if (name == "gamma") return theta_jtp(50, 30, true, order);
    if (name == "delta") return theta_jtp(50, 40, true, order);
    if (name.substr(0, 2) == "u_" && name.substr(0, 6) != "u_dag_")
        return theta_jtp(5, parse_index(name, "u_", 5), true, order);
    if (name.substr(0, 5) == "udag_")
        return theta_jtp(5, parse_index(name, "udag_", 5), false, order);
    if (name.substr(0, 6) == "u_dag_")
        return theta_jtp(5, parse_index(name, "u_dag_", 5), false, order);
    if (name.substr(0, 2) == "U_")
        return theta_jtp(50, 10 * parse_index(name, "U_", 5), true, order);
    throw UnknownName("unknown series name '" + std::string(name) + "'");
}

} // namespace

TruncatedSeries named(std::string_view name, long order) {
    if (order < 0) throw Error("negative truncation order");
    static std::mutex mutex;
    static std::map<std::pair<std::string, long>, TruncatedSeries> cache;

    const std::pair<std::string, long> key(std::string(name), order);
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    TruncatedSeries value = build_named(name, order);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(value)).first->second;
}

} // namespace qseries
