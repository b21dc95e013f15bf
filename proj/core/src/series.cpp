#include "qseries/series.hpp"

#include <algorithm>
#include <sstream>

namespace qseries {

namespace {

inline int sign_of(const mpz_class& x) { return mpz_sgn(x.get_mpz_t()); }

} // namespace

TruncatedSeries TruncatedSeries::monomial(const mpz_class& c, long exp, long order) {
    if (exp < 0) throw Error("monomial exponent must be non-negative");
    TruncatedSeries s(order);
    if (exp <= order) s.coeffs_[static_cast<std::size_t>(exp)] = c;
    return s;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const mpz_class& c) { return sign_of(c) == 0; });
}

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
    const long n = std::min(f.order(), g.order());
    std::vector<mpz_class> out(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i)
        out[i] = f.coeffs_[i] + g.coeffs_[i];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
    const long n = std::min(f.order(), g.order());
    std::vector<mpz_class> out(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i)
        out[i] = f.coeffs_[i] - g.coeffs_[i];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries operator-(const TruncatedSeries& f) {
    std::vector<mpz_class> out(f.coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = -f.coeffs_[i];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
    const long n = std::min(f.order(), g.order());
    std::vector<mpz_class> out(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
        if (sign_of(f.coeffs_[i]) == 0) continue;
        const mpz_srcptr fi = f.coeffs_[i].get_mpz_t();
        const long jmax = n - i;
        for (long j = 0; j <= jmax; ++j) {
            if (sign_of(g.coeffs_[j]) == 0) continue;
            mpz_addmul(out[i + j].get_mpz_t(), fi, g.coeffs_[j].get_mpz_t());
        }
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(const mpz_class& c, const TruncatedSeries& f) {
    std::vector<mpz_class> out(f.coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = c * f.coeffs_[i];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries invert(const TruncatedSeries& f) {
    const long n = f.order();
    const int unit = sign_of(f.coeffs_[0]);
    if (mpz_cmpabs_ui(f.coeffs_[0].get_mpz_t(), 1) != 0)
        throw NonUnitConstantTerm("cannot invert: constant term is " +
                                  f.coeffs_[0].get_str() + ", need +1 or -1");

    // c_m = -(1/f_0) * sum_{k>=1} f_k c_{m-k}; only nonzero f_k contribute.
    std::vector<long> nz;
    for (long k = 1; k <= n; ++k)
        if (sign_of(f.coeffs_[k]) != 0) nz.push_back(k);

    std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
    c[0] = unit;
    mpz_class acc;
    for (long m = 1; m <= n; ++m) {
        acc = 0;
        for (long k : nz) {
            if (k > m) break;
            mpz_addmul(acc.get_mpz_t(), f.coeffs_[k].get_mpz_t(), c[m - k].get_mpz_t());
        }
        if (unit > 0)
            c[m] = -acc;
        else
            c[m] = acc;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries pow(const TruncatedSeries& f, long k) {
    if (k < 0) return pow(invert(f), -k);
    TruncatedSeries result = TruncatedSeries::one(f.order());
    if (k == 0) return result;
    TruncatedSeries base = f;
    for (;;) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k == 0) break;
        base = base * base;
    }
    return result;
}

TruncatedSeries substitute_power(const TruncatedSeries& f, long m) {
    if (m < 1) throw Error("substitution power must be >= 1");
    if (m == 1) return f;
    if (f.order() > (1L << 26) / m)
        throw Error("substitution order overflow");
    std::vector<mpz_class> out(static_cast<std::size_t>(m * f.order()) + 1);
    for (long i = 0; i <= f.order(); ++i)
        out[static_cast<std::size_t>(m * i)] = f.coeffs_[i];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries negate_variable(const TruncatedSeries& f) {
    std::vector<mpz_class> out(f.coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = (i & 1) ? -f.coeffs_[i] : f.coeffs_[i];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries dissect(const TruncatedSeries& f, long m, long r) {
    if (m < 1 || r < 0 || r >= m)
        throw DissectionIndexOutOfRange("dissection residue " + std::to_string(r) +
                                        " outside [0, " + std::to_string(m) + ")");
    if (f.order() < r) return TruncatedSeries::zero(0);
    const long jmax = (f.order() - r) / m;
    std::vector<mpz_class> out(static_cast<std::size_t>(m * jmax) + 1);
    for (long j = 0; j <= jmax; ++j)
        out[static_cast<std::size_t>(m * j)] = f.coeffs_[static_cast<std::size_t>(m * j + r)];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries dissect_compact(const TruncatedSeries& f, long m, long r) {
    if (m < 1 || r < 0 || r >= m)
        throw DissectionIndexOutOfRange("dissection residue " + std::to_string(r) +
                                        " outside [0, " + std::to_string(m) + ")");
    if (f.order() < r) return TruncatedSeries::zero(0);
    const long jmax = (f.order() - r) / m;
    std::vector<mpz_class> out(static_cast<std::size_t>(jmax) + 1);
    for (long j = 0; j <= jmax; ++j)
        out[static_cast<std::size_t>(j)] = f.coeffs_[static_cast<std::size_t>(m * j + r)];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries shift(const TruncatedSeries& f, long k) {
    if (k < 0) throw Error("negative shift");
    std::vector<mpz_class> out(f.coeffs_.size() + static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
        out[i + static_cast<std::size_t>(k)] = f.coeffs_[i];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries truncate(const TruncatedSeries& f, long order) {
    if (order < 0 || order > f.order())
        throw OutOfRange("cannot truncate order-" + std::to_string(f.order()) +
                         " series to order " + std::to_string(order));
    std::vector<mpz_class> out(f.coeffs_.begin(), f.coeffs_.begin() + order + 1);
    return TruncatedSeries(std::move(out));
}

bool agree_to(const TruncatedSeries& f, const TruncatedSeries& g, long order) {
    if (order > f.order() || order > g.order())
        throw OutOfRange("agreement order exceeds an operand's exact order");
    for (long i = 0; i <= order; ++i)
        if (f.coeff(i) != g.coeff(i)) return false;
    return true;
}

std::string to_string(const TruncatedSeries& f, std::size_t max_terms) {
    std::ostringstream os;
    std::size_t printed = 0;
    for (long n = 0; n <= f.order() && printed < max_terms; ++n) {
        const mpz_class& c = f.coeff(n);
        if (sign_of(c) == 0) continue;
        if (printed == 0) {
            if (sign_of(c) < 0) os << "-";
        } else {
            os << (sign_of(c) < 0 ? " - " : " + ");
        }
        mpz_class a = abs(c);
        const bool unit_coeff = (a == 1) && n > 0;
        if (!unit_coeff) os << a.get_str();
        if (n > 0) {
            if (!unit_coeff) os << "*";
            os << "q";
            if (n > 1) os << "^" << n;
        }
        ++printed;
    }
    if (printed == 0) os << "0";
    os << " + O(q^" << f.order() + 1 << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f) {
    return os << to_string(f);
}

} // namespace qseries
