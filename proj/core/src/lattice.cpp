#include "qseries/lattice.hpp"

#include <cmath>
#include <cstdlib>

namespace qseries {

namespace {

long isqrt_floor(long x) {
    if (x <= 0) return 0;
    long r = static_cast<long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

// Smallest value of a*t^2 + b*t over the integers (a > 0): the minimum sits
// next to the real vertex -b/(2a).
long integer_min_of_quadratic(long a, long b) {
    const long t = static_cast<long>(std::floor(-static_cast<double>(b) / (2.0 * a)));
    long best = a * t * t + b * t;
    for (long u = t - 1; u <= t + 2; ++u) {
        const long v = a * u * u + b * u;
        if (v < best) best = v;
    }
    return best;
}

// Conservative integer range [lo, hi] containing all t with a*t^2 + b*t <= bound.
// Callers re-test each point exactly, so widening is harmless.
std::pair<long, long> quadratic_range(long a, long b, long bound) {
    const long disc = b * b + 4 * a * bound;
    if (disc < 0) return {1, 0};
    const long root = isqrt_floor(disc) + 1;
    const long lo = -(std::labs(b) + root) / (2 * a) - 1;
    const long hi = (std::labs(b) + root) / (2 * a) + 1;
    return {lo, hi};
}

} // namespace

bool CosetSystem::contains(const Vec2& v) const {
    const long d = det();
    if (d == 0) throw DegenerateLattice("lattice generators are linearly dependent");
    // Solve x*gen1 + y*gen2 = v by Cramer's rule; v is in the lattice iff
    // both solutions are integers.
    const long xn = v[0] * gen2[1] - v[1] * gen2[0];
    const long yn = gen1[0] * v[1] - gen1[1] * v[0];
    return xn % d == 0 && yn % d == 0;
}

AffineMap AffineMap::from_coset(const CosetSystem& cs, std::size_t rep_index) {
    return {cs.gen1, cs.gen2, cs.reps.at(rep_index)};
}

bool verify_partition(const CosetSystem& cs, long bound) {
    if (bound < 1) throw Error("partition check needs bound >= 1");
    const long d = cs.det();
    if (d == 0) throw DegenerateLattice("lattice generators are linearly dependent");
    if (std::labs(d) != static_cast<long>(cs.reps.size())) return false;

    for (long x = -bound; x <= bound; ++x) {
        for (long y = -bound; y <= bound; ++y) {
            int memberships = 0;
            for (const Vec2& rep : cs.reps)
                if (cs.contains({x - rep[0], y - rep[1]})) ++memberships;
            if (memberships != 1) return false;
        }
    }
    return true;
}

std::vector<long> residue_on_cosets(const QuadForm2& f, const CosetSystem& cs,
                                    long modulus, long bound) {
    if (modulus < 1) throw Error("modulus must be >= 1");
    if (!verify_partition(cs, bound))
        throw Error("coset system does not partition the sample box");

    std::vector<long> residues(cs.reps.size(), -1);
    for (long x = -bound; x <= bound; ++x) {
        for (long y = -bound; y <= bound; ++y) {
            std::size_t coset = cs.reps.size();
            for (std::size_t r = 0; r < cs.reps.size(); ++r) {
                if (cs.contains({x - cs.reps[r][0], y - cs.reps[r][1]})) {
                    coset = r;
                    break;
                }
            }
            const long value = ((f(x, y) % modulus) + modulus) % modulus;
            if (residues[coset] == -1) {
                residues[coset] = value;
            } else if (residues[coset] != value) {
                throw NonConstantResidue(
                    "form is not constant mod " + std::to_string(modulus) +
                    " on coset " + std::to_string(coset));
            }
        }
    }
    for (std::size_t r = 0; r < residues.size(); ++r)
        if (residues[r] == -1)
            throw Error("sample box too small: coset " + std::to_string(r) + " unseen");
    return residues;
}

QuadForm2 transform_form(const QuadForm2& f, const AffineMap& map) {
    const long p = map.row1[0], q = map.row1[1];
    const long r = map.row2[0], s = map.row2[1];
    const long t = map.translation[0], u = map.translation[1];

    // Substitute m = p*mu + r*nu + t, n = q*mu + s*nu + u into
    // A m^2 + B m + C n^2 + D n + E and collect.
    const long cross = 2 * (f.A * p * r + f.C * q * s);
    if (cross != 0)
        throw CrossTermPresent("substitution leaves a " + std::to_string(cross) +
                               "*mu*nu term");
    QuadForm2 g;
    g.A = f.A * p * p + f.C * q * q;
    g.B = 2 * f.A * p * t + f.B * p + 2 * f.C * q * u + f.D * q;
    g.C = f.A * r * r + f.C * s * s;
    g.D = 2 * f.A * r * t + f.B * r + 2 * f.C * s * u + f.D * s;
    g.E = f.A * t * t + f.B * t + f.C * u * u + f.D * u + f.E;
    return g;
}

SignFunctional transform_sign(const SignFunctional& sgn, const AffineMap& map) {
    SignFunctional out;
    out.s = (((sgn.s * map.row1[0] + sgn.t * map.row1[1]) % 2) + 2) % 2;
    out.t = (((sgn.s * map.row2[0] + sgn.t * map.row2[1]) % 2) + 2) % 2;
    out.c = (((sgn.s * map.translation[0] + sgn.t * map.translation[1] + sgn.c) % 2) + 2) % 2;
    return out;
}

TruncatedSeries bilateral_sum(const QuadForm2& f, const SignFunctional& s, long order) {
    if (f.A <= 0 || f.C <= 0)
        throw NotBoundedBelow("bilateral sum needs positive m^2 and n^2 coefficients");

    std::vector<mpz_class> c(static_cast<std::size_t>(order) + 1);
    const long min_n_part = integer_min_of_quadratic(f.C, f.D);
    const auto [m_lo, m_hi] = quadratic_range(f.A, f.B, order - f.E - min_n_part);
    for (long m = m_lo; m <= m_hi; ++m) {
        const long m_part = f.A * m * m + f.B * m;
        const auto [n_lo, n_hi] = quadratic_range(f.C, f.D, order - f.E - m_part);
        for (long n = n_lo; n <= n_hi; ++n) {
            const long e = m_part + f.C * n * n + f.D * n + f.E;
            if (e < 0 || e > order) continue;
            if (s(m, n) > 0)
                c[e] += 1;
            else
                c[e] -= 1;
        }
    }
    return TruncatedSeries(std::move(c));
}

std::vector<std::pair<long, TruncatedSeries>> dissect_via_cosets(
    const QuadForm2& f, const SignFunctional& s, const CosetSystem& cs,
    long modulus, long order) {
    // Residue constancy doubles as the partition precondition; a modest box
    // is plenty to catch a wrong pairing.
    const std::vector<long> residues = residue_on_cosets(f, cs, modulus, 25);

    std::vector<std::pair<long, TruncatedSeries>> components;
    components.reserve(cs.reps.size());
    for (std::size_t r = 0; r < cs.reps.size(); ++r) {
        const AffineMap map = AffineMap::from_coset(cs, r);
        const QuadForm2 g = transform_form(f, map);
        const SignFunctional t = transform_sign(s, map);
        components.emplace_back(residues[r], bilateral_sum(g, t, order));
    }
    return components;
}

} // namespace qseries
