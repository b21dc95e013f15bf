#pragma once

#include <array>
#include <utility>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

using Vec2 = std::array<long, 2>;

// f(m,n) = A*m^2 + B*m + C*n^2 + D*n + E over the integers.
struct QuadForm2 {
    long A = 0, B = 0, C = 0, D = 0, E = 0;

    long operator()(long m, long n) const {
        return A * m * m + B * m + C * n * n + D * n + E;
    }
    friend bool operator==(const QuadForm2&, const QuadForm2&) = default;
};

// The sign (-1)^{s*m + t*n + c}; coefficients live mod 2.
struct SignFunctional {
    int s = 0, t = 0, c = 0;

    int operator()(long m, long n) const {
        return ((s * m + t * n + c) % 2 + 2) % 2 ? -1 : 1;
    }
    friend bool operator==(const SignFunctional&, const SignFunctional&) = default;
};

// A sublattice of Z^2 spanned by two row vectors, together with coset
// representatives. A valid system has |det| = reps.size() with the reps in
// pairwise distinct cosets, so that the cosets tile Z^2.
struct CosetSystem {
    Vec2 gen1{};
    Vec2 gen2{};
    std::vector<Vec2> reps;

    long det() const { return gen1[0] * gen2[1] - gen1[1] * gen2[0]; }

    // Does v lie in the sublattice? Exact integer solve against (gen1, gen2);
    // throws DegenerateLattice when det = 0.
    bool contains(const Vec2& v) const;
};

// The affine substitution (m,n) = (mu,nu,1) * B with B rows (gen1,0),
// (gen2,0), (translation,1).
struct AffineMap {
    Vec2 row1{};
    Vec2 row2{};
    Vec2 translation{};

    static AffineMap from_coset(const CosetSystem& cs, std::size_t rep_index);

    Vec2 apply(long mu, long nu) const {
        return {row1[0] * mu + row2[0] * nu + translation[0],
                row1[1] * mu + row2[1] * nu + translation[1]};
    }
};

// Checks that every point of [-bound, bound]^2 lies in exactly one coset.
bool verify_partition(const CosetSystem& cs, long bound);

// The residue of f mod `modulus` on each coset, in rep order, sampled over
// the [-bound, bound]^2 box. Throws NonConstantResidue if any coset sees two
// different residues (a wrong lattice/form pairing).
std::vector<long> residue_on_cosets(const QuadForm2& f, const CosetSystem& cs,
                                    long modulus, long bound);

// The quadratic form g(mu,nu) = f((mu,nu,1) * B). The mu*nu cross term must
// cancel (the generators are chosen to make it so); otherwise
// CrossTermPresent is thrown.
QuadForm2 transform_form(const QuadForm2& f, const AffineMap& map);

// The sign functional pulled back through the same substitution, mod 2.
SignFunctional transform_sign(const SignFunctional& s, const AffineMap& map);

// sum over (m,n) in Z^2 with 0 <= f(m,n) <= order of sign(m,n> * q^{f(m,n)}.
// Requires A > 0 and C > 0 (throws NotBoundedBelow); enumeration ranges come
// from completing the square per variable, then each point is tested exactly.
TruncatedSeries bilateral_sum(const QuadForm2& f, const SignFunctional& s, long order);

// Splits bilateral_sum(f, s) into per-coset components: entry r holds the
// residue of f on coset r and the sub-sum over that coset (computed from the
// transformed form and sign). Components sum to the full series and each is
// supported on its residue class mod `modulus`.
std::vector<std::pair<long, TruncatedSeries>> dissect_via_cosets(
    const QuadForm2& f, const SignFunctional& s, const CosetSystem& cs,
    long modulus, long order);

} // namespace qseries
