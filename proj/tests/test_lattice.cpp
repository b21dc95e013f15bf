#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qseries/lattice.hpp"
#include "qseries/parser.hpp"

using namespace qseries;

namespace {

// f(m,n) = 5m^2 + m + 5n^2 + 3n and its determinant-5 coset system.
const QuadForm2 kFormF{5, 1, 5, 3, 0};
const CosetSystem kDet5{{2, 1}, {-1, 2}, {{0, 0}, {1, 0}, {0, -1}, {0, 1}, {-1, 0}}};

// g(m,n) = 5m^2 + 2m + 5n^2 + 4n and its determinant-10 coset system.
const QuadForm2 kFormG{5, 2, 5, 4, 0};
const CosetSystem kDet10{{3, 1},
                         {-1, 3},
                         {{0, 0}, {0, -1}, {-1, 1}, {-1, 0}, {-1, -1},
                          {-1, -2}, {1, 1}, {1, 0}, {1, -1}, {0, 1}}};

const SignFunctional kSignM{1, 0, 0};  // (-1)^m

} // namespace

TEST_CASE("verify_partition") {
    CHECK(verify_partition(kDet5, 50));
    CHECK(verify_partition(kDet10, 50));

    const CosetSystem unit{{1, 0}, {0, 1}, {{0, 0}}};
    CHECK(verify_partition(unit, 10));

    SUBCASE("alternative representatives of the det-5 lattice") {
        // (k,0) lies in the lattice iff 5 | k, so these five are pairwise
        // incongruent and still tile the plane.
        const CosetSystem alt{{2, 1}, {-1, 2}, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}}};
        CHECK(verify_partition(alt, 30));
    }

    SUBCASE("congruent representatives fail") {
        const CosetSystem bad{{2, 1}, {-1, 2}, {{0, 0}, {5, 0}, {1, 0}, {2, 0}, {3, 0}}};
        CHECK_FALSE(verify_partition(bad, 10));
    }

    SUBCASE("wrong representative count fails") {
        const CosetSystem few{{2, 1}, {-1, 2}, {{0, 0}, {1, 0}}};
        CHECK_FALSE(verify_partition(few, 10));
    }

    SUBCASE("degenerate generators throw") {
        const CosetSystem degenerate{{2, 1}, {4, 2}, {{0, 0}}};
        CHECK_THROWS_AS(verify_partition(degenerate, 10), DegenerateLattice);
    }
}

TEST_CASE("residue_on_cosets") {
    CHECK(residue_on_cosets(kFormF, kDet5, 5, 50) ==
          std::vector<long>{0, 1, 2, 3, 4});
    // f is even-valued, so it is also constant mod 10 on the same cosets.
    CHECK(residue_on_cosets(kFormF, kDet5, 10, 50) ==
          std::vector<long>{0, 6, 2, 8, 4});
    CHECK(residue_on_cosets(kFormG, kDet10, 10, 50) ==
          std::vector<long>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});

    const QuadForm2 msq{1, 0, 1, 0, 0};
    const CosetSystem unit{{1, 0}, {0, 1}, {{0, 0}}};
    CHECK(residue_on_cosets(msq, unit, 1, 10) == std::vector<long>{0});

    SUBCASE("a wrong pairing is detected") {
        CHECK_THROWS_AS(residue_on_cosets(msq, kDet5, 5, 10), NonConstantResidue);
    }
}

TEST_CASE("transform_form reproduces the det-10 table") {
    struct Row {
        long sign;  // (-1)^{lambda^(1)}
        QuadForm2 form;
    };
    const Row expected[10] = {
        {+1, {50, 10, 50, 10, 0}},   {+1, {50, 0, 50, -20, 1}},
        {-1, {50, -10, 50, 50, 12}}, {-1, {50, -20, 50, 20, 3}},
        {-1, {50, -30, 50, -10, 4}}, {-1, {50, -40, 50, -40, 15}},
        {-1, {50, 50, 50, 30, 16}},  {-1, {50, 40, 50, 0, 7}},
        {-1, {50, 30, 50, -30, 8}},  {+1, {50, 20, 50, 40, 9}},
    };
    for (std::size_t r = 0; r < 10; ++r) {
        const AffineMap map = AffineMap::from_coset(kDet10, r);
        CHECK(transform_form(kFormG, map) == expected[r].form);
        // With s = (-1)^m the pulled-back sign is (-1)^{mu+nu+lambda^(1)};
        // the table's sign column is the constant part.
        const SignFunctional t = transform_sign(kSignM, map);
        CHECK(t.s == 1);
        CHECK(t.t == 1);
        CHECK((t.c == 1 ? -1 : +1) == expected[r].sign);
    }
}

TEST_CASE("transform_form behaviour") {
    SUBCASE("identity map") {
        const AffineMap id{{1, 0}, {0, 1}, {0, 0}};
        CHECK(transform_form(kFormF, id) == kFormF);
    }

    SUBCASE("evaluation commutes with the substitution") {
        std::mt19937_64 rng(31);
        std::uniform_int_distribution<long> small(-6, 6);
        for (int trial = 0; trial < 1000; ++trial) {
            const AffineMap map = AffineMap::from_coset(kDet10, trial % 10);
            const QuadForm2 g = transform_form(kFormG, map);
            const long mu = small(rng), nu = small(rng);
            const Vec2 p = map.apply(mu, nu);
            CHECK(g(mu, nu) == kFormG(p[0], p[1]));
        }
    }

    SUBCASE("cross terms are rejected") {
        const AffineMap skew{{1, 0}, {1, 1}, {0, 0}};
        CHECK_THROWS_AS(transform_form(kFormF, skew), CrossTermPresent);
    }
}

TEST_CASE("transform_sign") {
    const AffineMap map{{2, 1}, {-1, 2}, {1, 0}};
    // (-1)^m becomes (-1)^{2mu - nu + 1} = (-1)^{nu + 1}
    CHECK(transform_sign({1, 0, 0}, map) == SignFunctional{0, 1, 1});
    // (-1)^n with no translation becomes (-1)^{mu + 2nu} = (-1)^mu
    CHECK(transform_sign({0, 1, 0}, {{2, 1}, {-1, 2}, {0, 0}}) == SignFunctional{1, 0, 0});
    CHECK(transform_sign({0, 0, 0}, map) == SignFunctional{0, 0, 0});
}

TEST_CASE("bilateral_sum") {
    SUBCASE("order 0 keeps only the origin") {
        CHECK(bilateral_sum({1, 0, 1, 0, 0}, {0, 0, 0}, 0) == TruncatedSeries::one(0));
    }

    SUBCASE("u1*u3dag as a two-variable theta sum") {
        const auto lhs = bilateral_sum(kFormF, kSignM, 600);
        CHECK(lhs == evaluate("u_1*udag_3", 600));
        CHECK(lhs == evaluate("(-q^2,q^4,q^6,-q^8,q^10,q^10;q^10)", 600));
    }

    SUBCASE("u2*u4dag likewise") {
        CHECK(bilateral_sum(kFormG, kSignM, 600) == evaluate("u_2*udag_4", 600));
    }

    CHECK_THROWS_AS(bilateral_sum({0, 1, 1, 0, 0}, kSignM, 10), NotBoundedBelow);
    CHECK_THROWS_AS(bilateral_sum({1, 0, -1, 0, 0}, kSignM, 10), NotBoundedBelow);
}

namespace {

// Runs the full coset dissection and compares each component against the
// expected term (indexed by residue), checking support and reassembly too.
void check_dissection(const QuadForm2& form, const SignFunctional& sign,
                      const CosetSystem& cs, const std::vector<const char*>& expected,
                      long order) {
    const auto comps = dissect_via_cosets(form, sign, cs, 10, order);
    REQUIRE(comps.size() == cs.reps.size());

    TruncatedSeries sum = TruncatedSeries::zero(order);
    for (const auto& [residue, series] : comps) {
        for (long e = 0; e <= order; ++e)
            if (series.coeff(e) != 0) CHECK(e % 10 == residue);
        sum = sum + series;
    }
    CHECK(sum == bilateral_sum(form, sign, order));

    for (const auto& [residue, series] : comps) {
        CAPTURE(residue);
        CHECK(series == evaluate(expected[static_cast<std::size_t>(residue)], order));
    }
}

} // namespace

TEST_CASE("dissect_via_cosets reproduces all four dissection displays") {
    const long order = 1000;
    const SignFunctional sign_n{0, 1, 0};  // (-1)^n

    SUBCASE("u1*u3dag: five even components") {
        check_dissection(kFormF, kSignM, kDet5,
                         {"U_1*Phi", "0", "q^2*U_1*Rcal*Phi", "0", "-q^4*U_3*Phi", "0",
                          "-2*q^6*U_2*U_3", "0", "0*q^8", "0"},
                         order);
    }

    SUBCASE("u1dag*u3: same lattice, sign on the second variable") {
        CHECK(bilateral_sum(kFormF, sign_n, order) == evaluate("udag_1*u_3", order));
        check_dissection(kFormF, sign_n, kDet5,
                         {"U_1*Phi", "0", "-q^2*U_3*Rcal^-1*Phi", "0", "q^4*U_3*Phi", "0",
                          "0*q^6", "0", "-2*q^8*U_1*U_4", "0"},
                         order);
    }

    SUBCASE("u2*u4dag: ten components") {
        check_dissection(kFormG, kSignM, kDet10,
                         {"U_1^2", "q*U_2*Phi", "0*q^2", "-q^3*U_2^2", "-q^4*U_1*U_3",
                          "-q^15*U_4^2", "0*q^6", "-q^7*U_4*Phi", "-q^8*U_3^2",
                          "q^9*U_2*U_4"},
                         order);
    }

    SUBCASE("u2dag*u4: ten components with flipped odd terms") {
        CHECK(bilateral_sum(kFormG, sign_n, order) == evaluate("udag_2*u_4", order));
        check_dissection(kFormG, sign_n, kDet10,
                         {"U_1^2", "-q*U_2*Phi", "0*q^2", "q^3*U_2^2", "-q^4*U_1*U_3",
                          "q^15*U_4^2", "0*q^6", "q^7*U_4*Phi", "-q^8*U_3^2",
                          "-q^9*U_2*U_4"},
                         order);
    }
}
