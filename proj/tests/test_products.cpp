#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qseries/products.hpp"

using namespace qseries;

namespace {

// Euler's pentagonal-number expansion of (q;q), as an independent check on
// the factor-by-factor product: sum_k (-1)^k q^{k(3k-1)/2} over all k in Z.
TruncatedSeries pentagonal_series(long order) {
    std::vector<mpz_class> c(static_cast<std::size_t>(order) + 1);
    for (long k = -order - 1; k <= order + 1; ++k) {
        const long e = k * (3 * k - 1) / 2;
        if (e < 0 || e > order) continue;
        if (k & 1)
            c[e] -= 1;
        else
            c[e] += 1;
    }
    return TruncatedSeries(std::move(c));
}

} // namespace

TEST_CASE("expand_pochhammer") {
    SUBCASE("(q;q) matches the pentagonal pattern") {
        const auto euler = expand_pochhammer({+1, 1, 1}, 200);
        CHECK(euler == pentagonal_series(200));
        // 1 - q - q^2 + q^5 + q^7 at order 7
        const auto head = expand_pochhammer({+1, 1, 1}, 7);
        CHECK(head.coeff(0) == 1);
        CHECK(head.coeff(1) == -1);
        CHECK(head.coeff(2) == -1);
        CHECK(head.coeff(3) == 0);
        CHECK(head.coeff(4) == 0);
        CHECK(head.coeff(5) == 1);
        CHECK(head.coeff(6) == 0);
        CHECK(head.coeff(7) == 1);
    }

    SUBCASE("offset zero") {
        CHECK(expand_pochhammer({+1, 0, 100}, 300).is_zero());
        const auto doubled = expand_pochhammer({-1, 0, 50}, 300);
        CHECK(doubled == mpz_class(2) * expand_pochhammer({-1, 50, 50}, 300));
    }
}

TEST_CASE("expand_product") {
    CHECK(expand_product({}, 10) == TruncatedSeries::one(10));

    SUBCASE("X*Y = (q^2;q^2)/(q^10;q^10)") {
        ProductSpec xy = named_product_spec("X");
        for (const auto& f : named_product_spec("Y").factors) xy.factors.push_back(f);
        const auto lhs = expand_product(xy, 400);
        const auto rhs = expand_pochhammer({+1, 2, 2}, 400) *
                         invert(expand_pochhammer({+1, 10, 10}, 400));
        CHECK(lhs == rhs);
    }

    SUBCASE("(q^a;q^b)(-q^a;q^b) = (q^2a;q^2b)") {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<long> small(1, 12);
        for (int trial = 0; trial < 20; ++trial) {
            const long a = small(rng), b = small(rng);
            const auto lhs = expand_product({{{+1, a, b}, {-1, a, b}}}, 240);
            CHECK(lhs == expand_pochhammer({+1, 2 * a, 2 * b}, 240));
        }
    }
}

TEST_CASE("theta_jtp") {
    SUBCASE("unsigned sum with b = 0 is 1 + 2q^5 + 2q^20 + 2q^45 + ...") {
        const auto s = theta_jtp(5, 0, false, 50);
        CHECK(s.coeff(0) == 1);
        CHECK(s.coeff(5) == 2);
        CHECK(s.coeff(20) == 2);
        CHECK(s.coeff(45) == 2);
        mpz_class total;
        for (long n = 0; n <= 50; ++n) total += abs(s.coeff(n));
        CHECK(total == 7);
    }

    SUBCASE("triple product forms agree with the bilateral sums") {
        for (long k = 0; k <= 4; ++k) {
            const auto u_sum = theta_jtp(5, k, true, 600);
            const auto u_prod =
                expand_product({{{+1, 5 - k, 10}, {+1, 5 + k, 10}, {+1, 10, 10}}}, 600);
            CHECK(u_sum == u_prod);

            const auto udag_sum = theta_jtp(5, k, false, 600);
            const auto udag_prod =
                expand_product({{{-1, 5 - k, 10}, {-1, 5 + k, 10}, {+1, 10, 10}}}, 600);
            CHECK(udag_sum == udag_prod);
        }
    }

    SUBCASE("U_5 vanishes, U_0 is Phi") {
        CHECK(theta_jtp(50, 50, true, 500).is_zero());
        CHECK(named("U_0", 500) == named("Phi", 500));
    }

    CHECK_THROWS_AS(theta_jtp(0, 1, true, 10), Error);
}

TEST_CASE("named series") {
    CHECK(named("Phi", 120).coeff(0) == 1);
    CHECK(named("R", 80).coeff(0) == 1);

    SUBCASE("Rcal = U1*U4/(U2*U3)") {
        const auto lhs = named("Rcal", 500) * named("U_2", 500) * named("U_3", 500);
        CHECK(lhs == named("U_1", 500) * named("U_4", 500));
    }

    SUBCASE("X = (q^4,q^6;q^10) * R") {
        const auto rhs = expand_product({{{+1, 4, 10}, {+1, 6, 10}}}, 300) * named("R", 300);
        CHECK(named("X", 300) == rhs);
    }

    SUBCASE("Y = (q^2,q^8;q^10) / R") {
        const auto rhs = expand_product({{{+1, 2, 10}, {+1, 8, 10}}}, 300) *
                         invert(named("R", 300));
        CHECK(named("Y", 300) == rhs);
    }

    SUBCASE("X*phi_10^4 and Y*phi_10^4 as four-fold theta products") {
        const long n = 400;
        const auto phi4 = pow(named("phi_10", n), 4);
        CHECK(named("X", n) * phi4 == named("u_1", n) * named("udag_2", n) *
                                          named("udag_3", n) * named("u_4", n));
        CHECK(named("Y", n) * phi4 == named("udag_1", n) * named("u_2", n) *
                                          named("u_3", n) * named("udag_4", n));
    }

    SUBCASE("1/X = Y*phi_10/phi_2 and 1/Y = X*phi_10/phi_2") {
        const long n = 400;
        const auto ratio = named("phi_10", n) * invert(named("phi_2", n));
        CHECK(invert(named("X", n)) == named("Y", n) * ratio);
        CHECK(invert(named("Y", n)) == named("X", n) * ratio);
    }

    SUBCASE("udag_1 differs from u_1(-q)") {
        const auto udag = named("udag_1", 100);
        const auto neg = negate_variable(named("u_1", 100));
        CHECK(udag != neg);
    }

    SUBCASE("negating q swaps the dagger across a product") {
        const long n = 300;
        const auto lhs = negate_variable(named("u_2", n) * named("udag_4", n));
        CHECK(lhs == named("udag_2", n) * named("u_4", n));
    }

    SUBCASE("1/phi under q -> q^2 is 1/phi_2") {
        const auto lhs = substitute_power(invert(named("phi", 20)), 2);
        CHECK(lhs.order() == 40);
        CHECK(lhs == invert(named("phi_2", 40)));
    }

    SUBCASE("aliases and variant spellings") {
        CHECK(named("alpha", 200) == named("U_1", 200));
        CHECK(named("delta", 200) == named("U_4", 200));
        CHECK(named("u_dag_3", 200) == named("udag_3", 200));
        CHECK(named("phi", 60) == named("phi_1", 60));
    }

    CHECK_THROWS_AS(named("nope", 10), UnknownName);
    CHECK_THROWS_AS(named("u_7", 10), UnknownName);
    CHECK_THROWS_AS(named("phi_0", 10), UnknownName);
}
