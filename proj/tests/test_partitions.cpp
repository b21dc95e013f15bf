#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qseries/partitions.hpp"
#include "qseries/products.hpp"

using namespace qseries;

TEST_CASE("chi5") {
    CHECK(chi5(1) == 1);
    CHECK(chi5(4) == 1);
    CHECK(chi5(2) == -1);
    CHECK(chi5(7) == -1);
    CHECK(chi5(10) == 0);
    CHECK(chi5(0) == 0);
}

TEST_CASE("enumerate_signed_sum") {
    CHECK(enumerate_signed_sum(0, PartitionWeight::Plain) == 1);
    CHECK(enumerate_signed_sum(0, PartitionWeight::Dagger) == 1);
    // partitions of 2: (2) -> -1, (1,1) -> +1
    CHECK(enumerate_signed_sum(2, PartitionWeight::Plain) == 0);
    // partitions of 3: (3) -> -1, (2,1) -> -1, (1,1,1) -> +1
    CHECK(enumerate_signed_sum(3, PartitionWeight::Plain) == -1);
    CHECK(enumerate_signed_sum(6, PartitionWeight::Dagger) == 0);
    CHECK(enumerate_signed_sum(2, PartitionWeight::Dagger) == 2);

    CHECK_THROWS_AS(enumerate_signed_sum(41, PartitionWeight::Plain), CapExceeded);
    CHECK_NOTHROW(enumerate_signed_sum(41, PartitionWeight::Plain, 45));
}

TEST_CASE("dp_signed_sums") {
    const auto plain = dp_signed_sums(4, PartitionWeight::Plain);
    CHECK(plain == std::vector<mpz_class>{1, 1, 0, -1, 1});

    const auto dagger = dp_signed_sums(2, PartitionWeight::Dagger);
    CHECK(dagger == std::vector<mpz_class>{1, -1, 2});
}

TEST_CASE("oracle agreement up to the enumeration cap") {
    for (auto variant : {PartitionWeight::Plain, PartitionWeight::Dagger}) {
        const auto dp = dp_signed_sums(40, variant);
        for (long n = 0; n <= 40; ++n)
            CHECK(enumerate_signed_sum(n, variant) == dp[n]);
    }
}

TEST_CASE("series agreement to 500") {
    const long n = 500;
    const auto px = invert(named("X", n));
    const auto plain = dp_signed_sums(n, PartitionWeight::Plain);
    const auto py = invert(named("Y", n));
    const auto dagger = dp_signed_sums(n, PartitionWeight::Dagger);
    for (long i = 0; i <= n; ++i) {
        CHECK(px.coeff(i) == plain[i]);
        CHECK(py.coeff(i) == dagger[i]);
    }
}

TEST_CASE("theorem statements at oracle level") {
    SUBCASE("vanishing residues, by enumeration") {
        for (long n = 2; n <= 40; n += 10)
            CHECK(enumerate_signed_sum(n, PartitionWeight::Plain) == 0);
        for (long n = 6; n <= 40; n += 10)
            CHECK(enumerate_signed_sum(n, PartitionWeight::Dagger) == 0);
    }

    SUBCASE("component symmetry, by dynamic program") {
        const auto plain = dp_signed_sums(500, PartitionWeight::Plain);
        const auto dagger = dp_signed_sums(500, PartitionWeight::Dagger);
        for (long n = 0; n <= 500; n += 10) CHECK(dagger[n] == plain[n]);
        for (long n = 8; n <= 500; n += 10) CHECK(dagger[n] == -plain[n]);
    }
}
