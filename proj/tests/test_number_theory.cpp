#include <gtest/gtest.h>

#include "thetaval/number_theory.hpp"
#include "thetaval/qseries.hpp"

using namespace thetaval;

TEST(Chi4, ValuesModFour) {
    EXPECT_EQ(chi4(1), 1);
    EXPECT_EQ(chi4(3), -1);
    EXPECT_EQ(chi4(2), 0);
    EXPECT_EQ(chi4(4), 0);
    EXPECT_EQ(chi4(-1), -1);
    EXPECT_EQ(chi4(-3), 1);
    static_assert(chi4(5) == Chi4Value(1));
}

TEST(Chi4, RejectsOutOfRangeValue) { EXPECT_THROW(Chi4Value(2), std::invalid_argument); }

TEST(Chi4, CompletelyMultiplicative) {
    for (std::int64_t m = -50; m <= 200; ++m)
        for (std::int64_t n = 1; n <= 200; ++n) ASSERT_EQ(chi4(m * n), chi4(m) * chi4(n)) << m << " " << n;
}

TEST(Isqrt, FloorAroundSquares) {
    for (std::int64_t k = 0; k <= 3000; ++k) {
        EXPECT_EQ(isqrt(k * k), k);
        if (k > 0) {
            EXPECT_EQ(isqrt(k * k - 1), k - 1);
        }
    }
    EXPECT_EQ(isqrt(std::int64_t{3037000499} * 3037000499), 3037000499);
}

TEST(TwoSquares, SmallValues) {
    EXPECT_EQ(r_divisor(1), 4);
    EXPECT_EQ(r_divisor(2), 4);
    EXPECT_EQ(r_divisor(3), 0);
    EXPECT_EQ(r_divisor(5), 8);
    EXPECT_EQ(r_divisor(25), 12);
    EXPECT_EQ(r_divisor(65), 16);
    EXPECT_EQ(r_bruteforce(65), 16);
    EXPECT_EQ(r_divisor(21), 0);
}

TEST(TwoSquares, RejectsNonPositive) {
    EXPECT_THROW(r_divisor(0), std::domain_error);
    EXPECT_THROW(r_bruteforce(-4), std::domain_error);
}

TEST(TwoSquares, BruteForceEqualsDivisorSum) {
    for (std::int64_t n = 1; n <= 3000; ++n) ASSERT_EQ(r_bruteforce(n), r_divisor(n)) << n;
}

TEST(TwoSquares, DivisibleByFourAndPrimeRule) {
    for (std::int64_t n = 1; n <= 5000; ++n) EXPECT_EQ(r_divisor(n) % 4, 0) << n;
    // an odd prime p is a sum of two squares iff p = 1 mod 4, then in 8 ordered ways
    for (std::int64_t p : {5, 13, 17, 29, 37, 41, 9973}) EXPECT_EQ(r_divisor(p), 8) << p;
    for (std::int64_t p : {3, 7, 11, 19, 23, 9967}) EXPECT_EQ(r_divisor(p), 0) << p;
}

TEST(TwoSquares, ThetaSquaredCoefficients) {
    const std::size_t order = 512;
    const QSeries t = theta_qseries(order);
    const QSeries sq = qs_mul(t, t);
    EXPECT_EQ(sq[0], 1);
    for (std::size_t n = 1; n <= order; ++n) ASSERT_EQ(sq[n], r_divisor(static_cast<std::int64_t>(n))) << n;
}
