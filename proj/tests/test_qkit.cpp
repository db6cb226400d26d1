#include "oracles.hpp"

#include <tqeuler/combinat/partition.hpp>
#include <tqeuler/qkit.hpp>

#include <gtest/gtest.h>

using namespace tqeuler;

namespace {
const laurent_poly Q = laurent_poly::q();
const laurent_poly T = laurent_poly::t();
} // namespace

TEST(QInt, Examples)
{
    EXPECT_EQ(q_int(0), laurent_poly());
    EXPECT_EQ(q_int(1), laurent_poly(1));
    EXPECT_EQ(q_int(3), laurent_poly(1) + Q + q_pow(2));
}

TEST(TqFactor, Examples)
{
    EXPECT_EQ(tq_factor(1), laurent_poly(1) - T * Q);
    EXPECT_EQ(tq_factor(2).substitute_t(1, 0), laurent_poly(1) - q_pow(2));
    EXPECT_EQ((tq_factor(1) * tq_factor(2)).coeff(2, 3), big_int(1));
}

TEST(Pochhammer, Examples)
{
    EXPECT_EQ(pochhammer({1, 1, 0}), laurent_poly(1));
    EXPECT_EQ(pochhammer({1, 1, 2}), laurent_poly(1) - Q - q_pow(2) + q_pow(3));
    EXPECT_EQ(pochhammer({-1, -1, 2}), laurent_poly(2) + 2 * q_pow(-1));
    EXPECT_EQ(q_factorial_poch(3), pochhammer({1, 1, 3}));
}

TEST(OddPochhammer, Examples)
{
    EXPECT_EQ(odd_pochhammer(0), laurent_poly(1));
    EXPECT_EQ(odd_pochhammer(1), laurent_poly(1) - Q);
    EXPECT_EQ(odd_pochhammer(2), (laurent_poly(1) - Q) * (laurent_poly(1) - q_pow(3)));
}

TEST(GaussBinom, Examples)
{
    EXPECT_EQ(gauss_binom(2, 1), laurent_poly(1) + Q);
    EXPECT_EQ(gauss_binom(4, 2), laurent_poly(1) + Q + 2 * q_pow(2) + q_pow(3) + q_pow(4));
    EXPECT_EQ(gauss_binom(3, 5), laurent_poly());
    EXPECT_EQ(gauss_binom(-1, 0), laurent_poly());
    EXPECT_EQ(gauss_binom(3, -1), laurent_poly());
    EXPECT_EQ(gauss_binom(2, 1, true), laurent_poly(1) + q_pow(2));
}

TEST(GaussBinom, MatchesFactorialRatio)
{
    for (int n = 0; n <= 12; ++n)
        for (int k = -1; k <= n + 1; ++k)
            ASSERT_EQ(gauss_binom(n, k), oracle::gauss_by_ratio(n, k)) << n << "," << k;
}

TEST(GaussBinom, PascalAndSymmetry)
{
    for (int n = 1; n <= 20; ++n)
        for (int k = 0; k <= n; ++k) {
            ASSERT_EQ(gauss_binom(n, k), gauss_binom(n - 1, k - 1) + q_pow(k) * gauss_binom(n - 1, k));
            ASSERT_EQ(gauss_binom(n, k), gauss_binom(n, n - k));
        }
}

TEST(GaussBinom, SquaredIsBaseQSquared)
{
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            ASSERT_EQ(gauss_binom(n, k, true), gauss_binom(n, k).q_to_power(2));
}

TEST(GaussBinom, CountsPartitionsInBox)
{
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) {
            ASSERT_EQ(box_size_polynomial(m, n), gauss_binom(m + n, m));
            ASSERT_EQ(oracle::box_by_words(m, n), gauss_binom(m + n, m));
        }
}

TEST(Ballot, Examples)
{
    EXPECT_EQ(ballot(1, 0), 1);
    EXPECT_EQ(ballot(1, 1), 1);
    EXPECT_EQ(ballot(2, 1), 3);
    EXPECT_EQ(ballot(3, 4), 0);
    EXPECT_EQ(ballot(3, -5), 0);
}

TEST(Ballot, NonnegativeAndTelescopes)
{
    for (int n = 0; n <= 15; ++n) {
        big_int sum = 0;
        for (int k = -(n + 1); k <= n; ++k) {
            if (k >= 0)
                ASSERT_GE(ballot(n, k), 0);
            sum += ballot(n, k);
        }
        // sum over k in [-(n+1), n] telescopes to C(2n, 2n+1) - C(2n, -1) = 0,
        // and over k >= 0 to C(2n, n).
        ASSERT_EQ(sum, 0);
        big_int upper = 0;
        for (int k = 0; k <= n; ++k)
            upper += ballot(n, k);
        ASSERT_EQ(upper, binomial(2 * n, n));
    }
}

TEST(AkPoly, Examples)
{
    EXPECT_EQ(a_k_poly(0), laurent_poly(1) - Q);
    EXPECT_EQ(a_k_poly(1), laurent_poly(1) - 2 * Q + q_pow(3));
}

TEST(AkPoly, DivisibleByOneMinusQ)
{
    for (int k = 0; k <= 8; ++k) {
        ASSERT_NO_THROW(div_exact(a_k_poly(k), laurent_poly(1) - Q));
        ASSERT_NO_THROW(div_exact(a_k_poly(k).invert_variables(), laurent_poly(1) - q_pow(-1)));
    }
}

TEST(ThetaSum, Values)
{
    EXPECT_EQ(theta_sum(0), laurent_poly(1));
    EXPECT_EQ(theta_sum(2), laurent_poly(1) - 2 * Q + 2 * q_pow(4));
    EXPECT_EQ(theta_sum_inverse(1), laurent_poly(1) - 2 * q_pow(-1));
}
