#include "oracles.hpp"

#include <tqeuler/cfrac.hpp>
#include <tqeuler/formulas/euler.hpp>
#include <tqeuler/formulas/lemmas.hpp>
#include <tqeuler/formulas/tk.hpp>
#include <tqeuler/formulas/zeng.hpp>
#include <tqeuler/qkit.hpp>
#include <tqeuler/rational.hpp>

#include <gtest/gtest.h>

#include <array>

using namespace tqeuler;

namespace {
const laurent_poly Q = laurent_poly::q();
const laurent_poly T = laurent_poly::t();

const std::array<std::pair<const char*, const char*>, 5> points{{
    {"1/2", "1/3"}, {"2", "-1/3"}, {"-3", "2/5"}, {"5/7", "3"}, {"-1/4", "-3"}}};
} // namespace

TEST(Tk, SmallValues)
{
    EXPECT_EQ(t_rec(0), laurent_poly(1));
    EXPECT_EQ(t_rec(1), laurent_poly(1) - Q - T * Q);
    EXPECT_EQ(t_rec(2), laurent_poly(1) - Q - T * Q - q_pow(3) + laurent_poly::monomial(1, 2, 3) + q_pow(4) +
                            laurent_poly::monomial(1, 1, 4));
    EXPECT_EQ(tk(3).k, 3);
    EXPECT_EQ(tk(3).poly, t_rec(3));
    EXPECT_THROW(t_rec(-1), error);
}

TEST(Tk, ClosedFormMatchesRecurrence)
{
    for (int k = 0; k <= 8; ++k)
        ASSERT_EQ(t_closed(k), t_rec(k)) << k;
}

TEST(Tk, FlippedSignBreaksClosedForm)
{
    bool differs = false;
    for (int k = 0; k <= 6; ++k)
        differs = differs || detail::t_closed_impl(k, true) != t_rec(k);
    EXPECT_TRUE(differs);
}

// Frozen table: {k, min t-degree, max t-degree, min q-degree, max q-degree, term count}.
TEST(Tk, DegreeTable)
{
    const int table[9][6] = {{0, 0, 0, 0, 0, 1},    {1, 0, 1, 0, 1, 3},    {2, 0, 2, 0, 4, 7},
                             {3, 0, 3, 0, 9, 17},   {4, 0, 4, 0, 16, 38},  {5, 0, 5, 0, 25, 76},
                             {6, 0, 6, 0, 36, 135}, {7, 0, 7, 0, 49, 223}, {8, 0, 8, 0, 64, 338}};
    for (const auto& row : table) {
        const laurent_poly p = t_rec(row[0]);
        const auto lo = p.min_exponents();
        const auto hi = p.max_exponents();
        ASSERT_TRUE(lo && hi);
        EXPECT_EQ(lo->t, row[1]);
        EXPECT_EQ(hi->t, row[2]);
        EXPECT_EQ(lo->q, row[3]);
        EXPECT_EQ(hi->q, row[4]);
        EXPECT_EQ(static_cast<int>(p.size()), row[5]);
    }
}

TEST(Tk, FunctionalEquation)
{
    for (int k = 1; k <= 8; ++k)
        ASSERT_TRUE(t_functional_check(k)) << k;
    EXPECT_FALSE(t_functional_holds(2, t_rec(2), t_rec(2)));
    EXPECT_THROW(t_functional_check(0), error);
}

TEST(TSpecial, Examples)
{
    const auto r = t_special({1, -1}, 2);
    EXPECT_EQ(r.value, q_pow(4));
    EXPECT_EQ(r.branch, special_branch::pos_neg);
    EXPECT_EQ(to_string(r.branch), "+-b");
    EXPECT_EQ(t_special({1, 0}, 1).value, laurent_poly(1) - 2 * Q);
    EXPECT_EQ(t_special({-1, 0}, 5).value, laurent_poly(1));
    EXPECT_EQ(t_special({-1, 2}, 3).branch, special_branch::neg_pos);
    EXPECT_EQ(t_special({-1, -2}, 3).branch, special_branch::neg_neg);
    EXPECT_THROW(t_special({2, 0}, 1), error);
}

TEST(TSpecial, KZeroIsAnsweredByDefinition)
{
    for (int eps : {1, -1})
        for (int b = -4; b <= 4; ++b) {
            const auto r = t_special({eps, b}, 0);
            ASSERT_EQ(r.value, laurent_poly(1));
            ASSERT_EQ(r.branch, special_branch::by_definition);
        }
    // the negative-b formulas as written vanish at k = 0
    for (int b = 1; b <= 4; ++b) {
        EXPECT_EQ(t_special_negative_literal(1, b, 0), laurent_poly());
        EXPECT_EQ(t_special_negative_literal(-1, b, 0), laurent_poly());
        EXPECT_EQ(t_special_negative_literal(1, b, 2), t_special({1, -b}, 2).value);
    }
}

TEST(TSpecial, AllQuadrantsMatchSubstitution)
{
    for (int eps : {1, -1})
        for (int b = -4; b <= 4; ++b)
            for (int k = 0; k <= 6; ++k)
                ASSERT_EQ(t_special({eps, b}, k).value, t_rec(k).substitute_t(eps, b)) << eps << " " << b << " " << k;
}

TEST(TSpecial, ProdingerAndKernels)
{
    for (int b = 1; b <= 4; ++b)
        for (int k = 0; k <= 6; ++k)
            ASSERT_EQ(t_prodinger(b, k), t_rec(k).substitute_t(1, b));
    for (int k = 0; k <= 8; ++k) {
        ASSERT_EQ(t_minus_q(k), t_rec(k).substitute_t(-1, 1));
        ASSERT_EQ(t_minus_inv_q(k), t_rec(k).substitute_t(-1, -1));
        ASSERT_EQ(t_rec(k).substitute_t(1, 0), theta_sum(k));
        ASSERT_EQ(t_rec(k).substitute_t(1, 1), div_exact(a_k_poly(k), laurent_poly(1) - Q));
    }
}

TEST(TSpecial, AlphaBetaRecurrences)
{
    for (int eps : {1, -1})
        for (int b = 1; b <= 5; ++b)
            for (int k = 1; k <= 5; ++k) {
                ASSERT_TRUE(alpha_recurrence_holds(eps, b, k));
                ASSERT_TRUE(beta_recurrence_holds(eps, b, k));
            }
}

TEST(Euler, SmallValues)
{
    EXPECT_EQ(e_main2(0), laurent_poly(1));
    EXPECT_EQ(e_main2(1), laurent_poly(1) - Q - T * Q + T * q_pow(2));
    EXPECT_EQ(e_ks(1), e_main2(1));
    EXPECT_EQ(e_jv_mu(1), e_main2(1));
}

TEST(Euler, AllFormulasAgree)
{
    for (int n = 0; n <= 8; ++n) {
        const laurent_poly e = euler_hat(n);
        ASSERT_EQ(e_main2(n), e) << n;
        ASSERT_EQ(e_ks(n), e) << n;
        if (n <= 6)
            ASSERT_EQ(e_jv_mu(n), e) << n;
    }
}

TEST(Euler, ShiftedExponentBreaksSingleSum)
{
    bool differs = false;
    for (int n = 0; n <= 8; ++n)
        differs = differs || detail::e_ks_impl(n, true) != euler_hat(n);
    EXPECT_TRUE(differs);
}

TEST(Euler, Specializations)
{
    for (int n = 0; n <= 8; ++n) {
        const laurent_poly e = euler_hat(n);
        ASSERT_EQ(e_seq(n), e.substitute_t(1, 0));
        ASSERT_EQ(e_tan(n), e.substitute_t(1, 1));
        ASSERT_EQ(dn_tr(n), dn_hat(n));
        ASSERT_EQ(e_minus_q(n), e.substitute_t(-1, 1));
        ASSERT_EQ(e_minus_inv_q(n), e.substitute_t(-1, -1));
    }
}

TEST(Euler, OriginalFormsAgree)
{
    for (int n = 0; n <= 6; ++n) {
        ASSERT_EQ(e_jv_original_even(n), e_seq(n));
        ASSERT_EQ(e_jv_original_odd(n), (laurent_poly(1) - Q) * e_tan(n));
    }
}

TEST(Euler, SecantAndTangentAtQOne)
{
    const auto zz = oracle::zigzag(9);
    for (int n = 0; n <= 4; ++n) {
        ASSERT_EQ(rational_eval(en_even_q(n), 1, 1), big_rational(zz[static_cast<std::size_t>(2 * n)]));
        ASSERT_EQ(rational_eval(en_odd_q(n), 1, 1), big_rational(zz[static_cast<std::size_t>(2 * n + 1)]));
    }
}

TEST(Lemmas, DistBoxClosedFormSmall)
{
    EXPECT_EQ(dist_box_closed(1, 1), laurent_poly(1) + T * Q);
    EXPECT_EQ(dist_box_closed(0, 0), laurent_poly(1));
    EXPECT_THROW(dist_box_closed(-1, 2), error);
}

TEST(Zeng, RatioReadingMatchesMoments)
{
    for (int n = 0; n <= 4; ++n)
        for (const auto& [ts, qs] : points) {
            const big_rational t0(ts);
            const big_rational q0(qs);
            const big_rational want = rational_eval(euler_hat(n), t0, q0) / rational_pow(1 - q0, 2 * n);
            ASSERT_EQ(e_zeng_numeric(n, t0, q0), want) << n << " " << ts << " " << qs;
        }
}

TEST(Zeng, ShiftedIntegerReadingDoesNot)
{
    for (int n = 1; n <= 4; ++n) {
        int mismatches = 0;
        for (const auto& [ts, qs] : points) {
            const big_rational t0(ts);
            const big_rational q0(qs);
            const big_rational want = rational_eval(euler_hat(n), t0, q0) / rational_pow(1 - q0, 2 * n);
            mismatches += e_zeng_numeric(n, t0, q0, zeng_reading::shifted_q_int) != want;
        }
        EXPECT_GT(mismatches, 0) << n;
    }
}

TEST(Zeng, RejectsDegeneratePoints)
{
    // t^2 q^4 = 1 makes a [2k+2i+2]_{t^2,q} factor vanish
    for (auto [t0, q0] : {std::pair{big_rational(0), big_rational(2)}, std::pair{big_rational(2), big_rational(0)},
                          std::pair{big_rational(2), big_rational(1)}, std::pair{make_rational(1, 4), big_rational(-2)}}) {
        try {
            e_zeng_numeric(2, t0, q0);
            ADD_FAILURE() << t0 << "," << q0;
        } catch (const error& e) {
            EXPECT_EQ(e.code(), errc::zero_denominator);
        }
    }
}
